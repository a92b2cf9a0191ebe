#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ysc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverflowError : Error { using Error::Error; };
struct NotUnimodalError : Error { using Error::Error; };

struct NegativeEntryError : Error { using Error::Error; };
struct RepeatedEntryError : Error { using Error::Error; };
struct NotIncreasingError : Error { using Error::Error; };
struct NotInRangeError : Error { using Error::Error; };
struct UnderflowError : Error { using Error::Error; };

struct NoBuiltinSeedError : Error { using Error::Error; };
struct SeedNotPartitionError : Error { using Error::Error; };
struct NotInitialError : Error { using Error::Error; };

struct ParseError : Error {
  int line = 0;
  int col = 0;
  ParseError(int line_, int col_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("64-bit addition overflow");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("64-bit multiplication overflow");
  return out;
}

}  // namespace ysc
