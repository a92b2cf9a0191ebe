#pragma once

#include <string>

#include "ysc/chains.hpp"

namespace ysc::seedlang {

/// The parsed form of a seed file. Structurally identical to SeedSpec; kept
/// as its own type so parsing, rendering and compilation stay separable.
struct SeedFile {
  int n = 0;
  Predicate initial;
  std::vector<SeedClass> classes;
};

/// Parses the seed DSL:
///
///   seed n = 3
///   initial: e3 == 0 && e2 == 1 mod 2 && e1 - e2 != 2 mod 3
///   class i: e2 - e3 == 1 mod 2 && e1 - e2 == 1 mod 3 -> offset (0,1,2)
///
/// e1 is a_1 (the largest entry), eN is a_n (the smallest); offsets are
/// listed smallest-entry-first; "#" starts a comment; the congruence signs
/// may be written "==" / "!=" or "≡" / "!≡". Throws ParseError with
/// line and (byte) column on syntax errors, offsets that are not
/// permutations, entry indices outside 1..n, or moduli below 1.
SeedFile parse(const std::string& text);

/// Canonical rendering; parse(render(f)) == f byte-stably.
std::string render(const SeedFile& f);

SeedSpec to_seedspec(const SeedFile& f);

}  // namespace ysc::seedlang
