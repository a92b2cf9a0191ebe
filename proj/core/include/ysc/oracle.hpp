#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ysc/errors.hpp"

namespace ysc::oracle {

/// Rank-generating data of L(n,m), computed by direct dynamic programming
/// over bounded partitions. Deliberately shares no code with the q-polynomial
/// module: this is the independent ground truth.
struct RankProfile {
  int n = 0;
  int m = 0;
  /// counts[s] = number of partitions of s fitting in the n x m box,
  /// s = 0 .. n*m.
  std::vector<std::int64_t> counts;

  bool palindromic() const;
  bool unimodal() const;
  std::int64_t total() const;
};

RankProfile rank_profile(int n, int m);

/// counts[floor(n*m/2)]: the number of chains in any symmetric chain
/// decomposition of L(n,m).
std::int64_t middle_rank_count(int n, int m);

struct CharacterCheck {
  int n = 0;
  int r = 0;
  bool poly_equal = false;   // rank profile recentred == Gaussian binomial
  bool decomp_equal = false; // its peel == character from the crystal
  bool pass() const { return poly_equal && decomp_equal; }
  std::string to_json_string() const;
};

/// Asserts that the brute-force rank profile of L(n, r+1-n), recentred by
/// nm/2, matches q_binom(r+1, n), and that peeling it reproduces the
/// character extracted from the crystal build.
CharacterCheck cross_check_character(int n, int r);

}  // namespace ysc::oracle
