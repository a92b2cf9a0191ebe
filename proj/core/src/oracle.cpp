#include "ysc/oracle.hpp"

#include <numeric>

#include "json.hpp"
#include "ysc/plethysm.hpp"
#include "ysc/qchar.hpp"

namespace ysc::oracle {

bool RankProfile::palindromic() const {
  for (std::size_t s = 0; s < counts.size(); ++s)
    if (counts[s] != counts[counts.size() - 1 - s]) return false;
  return true;
}

bool RankProfile::unimodal() const {
  std::size_t peak = 0;
  while (peak + 1 < counts.size() && counts[peak] <= counts[peak + 1]) ++peak;
  for (std::size_t s = peak; s + 1 < counts.size(); ++s)
    if (counts[s] < counts[s + 1]) return false;
  return true;
}

std::int64_t RankProfile::total() const {
  std::int64_t t = 0;
  for (std::int64_t c : counts) t = checked_add(t, c);
  return t;
}

RankProfile rank_profile(int n, int m) {
  if (n < 0 || m < 0) throw Error("rank_profile: negative box dimension");
  RankProfile out;
  out.n = n;
  out.m = m;
  const std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(m);
  // table[j][s]: partitions of s into at most j parts, each in [1, v],
  // iterated over v = 1..n via p(s, j, v) = p(s, j, v-1) + p(s-v, j-1, v).
  std::vector<std::vector<std::int64_t>> table(
      static_cast<std::size_t>(m) + 1, std::vector<std::int64_t>(total + 1, 0));
  table[0][0] = 1;
  for (std::size_t j = 1; j <= static_cast<std::size_t>(m); ++j) table[j][0] = 1;
  for (int v = 1; v <= n; ++v)
    for (std::size_t j = 1; j <= static_cast<std::size_t>(m); ++j)
      for (std::size_t s = static_cast<std::size_t>(v); s <= total; ++s)
        table[j][s] = checked_add(table[j][s], table[j - 1][s - static_cast<std::size_t>(v)]);
  out.counts = std::move(table[static_cast<std::size_t>(m)]);
  return out;
}

std::int64_t middle_rank_count(int n, int m) {
  const RankProfile p = rank_profile(n, m);
  return p.counts[static_cast<std::size_t>(n) * static_cast<std::size_t>(m) / 2];
}

std::string CharacterCheck::to_json_string() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["r"] = r;
  j["poly_equal"] = poly_equal;
  j["decomp_equal"] = decomp_equal;
  j["result"] = pass() ? "pass" : "fail";
  return j.dump();
}

CharacterCheck cross_check_character(int n, int r) {
  CharacterCheck out;
  out.n = n;
  out.r = r;
  const int m = r + 1 - n;
  const RankProfile prof = rank_profile(n, m);
  qchar::CenteredPoly poly;
  const int degree = n * m;
  for (int s = 0; s <= degree; ++s)
    poly.add_term(2 * s - degree, prof.counts[static_cast<std::size_t>(s)]);
  out.poly_equal = poly == qchar::q_binom(r + 1, n);
  out.decomp_equal = qchar::peel(poly) == plethysm::character(n, r);
  return out;
}

}  // namespace ysc::oracle
