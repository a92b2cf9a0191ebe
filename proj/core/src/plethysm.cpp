#include "ysc/plethysm.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ysc/oracle.hpp"

namespace ysc::plethysm {

std::vector<Tableau> hw_closed_form(int n, int r) {
  std::vector<Tableau> out;
  switch (n) {
    case 2:
      // <0, a> with a odd.
      for (int a = 1; a <= r; a += 2) out.push_back(Tableau::from_sorted({0, a}));
      break;
    case 3:
      // <c, c+1, a> with a >= 4c+2 and a != 4c+3.
      for (int c = 0; c + 1 < r; ++c)
        for (int a = 4 * c + 2; a <= r; ++a) {
          if (a == 4 * c + 3 || a <= c + 1) continue;
          out.push_back(Tableau::from_sorted({c, c + 1, a}));
        }
      break;
    case 4:
      // <d, d+1, b, a> with b and d+1 of opposite parity, a >= b+2d+1 and
      // a != b+2d+2.
      for (int d = 0; d + 1 < r; ++d)
        for (int b = d + 2; b < r; ++b) {
          if ((b - (d + 1)) % 2 == 0) continue;
          for (int a = std::max(b + 1, b + 2 * d + 1); a <= r; ++a) {
            if (a == b + 2 * d + 2) continue;
            out.push_back(Tableau::from_sorted({d, d + 1, b, a}));
          }
        }
      break;
    default:
      throw Error("hw_closed_form: unsupported n = " + std::to_string(n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

qchar::QIntCombo character(int n, int r) {
  qchar::QIntCombo out;
  if (n == 0) {
    out.add(1, 1);
    return out;
  }
  if (n == 1) {
    out.add(r + 1, 1);
    return out;
  }
  const Operator op(n);
  for (const Tableau& t : enumerate_tableaux(n, r))
    if (!op.e(t)) out.add(wt2(t, r) + 1, 1);
  return out;
}

std::int64_t coefficient(int n, int r, int k) {
  if (k < 0) return 0;
  const qchar::QIntCombo ch = character(n, r);
  const auto it = ch.parts().find(k + 1);
  return it == ch.parts().end() ? 0 : it->second;
}

std::string coefficient_csv(int n, int r) {
  std::ostringstream os;
  os << "n,r,k,coefficient\n";
  const qchar::QIntCombo ch = character(n, r);
  for (const auto& [len, mult] : ch.parts())
    os << n << "," << r << "," << (len - 1) << "," << mult << "\n";
  return os.str();
}

std::string ConstituentsReport::to_json_string() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["r"] = r;
  j["count"] = count;
  j["oracle"] = oracle;
  if (closed_form >= 0) j["closed_form"] = closed_form;
  if (second_proof >= 0) j["second_proof"] = second_proof;
  j["warnings"] = warnings;
  return j.dump();
}

ConstituentsReport constituents(int n, int r) {
  ConstituentsReport rep;
  rep.n = n;
  rep.r = r;
  rep.count = character(n, r).constituent_count();
  rep.oracle = oracle::middle_rank_count(n, r + 1 - n);
  if (rep.count != rep.oracle)
    rep.warnings.push_back("component count " + std::to_string(rep.count) +
                           " differs from middle-rank count " +
                           std::to_string(rep.oracle));
  switch (n) {
    case 2:
      rep.closed_form = (r + 1) / 2;
      break;
    case 3: {
      rep.closed_form = static_cast<std::int64_t>(r + 1) * (r + 1) / 8;
      // The intermediate expression of the second counting proof:
      // with C = ceil((r - 2*[r even])/4), (r(r+1) - 2C(r+2-2C))/6.
      const int num = r - 2 * (1 - r % 2);
      const std::int64_t C = (num + 3) / 4;
      rep.second_proof =
          (static_cast<std::int64_t>(r) * (r + 1) - 2 * C * (r + 2 - 2 * C)) / 6;
      if (rep.second_proof != rep.count)
        rep.warnings.push_back("second-proof expression gives " +
                               std::to_string(rep.second_proof));
      break;
    }
    case 4:
      rep.closed_form =
          (2 * static_cast<std::int64_t>(r) * r * r - 3 * static_cast<std::int64_t>(r) * r +
           6 * r + 27) /
          72;
      break;
    default:
      break;
  }
  if (rep.closed_form >= 0 && rep.closed_form != rep.count)
    rep.warnings.push_back("quoted closed form gives " +
                           std::to_string(rep.closed_form) +
                           ", crystal/oracle give " + std::to_string(rep.count));
  return rep;
}

std::string ChainFamily::to_json_string() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["m"] = m;
  j["chains"] = nlohmann::ordered_json::array();
  for (const auto& chain : chains) {
    nlohmann::ordered_json cj = nlohmann::ordered_json::array();
    for (const auto& p : chain) cj.push_back(p.parts());
    j["chains"].push_back(std::move(cj));
  }
  return j.dump();
}

ChainFamily scd(int n, int m) {
  ChainFamily fam;
  fam.n = n;
  fam.m = m;
  const int r = n + m - 1;
  const CrystalGraph g = build(n, r);
  for (int hw : g.highest_weight_nodes()) {
    std::vector<BoxPartition> chain;
    for (int cur = hw; cur >= 0; cur = g.succ(cur))
      chain.push_back(psi(g.node(cur), m));
    fam.chains.push_back(std::move(chain));
  }
  return fam;
}

std::string ScdReport::to_json_string() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["m"] = m;
  j["is_partition"] = is_partition;
  j["saturated"] = saturated;
  j["symmetric"] = symmetric;
  j["result"] = pass() ? "pass" : "fail";
  j["witnesses"] = witnesses;
  return j.dump();
}

ScdReport verify_scd(const ChainFamily& fam) {
  ScdReport rep;
  rep.n = fam.n;
  rep.m = fam.m;
  rep.is_partition = rep.saturated = rep.symmetric = true;

  // Partition of the set: every element of L(n,m) exactly once. The size of
  // L(n,m) is C(n+m, n); uniqueness plus the count gives coverage.
  std::set<std::vector<int>> seen;
  std::int64_t expected = 1;
  for (int i = 1; i <= fam.n; ++i)
    expected = expected * (fam.m + i) / i;
  for (const auto& chain : fam.chains) {
    for (const auto& p : chain) {
      if (!seen.insert(p.parts()).second) {
        rep.is_partition = false;
        rep.witnesses.push_back("duplicate " + p.display());
      }
    }
  }
  if (static_cast<std::int64_t>(seen.size()) != expected) {
    rep.is_partition = false;
    rep.witnesses.push_back("covered " + std::to_string(seen.size()) +
                            " of " + std::to_string(expected) + " partitions");
  }

  for (const auto& chain : fam.chains) {
    for (std::size_t i = 1; i < chain.size(); ++i) {
      if (!covers(chain[i], chain[i - 1])) {
        rep.saturated = false;
        rep.witnesses.push_back("not saturated at " + chain[i - 1].display() +
                                " -> " + chain[i].display());
      }
    }
    if (chain.empty()) continue;
    const int lo = chain.front().rank();
    const int hi = chain.back().rank();
    if (lo + hi != fam.n * fam.m) {
      rep.symmetric = false;
      rep.witnesses.push_back("ranks " + std::to_string(lo) + ".." +
                              std::to_string(hi) + " not centred");
    }
  }
  return rep;
}

}  // namespace ysc::plethysm
