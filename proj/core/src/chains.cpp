#include "ysc/chains.hpp"

#include <algorithm>

#include "json.hpp"

namespace ysc {

namespace {

int entry_by_column_index(const Tableau& t, int i) {
  // Column index 1 is the largest entry; stored order is smallest-first.
  return t.entries()[static_cast<std::size_t>(t.size() - i)];
}

Atom cong(int lhs, int rhs, int value, int modulus, bool negated = false) {
  return Atom{lhs, rhs, value, modulus, negated};
}

Atom exact(int lhs, int value) { return Atom{lhs, 0, value, 0, false}; }

/// Index of the unique matching class, or nullopt when the count is not one.
std::optional<int> match_class(const SeedSpec& spec, const Tableau& t) {
  std::optional<int> found;
  for (std::size_t c = 0; c < spec.classes.size(); ++c) {
    if (spec.classes[c].pred.eval(t)) {
      if (found) return std::nullopt;
      found = static_cast<int>(c);
    }
  }
  return found;
}

}  // namespace

bool Atom::eval(const Tableau& t) const {
  const int term =
      entry_by_column_index(t, lhs) - (rhs != 0 ? entry_by_column_index(t, rhs) : 0);
  bool holds;
  if (modulus == 0) {
    holds = term == value;
  } else {
    holds = ((term - value) % modulus + modulus) % modulus == 0;
  }
  return negated ? !holds : holds;
}

bool Predicate::eval(const Tableau& t) const {
  return std::all_of(atoms.begin(), atoms.end(),
                     [&](const Atom& a) { return a.eval(t); });
}

SeedSpec builtin_seed(int n) {
  SeedSpec s;
  s.n = n;
  switch (n) {
    case 2:
      // Initial tableaux <0, a> with a odd.
      s.initial.atoms = {exact(2, 0), cong(1, 0, 1, 2)};
      s.classes = {
          {"even", {{cong(1, 2, 0, 2)}}, {0, 1}},
          {"odd", {{cong(1, 2, 1, 2)}}, {0, 1}},
      };
      return s;
    case 3:
      // Initial tableaux <0, b, a> with b odd and a - b != 2 (mod 3).
      s.initial.atoms = {exact(3, 0), cong(2, 0, 1, 2), cong(1, 2, 2, 3, true)};
      s.classes = {
          {"i", {{cong(2, 3, 1, 2), cong(1, 2, 1, 3)}}, {0, 1, 2}},
          {"ii", {{cong(2, 3, 1, 2), cong(1, 2, 2, 3)}}, {0, 1, 2}},
          {"iii", {{cong(2, 3, 0, 2), cong(1, 2, 1, 3)}}, {0, 1, 2}},
          {"iv", {{cong(2, 3, 1, 2), cong(1, 2, 0, 3)}}, {0, 2, 1}},
          {"v", {{cong(2, 3, 0, 2), cong(1, 2, 2, 3)}}, {0, 2, 1}},
          {"vi", {{cong(2, 3, 0, 2), cong(1, 2, 0, 3)}}, {0, 2, 1}},
      };
      return s;
    case 4:
      // Initial tableaux <0, c, b, a> with a and c odd.
      s.initial.atoms = {exact(4, 0), cong(1, 0, 1, 2), cong(3, 0, 1, 2)};
      s.classes = {
          {"i", {{cong(3, 4, 1, 2), cong(2, 3, 1, 2), cong(1, 2, 1, 2)}}, {0, 1, 2, 3}},
          {"ii", {{cong(3, 4, 1, 2), cong(2, 3, 1, 2), cong(1, 2, 0, 2)}}, {0, 1, 2, 3}},
          {"iii", {{cong(3, 4, 1, 2), cong(2, 3, 0, 2), cong(1, 2, 1, 2)}}, {0, 1, 2, 3}},
          {"iv", {{cong(3, 4, 0, 2), cong(2, 3, 1, 2), cong(1, 2, 1, 2)}}, {0, 1, 2, 3}},
          {"v", {{cong(3, 4, 1, 2), cong(2, 3, 0, 2), cong(1, 2, 0, 2)}}, {0, 3, 2, 1}},
          {"vi", {{cong(3, 4, 0, 2), cong(2, 3, 1, 2), cong(1, 2, 0, 2)}}, {0, 3, 2, 1}},
          {"vii", {{cong(3, 4, 0, 2), cong(2, 3, 0, 2), cong(1, 2, 1, 2)}}, {0, 3, 2, 1}},
          {"viii", {{cong(3, 4, 0, 2), cong(2, 3, 0, 2), cong(1, 2, 0, 2)}}, {0, 3, 2, 1}},
      };
      return s;
    default:
      throw NoBuiltinSeedError("no builtin seed for n = " + std::to_string(n));
  }
}

int classify(const SeedSpec& spec, const Tableau& t) {
  const auto c = match_class(spec, t);
  if (!c)
    throw SeedNotPartitionError("tableau " + t.display() +
                                " matches zero or several classes");
  return *c;
}

bool is_initial(const SeedSpec& spec, const Tableau& t) {
  return spec.initial.eval(t) && match_class(spec, t).has_value();
}

Tableau path_point(const Tableau& t0, const std::vector<int>& v, int k) {
  const int n = t0.size();
  std::vector<int> e = t0.entries();
  for (int j = 0; j < n; ++j)
    e[static_cast<std::size_t>(j)] += (v[static_cast<std::size_t>(j)] + k) / n;
  return Tableau::from_sorted(std::move(e));
}

namespace {

bool strictly_increasing_nonneg(const std::vector<int>& e) {
  if (!e.empty() && e.front() < 0) return false;
  for (std::size_t j = 1; j < e.size(); ++j)
    if (e[j] <= e[j - 1]) return false;
  return true;
}

/// Enumerates every (t0, k) with t0 initial, classify(t0) carrying offset v,
/// and path_point(t0, v, k) == t. Any path point satisfies
/// t = t0 + i*(1,...,1) + floor((v + k')/n) with k = n*i + k', 0 <= k' < n,
/// so candidates are scanned over k' and i.
template <typename Visit>
void scan_generators(const SeedSpec& spec, const std::vector<int>& v,
                     const Tableau& t, Visit visit) {
  const int n = spec.n;
  for (int kp = 0; kp < n; ++kp) {
    std::vector<int> s = t.entries();
    for (int j = 0; j < n; ++j)
      s[static_cast<std::size_t>(j)] -= (v[static_cast<std::size_t>(j)] + kp) / n;
    if (!strictly_increasing_nonneg(s)) continue;
    for (int i = s.front(); i >= 0; --i) {
      std::vector<int> e0 = s;
      for (int& a : e0) a -= i;
      Tableau t0 = Tableau::from_sorted(std::move(e0));
      if (!spec.initial.eval(t0)) continue;
      const auto c0 = match_class(spec, t0);
      if (!c0 || spec.classes[static_cast<std::size_t>(*c0)].offset != v) continue;
      if (!visit(std::move(t0), *c0, n * i + kp)) return;
    }
  }
}

}  // namespace

PathPosition locate(const SeedSpec& spec, const Tableau& t) {
  const int c = classify(spec, t);
  const auto& v = spec.classes[static_cast<std::size_t>(c)].offset;
  std::optional<PathPosition> pos;
  scan_generators(spec, v, t, [&](Tableau t0, int c0, int k) {
    pos = PathPosition{std::move(t0), c0, k};
    return false;  // first hit wins; uniqueness is verify_problem1's job
  });
  if (!pos)
    throw SeedNotPartitionError("tableau " + t.display() +
                                " is generated by no initial tableau");
  return *pos;
}

Tableau f_bot(const SeedSpec& spec, const Tableau& t) {
  const PathPosition pos = locate(spec, t);
  const auto& v = spec.classes[static_cast<std::size_t>(pos.class_index)].offset;
  return path_point(pos.t0, v, pos.k + 1);
}

std::optional<Tableau> e_bot(const SeedSpec& spec, const Tableau& t) {
  const PathPosition pos = locate(spec, t);
  if (pos.k == 0) return std::nullopt;
  const auto& v = spec.classes[static_cast<std::size_t>(pos.class_index)].offset;
  return path_point(pos.t0, v, pos.k - 1);
}

int phi_bot_local(const SeedSpec& spec, const Tableau& t) {
  const int n = spec.n;
  const PathPosition pos = locate(spec, t);
  const auto& v = spec.classes[static_cast<std::size_t>(pos.class_index)].offset;
  // The largest entry increments at steps k with v_1 + k = n - 1 (mod n).
  return (((n - 1 - v.back() - pos.k) % n) + n) % n;
}

int phi_bot(const SeedSpec& spec, const Tableau& t, int r) {
  if (t.largest() > r)
    throw NotInRangeError("tableau " + t.display() + " not in B_" +
                          std::to_string(r) + "(" + std::to_string(spec.n) + ")");
  return spec.n * (r - t.largest()) + phi_bot_local(spec, t);
}

std::vector<Tableau> path(const SeedSpec& spec, const Tableau& t0, int r_cap) {
  if (!is_initial(spec, t0))
    throw NotInitialError("tableau " + t0.display() + " is not initial");
  const int c = classify(spec, t0);
  const auto& v = spec.classes[static_cast<std::size_t>(c)].offset;
  std::vector<Tableau> out;
  for (int k = 0;; ++k) {
    Tableau tk = path_point(t0, v, k);
    if (tk.largest() > r_cap) break;
    out.push_back(std::move(tk));
  }
  return out;
}

std::string Problem1Report::to_json_string() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["r_max"] = r_max;
  j["result"] = pass ? "pass" : "fail";
  j["counterexamples"] = counterexamples;
  return j.dump();
}

Problem1Report verify_problem1(const SeedSpec& spec, int r_max) {
  Problem1Report rep;
  rep.n = spec.n;
  rep.r_max = r_max;
  for (const Tableau& t : enumerate_tableaux(spec.n, r_max)) {
    const auto c = match_class(spec, t);
    if (!c) {
      rep.counterexamples.push_back(t.display() + ": not in exactly one class");
      continue;
    }
    // Count, exhaustively over the offsets in use, the initial tableaux
    // whose path passes through t.
    int generators = 0;
    std::vector<std::vector<int>> seen_offsets;
    for (const SeedClass& cls : spec.classes) {
      if (std::find(seen_offsets.begin(), seen_offsets.end(), cls.offset) !=
          seen_offsets.end())
        continue;
      seen_offsets.push_back(cls.offset);
      scan_generators(spec, cls.offset, t, [&](Tableau, int, int) {
        ++generators;
        return true;
      });
    }
    if (generators != 1)
      rep.counterexamples.push_back(t.display() + ": generated by " +
                                    std::to_string(generators) +
                                    " initial tableaux");
  }
  rep.pass = rep.counterexamples.empty();
  return rep;
}

}  // namespace ysc
