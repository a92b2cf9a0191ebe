#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ysc/tableaux.hpp"

namespace ysc {

/// One congruence (or exact equality) constraint on a tableau. Entry indices
/// follow the column notation <a_n,...,a_1>: index 1 is a_1, the largest
/// entry; index n is a_n, the smallest. The constrained quantity is
/// e_lhs, or e_lhs - e_rhs when rhs != 0.
struct Atom {
  int lhs = 0;
  int rhs = 0;      // 0 when the term is a single entry
  int value = 0;
  int modulus = 0;  // 0 means exact equality with `value`
  bool negated = false;

  bool eval(const Tableau& t) const;
  bool operator==(const Atom&) const = default;
};

/// Conjunction of atoms.
struct Predicate {
  std::vector<Atom> atoms;
  bool eval(const Tableau& t) const;
  bool operator==(const Predicate&) const = default;
};

struct SeedClass {
  std::string name;
  Predicate pred;
  std::vector<int> offset;  // permutation of (0,...,n-1), smallest-entry-first
  bool operator==(const SeedClass&) const = default;
};

/// A seed: an initial-tableau predicate plus residue classes, each carrying
/// the offset vector that drives its lattice paths.
struct SeedSpec {
  int n = 0;
  Predicate initial;
  std::vector<SeedClass> classes;
};

/// The seeds printed for n = 2, 3, 4; throws NoBuiltinSeedError otherwise.
SeedSpec builtin_seed(int n);

/// Index into spec.classes of the unique class containing t; throws
/// SeedNotPartitionError (naming t) when zero or several classes match.
int classify(const SeedSpec& spec, const Tableau& t);

bool is_initial(const SeedSpec& spec, const Tableau& t);

/// The k-th point of the path seeded at t0 with offset v:
/// t_k = t0 + floor((v + k)/n) entrywise.
Tableau path_point(const Tableau& t0, const std::vector<int>& v, int k);

/// Position of t on its path: the initial tableau and the index k with
/// path_point(t0, v, k) = t. Throws SeedNotPartitionError when no (or, in
/// exhaustive mode, more than one) generating initial tableau exists.
struct PathPosition {
  Tableau t0;
  int class_index = 0;
  int k = 0;
};
PathPosition locate(const SeedSpec& spec, const Tableau& t);

/// The successor of t on its path.
Tableau f_bot(const SeedSpec& spec, const Tableau& t);

/// The predecessor, or nullopt exactly when t is initial.
std::optional<Tableau> e_bot(const SeedSpec& spec, const Tableau& t);

/// Number of f_bot applications until a_1 first increases; lies in [0, n).
int phi_bot_local(const SeedSpec& spec, const Tableau& t);

/// phi^bot_r(t) = n(r - a_1) + phi_bot_local(t).
int phi_bot(const SeedSpec& spec, const Tableau& t, int r);

/// All path points from the initial tableau t0 whose largest entry is at
/// most r_cap, in order. Throws NotInitialError when t0 is not initial.
std::vector<Tableau> path(const SeedSpec& spec, const Tableau& t0, int r_cap);

struct Problem1Report {
  int n = 0;
  int r_max = 0;
  bool pass = false;
  std::vector<std::string> counterexamples;
  std::string to_json_string() const;
};

/// Exhaustively checks, over all of B_{r_max}(n), that every tableau lies in
/// exactly one class and is generated by exactly one initial tableau.
Problem1Report verify_problem1(const SeedSpec& spec, int r_max);

}  // namespace ysc
