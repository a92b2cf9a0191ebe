#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ysc/chains.hpp"
#include "ysc/tableaux.hpp"

namespace ysc {

/// The glued operator F on B(n) and its companions: the top branch recurses
/// into B(n-2), the bottom branch follows seed lattice paths, and the gauge
/// A(t) selects the branch. Holds one seed per level n, n-2, ... >= 2.
class Operator {
 public:
  /// Builtin seeds at every level; n in {0,...,4}.
  explicit Operator(int n);

  /// User seed at the top level, builtin seeds below.
  Operator(int n, SeedSpec top_seed);

  int n() const { return n_; }
  const SeedSpec& seed(int level) const;

  /// The top operator F-top: none when t.size() <= 2 or when reinsertion
  /// would collide with a_1.
  std::optional<Tableau> f_top(const Tableau& t) const;

  /// The gauge A(t), r-independent; requires t.size() >= 2.
  int gauge_A(const Tableau& t) const;

  /// The glued operator: F-top when A(t) < 0, the bottom operator otherwise.
  /// Base cases: none on B(0), <a> -> <a+1> on B(1).
  std::optional<Tableau> f(const Tableau& t) const;

  /// Partial inverse of f; none exactly at highest-weight tableaux.
  std::optional<Tableau> e(const Tableau& t) const;

  /// phi_r at any level: the number of f applications from t that stay
  /// inside B_r of t's level.
  int phi_r(const Tableau& t, int r) const;

 private:
  int n_ = 0;
  std::map<int, SeedSpec> seeds_;  // level -> seed, levels >= 2
};

/// The crystal B_r(n) with the restricted operator F_r. Nodes are stored in
/// lexicographic order of their (smallest-first) entry vectors; node index
/// is the combinadic rank of that vector.
class CrystalGraph {
 public:
  int n() const { return n_; }
  int r() const { return r_; }
  int node_count() const { return static_cast<int>(succ_.size()); }

  Tableau node(int idx) const;
  int index_of(const Tableau& t) const;

  int succ(int idx) const { return succ_[static_cast<std::size_t>(idx)]; }
  int pred(int idx) const { return pred_[static_cast<std::size_t>(idx)]; }
  int wt2(int idx) const { return wt2_[static_cast<std::size_t>(idx)]; }
  int component(int idx) const { return comp_[static_cast<std::size_t>(idx)]; }
  bool is_hw(int idx) const { return pred(idx) < 0; }

  int component_count() const { return component_count_; }
  /// Sizes indexed by component id; ids follow lexicographic order of the
  /// highest-weight tableaux.
  std::vector<int> component_sizes() const;
  /// Node indices of the highest-weight tableaux, in lexicographic order.
  std::vector<int> highest_weight_nodes() const;

  std::string to_dot(bool color_components = false) const;
  std::string to_json_string() const;

  friend CrystalGraph build(int n, int r, const Operator& op, int jobs);
  friend struct CrystalGraphTestAccess;

 private:
  std::int64_t binom(int a, int b) const;

  int n_ = 0;
  int r_ = 0;
  std::vector<std::int64_t> binom_;    // (r+2) x (n+1) Pascal table, flat
  std::vector<std::int32_t> entries_;  // node_count * n, lex order
  std::vector<std::int32_t> succ_;     // -1 when F_r.t = 0
  std::vector<std::int32_t> pred_;
  std::vector<std::int32_t> wt2_;
  std::vector<std::int32_t> comp_;
  int component_count_ = 0;
};

/// Builds B_r(n) with the given operator, stepping nodes in parallel over
/// `jobs` threads (0 = hardware default, overridable via YSC_THREADS).
/// Output is identical for every parallelism degree.
CrystalGraph build(int n, int r, const Operator& op, int jobs = 0);
CrystalGraph build(int n, int r);

struct AxiomReport {
  int n = 0;
  int r = 0;
  bool c0 = false;
  bool c1 = false;
  bool c2 = false;
  std::vector<std::string> witnesses;
  bool pass() const { return c0 && c1 && c2; }
  std::string to_json_string() const;
};

/// Exhaustive check of C0 (injectivity), C1 (phi = eps + 2wt) and C2 (weight
/// decrement) on a built graph.
AxiomReport verify_axioms(const CrystalGraph& g);

struct ProblemReport {
  std::string problem;
  int n = 0;
  int r_max = 0;
  bool pass = false;
  std::vector<std::string> counterexamples;
  std::string to_json_string() const;
};

/// Problem 2: tableaux with no e-predecessor have A(t) <= 0.
ProblemReport verify_problem2(const Operator& op, int r_max);

/// Problem 3: whenever the branch switches (A(t) < 0 <= A(f(t))), the gauge
/// hits 0 exactly at the switch and stays positive afterwards (checked while
/// the chain stays inside B_{r_max}).
ProblemReport verify_problem3(const Operator& op, int r_max);

}  // namespace ysc
