#include <map>
#include <set>

#include "doctest.h"
#include "ysc/crystal.hpp"
#include "ysc/qchar.hpp"

namespace ysc {

/// Test-only backdoor used to corrupt a graph and exercise failure paths.
struct CrystalGraphTestAccess {
  static void kill_arc(CrystalGraph& g, int idx) {
    const int to = g.succ_[static_cast<std::size_t>(idx)];
    g.succ_[static_cast<std::size_t>(idx)] = -1;
    if (to >= 0) g.pred_[static_cast<std::size_t>(to)] = -1;
  }
};

}  // namespace ysc

using namespace ysc;

namespace {

Tableau T(std::vector<int> e) {
  const int n = static_cast<int>(e.size());
  return Tableau::make(n, std::move(e));
}

/// Printed closed forms of the gauge: 2b + delta_{a = b (2)} for n = 2, and
/// the per-n condensations for n = 3, 4.
int gauge2_closed(const Tableau& t) {
  const int b = t.entries()[0], a = t.entries()[1];
  return 2 * b + ((a - b) % 2 == 0 ? 1 : 0);
}

int phi_local3_closed(const Tableau& t) {
  const int c = t.entries()[0], b = t.entries()[1], a = t.entries()[2];
  const int d_bc = (b - c) % 2 != 0 ? 1 : 0;
  const int ab = ((a - b) % 3 + 3) % 3;
  return ((2 - d_bc - ab) % 3 + 3) % 3;
}

int gauge3_closed(const Tableau& t) {
  const int c = t.entries()[0], b = t.entries()[1], a = t.entries()[2];
  return phi_local3_closed(t) - (a - b - 1) + 3 * c;
}

int phi_local4_closed(const Tableau& t) {
  const int d = t.entries()[0], c = t.entries()[1], b = t.entries()[2],
            a = t.entries()[3];
  const int dab = (a - b) % 2 != 0 ? 1 : 0;
  const int dbc = (b - c) % 2 != 0 ? 1 : 0;
  const int dcd = (c - d) % 2 != 0 ? 1 : 0;
  const int in_i_iv = (dab + dbc + dcd >= 2) ? 1 : 0;
  return ((dab + 2 * dbc - dcd - 1 - in_i_iv) % 4 + 4) % 4;
}

int gauge4_closed(const Tableau& t) {
  const int d = t.entries()[0], c = t.entries()[1], b = t.entries()[2],
            a = t.entries()[3];
  return phi_local4_closed(t) - 2 * (a - b - 1) - ((b - c) % 2 == 0 ? 1 : 0) +
         4 * d;
}

Tableau shift(const Tableau& t, const std::vector<int>& by) {
  std::vector<int> e = t.entries();
  for (std::size_t j = 0; j < e.size(); ++j) e[j] += by[j];
  return Tableau::from_sorted(std::move(e));
}

}  // namespace

TEST_CASE("top operator worked example and base cases") {
  const Operator op4(4);
  REQUIRE(op4.f_top(T({1, 4, 5, 8})).has_value());
  CHECK(*op4.f_top(T({1, 4, 5, 8})) == T({1, 4, 6, 8}));

  const Operator op2(2);
  CHECK(!op2.f_top(T({0, 3})).has_value());

  const Operator op3(3);
  REQUIRE(op3.f_top(T({0, 1, 4})).has_value());
  CHECK(*op3.f_top(T({0, 1, 4})) == T({0, 2, 4}));
  // Collision with a_1: raising the middle entry of <0,1,2> would hit 2.
  CHECK(!op3.f_top(T({0, 1, 2})).has_value());
}

TEST_CASE("gauge examples") {
  const Operator op2(2);
  CHECK(op2.gauge_A(T({0, 3})) == 0);
  const Operator op3(3);
  CHECK(op3.gauge_A(T({0, 3, 4})) == 0);
  CHECK(op3.gauge_A(T({0, 1, 4})) == -1);
}

TEST_CASE("gauge agrees with the printed closed forms exhaustively") {
  const Operator op2(2);
  for (const Tableau& t : enumerate_tableaux(2, 30))
    CHECK(op2.gauge_A(t) == gauge2_closed(t));
  const Operator op3(3);
  for (const Tableau& t : enumerate_tableaux(3, 30))
    CHECK(op3.gauge_A(t) == gauge3_closed(t));
  const Operator op4(4);
  for (const Tableau& t : enumerate_tableaux(4, 30))
    CHECK(op4.gauge_A(t) == gauge4_closed(t));
}

TEST_CASE("glued operator branches") {
  const Operator op3(3);
  CHECK(*op3.f(T({0, 1, 4})) == T({0, 2, 4}));  // top branch, A = -1
  CHECK(*op3.f(T({0, 3, 4})) == T({0, 3, 5}));  // bottom branch, A = 0
  const Operator op2(2);
  for (const Tableau& t : enumerate_tableaux(2, 15))
    CHECK(op2.gauge_A(t) >= 0);  // Top(2) is empty
}

TEST_CASE("e inverts f") {
  for (int n = 0; n <= 4; ++n) {
    const Operator op(n);
    for (const Tableau& t : enumerate_tableaux(n, 12)) {
      const auto ft = op.f(t);
      if (ft) {
        REQUIRE(op.e(*ft).has_value());
        CHECK(*op.e(*ft) == t);
      }
      const auto et = op.e(t);
      if (et) CHECK(*op.f(*et) == t);
    }
  }
}

TEST_CASE("build: figure-1 shape for B_4(2)") {
  const CrystalGraph g = build(2, 4);
  CHECK(g.node_count() == 10);
  CHECK(g.component_count() == 2);
  const auto sizes = g.component_sizes();
  std::multiset<int> got(sizes.begin(), sizes.end());
  CHECK(got == std::multiset<int>{3, 7});
}

TEST_CASE("build: base cases n = 0 and n = 1") {
  const CrystalGraph g0 = build(0, 5);
  CHECK(g0.node_count() == 1);
  CHECK(g0.succ(0) == -1);
  CHECK(g0.component_count() == 1);

  const CrystalGraph g1 = build(1, 6);
  CHECK(g1.node_count() == 7);
  CHECK(g1.component_count() == 1);
  for (int i = 0; i + 1 < 7; ++i) CHECK(g1.succ(i) == i + 1);
}

TEST_CASE("build: B_6(3) components") {
  const CrystalGraph g = build(3, 6);
  CHECK(g.node_count() == 35);
  CHECK(g.component_count() == 5);
  const auto sizes = g.component_sizes();
  std::multiset<int> got(sizes.begin(), sizes.end());
  CHECK(got == std::multiset<int>{1, 5, 7, 9, 13});
}

TEST_CASE("node indexing is the lexicographic rank") {
  const CrystalGraph g = build(3, 8);
  for (int i = 0; i < g.node_count(); ++i) CHECK(g.index_of(g.node(i)) == i);
}

TEST_CASE("restriction rule: a killed arc forces a nonnegative gauge") {
  for (int n : {2, 3, 4}) {
    const Operator op(n);
    const int r = 12;
    for (const Tableau& t : enumerate_tableaux(n, r)) {
      const auto ft = op.f(t);
      if (!ft || ft->largest() > r) CHECK(op.gauge_A(t) >= 0);
    }
  }
}

TEST_CASE("axioms hold for all n <= 4 at moderate r") {
  for (int n = 0; n <= 4; ++n)
    for (int r = n; r <= 16; ++r) {
      const AxiomReport rep = verify_axioms(build(n, r));
      CHECK(rep.pass());
    }
}

TEST_CASE("axiom checker flags a corrupted graph") {
  CrystalGraph g = build(2, 4);
  REQUIRE(verify_axioms(g).pass());
  // Delete one mid-path arc: the severed tail starts below weight zero, so
  // C1 must fail on the new short chain.
  const int hw = g.highest_weight_nodes().front();
  const int mid = g.succ(g.succ(hw));
  CrystalGraphTestAccess::kill_arc(g, mid);
  const AxiomReport rep = verify_axioms(g);
  CHECK(!rep.pass());
  CHECK(!rep.c1);
  CHECK(!rep.witnesses.empty());
}

TEST_CASE("character identity: weights and component sizes match qchar") {
  for (int n = 1; n <= 4; ++n)
    for (int r = n; r <= 16; ++r) {
      const CrystalGraph g = build(n, r);
      qchar::CenteredPoly from_nodes;
      for (int i = 0; i < g.node_count(); ++i) from_nodes.add_term(g.wt2(i), 1);
      CHECK(from_nodes == qchar::q_binom(r + 1, n));

      qchar::QIntCombo sizes;
      for (int s : g.component_sizes()) sizes.add(s, 1);
      CHECK(sizes == qchar::peel(qchar::q_binom(r + 1, n)));
    }
}

TEST_CASE("each component has one highest-weight node and one gauge zero") {
  for (int n : {2, 3, 4}) {
    const int r = 12;
    const CrystalGraph g = build(n, r);
    const Operator op(n);
    std::map<int, int> hw_per_comp, zero_per_comp;
    for (int i = 0; i < g.node_count(); ++i) {
      if (g.is_hw(i)) ++hw_per_comp[g.component(i)];
      if (op.gauge_A(g.node(i)) == 0) ++zero_per_comp[g.component(i)];
    }
    for (int c = 0; c < g.component_count(); ++c) {
      CHECK(hw_per_comp[c] == 1);
      CHECK(zero_per_comp[c] == 1);
    }
  }
}

TEST_CASE("problems 2 and 3 for the builtin seeds") {
  for (int n : {2, 3, 4}) {
    const Operator op(n);
    CHECK(verify_problem2(op, 20).pass);
    CHECK(verify_problem3(op, 20).pass);
  }
}

TEST_CASE("shift equivariance from the appendix") {
  const Operator op3(3);
  const std::vector<int> s3{1, 1, 4};
  for (const Tableau& t : enumerate_tableaux(3, 25)) {
    CHECK(op3.gauge_A(shift(t, s3)) == op3.gauge_A(t));
    const auto ft = op3.f(t);
    const auto fts = op3.f(shift(t, s3));
    REQUIRE(ft.has_value() == fts.has_value());
    if (ft) CHECK(*fts == shift(*ft, s3));
  }
  const Operator op4(4);
  for (const std::vector<int>& s4 : {std::vector<int>{1, 1, 1, 3}, std::vector<int>{0, 0, 2, 2}}) {
    for (const Tableau& t : enumerate_tableaux(4, 25)) {
      CHECK(op4.gauge_A(shift(t, s4)) == op4.gauge_A(t));
      const auto ft = op4.f(t);
      const auto fts = op4.f(shift(t, s4));
      REQUIRE(ft.has_value() == fts.has_value());
      if (ft) CHECK(*fts == shift(*ft, s4));
    }
  }
}

TEST_CASE("builds are identical across parallelism degrees") {
  const Operator op(3);
  const CrystalGraph a = build(3, 14, op, 1);
  const CrystalGraph b = build(3, 14, op, 4);
  CHECK(a.to_json_string() == b.to_json_string());
  CHECK(a.to_dot() == b.to_dot());
}

TEST_CASE("DOT and JSON exports") {
  const CrystalGraph g = build(2, 4);
  const std::string dot = g.to_dot();
  CHECK(dot.find("digraph crystal {") == 0);
  CHECK(dot.find("<0,1>\\nwt=") != std::string::npos);
  // 10 nodes, 8 arcs: two components of sizes 7 and 3.
  int arcs = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos;
       p = dot.find("->", p + 1))
    ++arcs;
  CHECK(arcs == 8);

  const std::string js = g.to_json_string();
  CHECK(js.find("\"n\":2") != std::string::npos);
  CHECK(js.find("\"succ_index\":null") != std::string::npos);
  CHECK(js.find("\"is_hw\":true") != std::string::npos);
}

TEST_CASE("operator errors") {
  CHECK_THROWS_AS(Operator(5), NoBuiltinSeedError);
  CHECK_THROWS_AS(Operator(2).gauge_A(T({3})), Error);
  SeedSpec wrong = builtin_seed(2);
  CHECK_THROWS_AS(Operator(3, wrong), Error);
}
