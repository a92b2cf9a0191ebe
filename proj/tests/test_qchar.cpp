#include "doctest.h"
#include "ysc/qchar.hpp"

using namespace ysc;
using namespace ysc::qchar;

namespace {

/// Independent brute-force Gaussian binomial: sum q^(|lambda|) over
/// partitions in a (top-bottom) x bottom box, recentred. Recursive on the
/// largest part, no shared code with q_binom's Pascal DP.
std::int64_t box_count(int rows, int cols, int s) {
  if (s == 0) return 1;
  if (rows == 0 || cols == 0 || s < 0) return 0;
  // Partitions of s in rows x cols: either no part equal to cols (fits in
  // rows x (cols-1)) or remove a full first column... recurse on cols.
  return box_count(rows, cols - 1, s) + box_count(rows - 1, cols, s - cols);
}

CenteredPoly brute_q_binom(int top, int bottom) {
  CenteredPoly p;
  const int degree = bottom * (top - bottom);
  for (int s = 0; s <= degree; ++s)
    p.add_term(2 * s - degree, box_count(bottom, top - bottom, s));
  return p;
}

}  // namespace

TEST_CASE("centred q-integers") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == CenteredPoly::one());
  const CenteredPoly three = q_int(3);
  CHECK(three.coeff(-2) == 1);
  CHECK(three.coeff(0) == 1);
  CHECK(three.coeff(2) == 1);
  CHECK(three.at_q1() == 3);
  CHECK(three.symmetric());
  CHECK(three.parity_pure());
  const CenteredPoly two = q_int(2);
  CHECK(two.coeff(-1) == 1);
  CHECK(two.coeff(1) == 1);
  CHECK(two.parity_pure());
  CHECK_THROWS_AS(q_int(-1), Error);
}

TEST_CASE("q-binomial conventions and values") {
  CHECK(q_binom(5, 0) == CenteredPoly::one());
  CHECK(q_binom(2, 5).is_zero());
  CHECK(q_binom(4, 1) == q_int(4));
  // [5 over 2] = [3] + [7]
  CenteredPoly expect = q_int(3);
  expect += q_int(7);
  CHECK(q_binom(5, 2) == expect);
}

TEST_CASE("q-binomial equals brute-force box enumeration") {
  for (int top = 0; top <= 12; ++top)
    for (int bottom = 0; bottom <= top; ++bottom)
      CHECK(q_binom(top, bottom) == brute_q_binom(top, bottom));
}

TEST_CASE("q-binomial symmetry, dimension and unimodality at larger sizes") {
  const CenteredPoly p = q_binom(101, 4);
  CHECK(p.symmetric());
  CHECK(p.parity_pure());
  CHECK(p.at_q1() == 101LL * 100 * 99 * 98 / 24);
  CHECK_NOTHROW(peel(p));
}

TEST_CASE("peel recovers known decompositions") {
  const QIntCombo d1 = peel(q_binom(5, 2));
  CHECK(d1.parts().size() == 2);
  CHECK(d1.parts().at(3) == 1);
  CHECK(d1.parts().at(7) == 1);

  // [6 over 3] = [10] + [6] + [4]
  const QIntCombo d2 = peel(q_binom(6, 3));
  CHECK(d2.parts().at(10) == 1);
  CHECK(d2.parts().at(6) == 1);
  CHECK(d2.parts().at(4) == 1);
  CHECK(d2.constituent_count() == 3);

  CHECK(peel(CenteredPoly{}).empty());
  CHECK(render(peel(CenteredPoly{})) == "0");
}

TEST_CASE("peel round-trips through expand") {
  for (int r = 2; r <= 30; ++r)
    for (int n = 1; n <= 4; ++n) {
      const CenteredPoly p = q_binom(r + 1, n);
      CHECK(peel(p).expand() == p);
    }
}

TEST_CASE("peel rejects non-characters") {
  CenteredPoly asym;
  asym.add_term(1, 1);
  CHECK_THROWS_AS(peel(asym), NotUnimodalError);

  CenteredPoly mixed;
  mixed.add_term(0, 1);
  mixed.add_term(1, 1);
  mixed.add_term(-1, 1);
  CHECK_THROWS_AS(peel(mixed), NotUnimodalError);

  CenteredPoly dip;  // 1 + 0*q^... + 1: symmetric but not unimodal
  dip.add_term(-2, 1);
  dip.add_term(2, 1);
  CHECK_THROWS_AS(peel(dip), NotUnimodalError);
}

TEST_CASE("plus operator shifts lengths") {
  QIntCombo f;
  f.add(3, 2);
  f.add(1, 1);
  const QIntCombo g = plus(f, 2);
  CHECK(g.parts().at(5) == 2);
  CHECK(g.parts().at(3) == 1);
  CHECK(g.at_q1() == f.at_q1() + 2 * f.constituent_count());
}

TEST_CASE("render formats decreasing lengths") {
  QIntCombo f;
  f.add(7, 1);
  f.add(3, 2);
  CHECK(render(f) == "[7] + [3] + [3]");
}

TEST_CASE("character recursions hold up to r = 100") {
  for (int r = 2; r <= 100; ++r) CHECK(check_recursion_n2(r).equal);
  for (int r = 3; r <= 100; ++r) CHECK(check_recursion_n3(r).equal);
  for (int r = 4; r <= 100; ++r) CHECK(check_recursion_n4(r).equal);
}

TEST_CASE("recursion sweep CSV shape") {
  const std::string csv = recursion_sweep_csv(2, 4, 4);
  CHECK(csv == "r,decomposition\n4,[7] + [3]\n");
}

TEST_CASE("checked arithmetic overflows loudly") {
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), OverflowError);
}
