#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ysc/errors.hpp"

namespace ysc::qchar {

/// A symmetric Laurent polynomial in q^(1/2) with nonnegative integer
/// coefficients. Exponents are tracked in half-steps: the key h stands for
/// q^(h/2), so all sl2 characters (integer or half-integer weights) live here
/// without rational arithmetic.
class CenteredPoly {
 public:
  CenteredPoly() = default;

  static CenteredPoly one();

  /// Adds c * q^(h/2). Checked; entries that cancel to zero are erased.
  void add_term(int h, std::int64_t c);

  std::int64_t coeff(int h) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Largest h carrying a nonzero coefficient. Precondition: not zero.
  int max_exponent() const;

  /// Value at q = 1, i.e. the dimension of the underlying module.
  std::int64_t at_q1() const;

  bool symmetric() const;
  bool parity_pure() const;

  const std::map<int, std::int64_t>& terms() const { return coeffs_; }

  CenteredPoly& operator+=(const CenteredPoly& o);
  bool operator==(const CenteredPoly&) const = default;

 private:
  std::map<int, std::int64_t> coeffs_;
};

/// The centred q-integer [k]: q^(-(k-1)/2) + q^(-(k-3)/2) + ... + q^((k-1)/2).
/// [0] is the zero polynomial; negative k is rejected.
CenteredPoly q_int(int k);

/// The centred Gaussian binomial. Conventions: 1 when bottom == 0, and the
/// zero polynomial when top < bottom (so recursion tail terms vanish).
CenteredPoly q_binom(int top, int bottom);

/// A multiset of q-integer lengths with positive multiplicities: the
/// decomposed form of a character, sum d_i * [i].
class QIntCombo {
 public:
  void add(int length, std::int64_t mult);
  const std::map<int, std::int64_t>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  CenteredPoly expand() const;
  std::int64_t at_q1() const;

  /// Total multiplicity, i.e. the number of irreducible constituents.
  std::int64_t constituent_count() const;

  bool operator==(const QIntCombo&) const = default;

 private:
  std::map<int, std::int64_t> parts_;  // length -> multiplicity
};

/// Decomposes a symmetric, parity-pure, unimodal polynomial as a nonnegative
/// combination of q-integers by repeatedly subtracting the widest one.
/// Throws NotUnimodalError when no such decomposition exists.
QIntCombo peel(const CenteredPoly& p);

/// The plus operator: every length i becomes i + j, multiplicities unchanged.
QIntCombo plus(const QIntCombo& f, int j);

/// Renders "[a] + [b] + ..." sorted by decreasing length; "0" when empty.
std::string render(const QIntCombo& f);

struct RecursionReport {
  int n = 0;
  int r = 0;
  bool equal = false;
  QIntCombo lhs;
  QIntCombo rhs;
};

RecursionReport check_recursion_n2(int r);
RecursionReport check_recursion_n3(int r);
RecursionReport check_recursion_n4(int r);

/// CSV with header "r,decomposition", one row per r in [r_lo, r_hi].
std::string recursion_sweep_csv(int n, int r_lo, int r_hi);

}  // namespace ysc::qchar
