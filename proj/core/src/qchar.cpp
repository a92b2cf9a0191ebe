#include "ysc/qchar.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace ysc::qchar {

CenteredPoly CenteredPoly::one() {
  CenteredPoly p;
  p.coeffs_[0] = 1;
  return p;
}

void CenteredPoly::add_term(int h, std::int64_t c) {
  if (c == 0) return;
  auto it = coeffs_.find(h);
  if (it == coeffs_.end()) {
    coeffs_[h] = c;
  } else {
    it->second = checked_add(it->second, c);
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::int64_t CenteredPoly::coeff(int h) const {
  auto it = coeffs_.find(h);
  return it == coeffs_.end() ? 0 : it->second;
}

int CenteredPoly::max_exponent() const {
  if (coeffs_.empty()) throw Error("max_exponent of zero polynomial");
  return coeffs_.rbegin()->first;
}

std::int64_t CenteredPoly::at_q1() const {
  std::int64_t s = 0;
  for (const auto& [h, c] : coeffs_) s = checked_add(s, c);
  return s;
}

bool CenteredPoly::symmetric() const {
  for (const auto& [h, c] : coeffs_)
    if (coeff(-h) != c) return false;
  return true;
}

bool CenteredPoly::parity_pure() const {
  if (coeffs_.empty()) return true;
  const int parity = ((coeffs_.begin()->first % 2) + 2) % 2;
  for (const auto& [h, c] : coeffs_)
    if (((h % 2) + 2) % 2 != parity) return false;
  return true;
}

CenteredPoly& CenteredPoly::operator+=(const CenteredPoly& o) {
  for (const auto& [h, c] : o.coeffs_) add_term(h, c);
  return *this;
}

CenteredPoly q_int(int k) {
  if (k < 0) throw Error("q_int: negative length " + std::to_string(k));
  CenteredPoly p;
  for (int h = -(k - 1); h <= k - 1; h += 2) p.add_term(h, 1);
  return p;
}

CenteredPoly q_binom(int top, int bottom) {
  if (bottom < 0) throw Error("q_binom: negative bottom");
  if (bottom == 0) return CenteredPoly::one();
  if (top < bottom) return CenteredPoly{};

  // Ordinary Gaussian coefficients by the q-Pascal recurrence
  // [i over j] = [i-1 over j-1] + q^j [i-1 over j]; recentre at the end.
  std::vector<std::vector<std::int64_t>> row(static_cast<std::size_t>(bottom) + 1);
  row[0] = {1};
  for (int i = 1; i <= top; ++i) {
    for (int j = std::min(i, bottom); j >= 1; --j) {
      const auto& lo = row[static_cast<std::size_t>(j) - 1];
      const auto& hi = row[static_cast<std::size_t>(j)];
      std::vector<std::int64_t> next(static_cast<std::size_t>(j) * (i - j) + 1, 0);
      for (std::size_t e = 0; e < lo.size(); ++e) next[e] = checked_add(next[e], lo[e]);
      for (std::size_t e = 0; e < hi.size(); ++e)
        next[e + static_cast<std::size_t>(j)] =
            checked_add(next[e + static_cast<std::size_t>(j)], hi[e]);
      row[static_cast<std::size_t>(j)] = std::move(next);
    }
  }

  const int degree = bottom * (top - bottom);
  CenteredPoly out;
  const auto& coeffs = row[static_cast<std::size_t>(bottom)];
  for (int e = 0; e <= degree; ++e) out.add_term(2 * e - degree, coeffs[static_cast<std::size_t>(e)]);
  return out;
}

void QIntCombo::add(int length, std::int64_t mult) {
  if (length < 1) throw Error("QIntCombo: length must be >= 1");
  if (mult == 0) return;
  if (mult < 0) throw Error("QIntCombo: negative multiplicity");
  parts_[length] = checked_add(parts_[length], mult);
}

CenteredPoly QIntCombo::expand() const {
  CenteredPoly p;
  for (const auto& [len, mult] : parts_)
    for (int h = -(len - 1); h <= len - 1; h += 2) p.add_term(h, mult);
  return p;
}

std::int64_t QIntCombo::at_q1() const {
  std::int64_t s = 0;
  for (const auto& [len, mult] : parts_) s = checked_add(s, checked_mul(len, mult));
  return s;
}

std::int64_t QIntCombo::constituent_count() const {
  std::int64_t s = 0;
  for (const auto& [len, mult] : parts_) s = checked_add(s, mult);
  return s;
}

QIntCombo peel(const CenteredPoly& p) {
  if (!p.symmetric()) throw NotUnimodalError("peel: polynomial is not symmetric");
  if (!p.parity_pure()) throw NotUnimodalError("peel: polynomial mixes exponent parities");
  QIntCombo out;
  CenteredPoly rest = p;
  while (!rest.is_zero()) {
    const int hmax = rest.max_exponent();
    if (hmax < 0) throw NotUnimodalError("peel: negative support survived");
    const std::int64_t d = rest.coeff(hmax);
    const int len = hmax + 1;
    for (int h = -hmax; h <= hmax; h += 2) {
      if (rest.coeff(h) < d)
        throw NotUnimodalError("peel: coefficient drops inside the support");
      rest.add_term(h, -d);
    }
    out.add(len, d);
  }
  return out;
}

QIntCombo plus(const QIntCombo& f, int j) {
  QIntCombo out;
  for (const auto& [len, mult] : f.parts()) out.add(len + j, mult);
  return out;
}

std::string render(const QIntCombo& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.parts().rbegin(); it != f.parts().rend(); ++it) {
    for (std::int64_t i = 0; i < it->second; ++i) {
      if (!first) os << " + ";
      os << "[" << it->first << "]";
      first = false;
    }
  }
  return os.str();
}

RecursionReport check_recursion_n2(int r) {
  if (r < 2) throw Error("check_recursion_n2: r must be >= 2");
  QIntCombo rhs = plus(peel(q_binom(r, 2)), 2);
  if (r % 2 == 1) rhs.add(1, 1);
  const CenteredPoly lhs_poly = q_binom(r + 1, 2);
  return {2, r, rhs.expand() == lhs_poly, peel(lhs_poly), rhs};
}

RecursionReport check_recursion_n3(int r) {
  if (r < 3) throw Error("check_recursion_n3: r must be >= 3");
  QIntCombo rhs = plus(peel(q_binom(r, 3)), 3);
  const int bound = r - 1 - 2 * (r % 2);
  for (int k = 0; 4 * k < bound; ++k) rhs.add(r - 4 * k - 1, 1);
  const CenteredPoly lhs_poly = q_binom(r + 1, 3);
  return {3, r, rhs.expand() == lhs_poly, peel(lhs_poly), rhs};
}

RecursionReport check_recursion_n4(int r) {
  if (r < 4) throw Error("check_recursion_n4: r must be >= 4");
  QIntCombo rhs = plus(peel(q_binom(r, 4)), 4);
  const int d_even = (r % 2 == 0) ? 1 : 0;
  for (int k = 0;; ++k) {
    const int top = r - 6 * k - 1 - 3 * d_even;
    if (top < 2) break;  // [top over 2] = 0 from here on
    const QIntCombo term = peel(q_binom(top, 2));
    for (const auto& [len, mult] : term.parts()) rhs.add(len, mult);
  }
  for (int k = 0;; ++k) {
    const int top = r - 6 * k - 4 - 3 * (1 - d_even);
    if (top < 2) break;
    const QIntCombo term = plus(peel(q_binom(top, 2)), 6);
    for (const auto& [len, mult] : term.parts()) rhs.add(len, mult);
  }
  const CenteredPoly lhs_poly = q_binom(r + 1, 4);
  return {4, r, rhs.expand() == lhs_poly, peel(lhs_poly), rhs};
}

std::string recursion_sweep_csv(int n, int r_lo, int r_hi) {
  std::ostringstream os;
  os << "r,decomposition\n";
  for (int r = r_lo; r <= r_hi; ++r)
    os << r << "," << render(peel(q_binom(r + 1, n))) << "\n";
  return os.str();
}

}  // namespace ysc::qchar
