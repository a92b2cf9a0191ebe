#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ysc/errors.hpp"

namespace ysc {

/// A strictly increasing integer column <a_n,...,a_1>. Entries are stored
/// smallest-first, so entries()[0] = a_n and entries().back() = a_1 (the
/// largest). The same tableau belongs to every B_r(n) with r >= a_1; the box
/// width m is never stored, it is r+1-n at use sites.
class Tableau {
 public:
  Tableau() = default;  // the empty tableau of B(0)

  /// Validated construction; throws NegativeEntryError, RepeatedEntryError
  /// or NotIncreasingError.
  static Tableau make(int n, std::vector<int> entries);

  /// Construction from entries already known to be strictly increasing and
  /// nonnegative (hot paths: enumeration, path stepping).
  static Tableau from_sorted(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  const std::vector<int>& entries() const { return entries_; }
  int smallest() const { return entries_.front(); }
  int largest() const { return entries_.back(); }

  /// Column display, top to bottom: "<a_n,...,a_1>".
  std::string display() const;

  /// {"n": n, "entries": [a_n,...,a_1]}
  std::string to_json_string() const;

  auto operator<=>(const Tableau&) const = default;

 private:
  std::vector<int> entries_;
};

Tableau make_tableau(int n, std::vector<int> entries);

/// Twice the weight of t in B_r(n): n*r - 2*(sum of entries). Exact integer;
/// the weight itself is this over two. Throws NotInRangeError if a_1 > r.
int wt2(const Tableau& t, int r);

/// Renders h/2 as "h/2" or an integer, for labels.
std::string format_half(int twice_value);

/// A partition fitting in an n x m box: parts weakly decreasing, largest
/// part <= n, at most m parts.
class BoxPartition {
 public:
  BoxPartition() = default;
  static BoxPartition make(std::vector<int> parts, int box_n, int box_m);

  const std::vector<int>& parts() const { return parts_; }
  int box_n() const { return box_n_; }
  int box_m() const { return box_m_; }
  int rank() const;

  /// "(2,2,1)"; "()" for the empty partition.
  std::string display() const;

  /// {"parts": [...], "box": [n, m]}
  std::string to_json_string() const;

  auto operator<=>(const BoxPartition&) const = default;

 private:
  std::vector<int> parts_;
  int box_n_ = 0;
  int box_m_ = 0;
};

/// The bijection from B_r(n) to L(n,m): <a_n,...,a_1> goes to
/// (n^{a_n} ... i^{a_i - a_{i+1} - 1} ... 1^{a_1 - a_2 - 1}), with m = r+1-n.
BoxPartition psi(const Tableau& t, int m);
Tableau psi_inv(const BoxPartition& lam);

/// All C(r+1, n) tableaux of B_r(n) in lexicographic order on the stored
/// (smallest-first) entry sequence. Empty when r < n-1.
std::vector<Tableau> enumerate_tableaux(int n, int r);

/// Drops a_n and a_1 and renormalises the rest by a_n + 1, landing in B(n-2).
/// Throws UnderflowError for n < 2.
Tableau t_down(const Tableau& t);

/// True iff mu's diagram is lam's with exactly one box removed.
bool covers(const BoxPartition& lam, const BoxPartition& mu);

}  // namespace ysc
