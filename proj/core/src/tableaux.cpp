#include "ysc/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace ysc {

using ordered_json = nlohmann::ordered_json;

Tableau Tableau::make(int n, std::vector<int> entries) {
  if (n < 0) throw Error("Tableau: negative size");
  if (static_cast<int>(entries.size()) != n)
    throw Error("Tableau: expected " + std::to_string(n) + " entries, got " +
                std::to_string(entries.size()));
  for (int a : entries)
    if (a < 0) throw NegativeEntryError("entry " + std::to_string(a) + " is negative");
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i] == entries[i - 1])
      throw RepeatedEntryError("entry " + std::to_string(entries[i]) + " repeats");
    if (entries[i] < entries[i - 1])
      throw NotIncreasingError("entries are not strictly increasing");
  }
  Tableau t;
  t.entries_ = std::move(entries);
  return t;
}

Tableau Tableau::from_sorted(std::vector<int> entries) {
  Tableau t;
  t.entries_ = std::move(entries);
  return t;
}

std::string Tableau::display() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ",";
    os << entries_[i];
  }
  os << ">";
  return os.str();
}

std::string Tableau::to_json_string() const {
  ordered_json j;
  j["n"] = size();
  j["entries"] = entries_;
  return j.dump();
}

Tableau make_tableau(int n, std::vector<int> entries) {
  return Tableau::make(n, std::move(entries));
}

int wt2(const Tableau& t, int r) {
  if (!t.empty() && t.largest() > r)
    throw NotInRangeError("tableau " + t.display() + " has an entry above r = " +
                          std::to_string(r));
  const int sum = std::accumulate(t.entries().begin(), t.entries().end(), 0);
  return t.size() * r - 2 * sum;
}

std::string format_half(int twice_value) {
  if (twice_value % 2 == 0) return std::to_string(twice_value / 2);
  return std::to_string(twice_value) + "/2";
}

BoxPartition BoxPartition::make(std::vector<int> parts, int box_n, int box_m) {
  if (box_n < 0 || box_m < 0) throw Error("BoxPartition: negative box dimension");
  if (static_cast<int>(parts.size()) > box_m)
    throw SeedNotPartitionError("too many parts for a " + std::to_string(box_n) + "x" +
                                std::to_string(box_m) + " box");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1 || parts[i] > box_n)
      throw SeedNotPartitionError("part " + std::to_string(parts[i]) + " outside [1, " +
                                  std::to_string(box_n) + "]");
    if (i > 0 && parts[i] > parts[i - 1])
      throw SeedNotPartitionError("parts are not weakly decreasing");
  }
  BoxPartition p;
  p.parts_ = std::move(parts);
  p.box_n_ = box_n;
  p.box_m_ = box_m;
  return p;
}

int BoxPartition::rank() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string BoxPartition::display() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

std::string BoxPartition::to_json_string() const {
  ordered_json j;
  j["parts"] = parts_;
  j["box"] = {box_n_, box_m_};
  return j.dump();
}

BoxPartition psi(const Tableau& t, int m) {
  const int n = t.size();
  const auto& e = t.entries();  // e[j] = a_{n-j}
  std::vector<int> parts;
  // Part n occurs a_n times; part i < n occurs a_i - a_{i+1} - 1 times.
  for (int k = 0; k < (n > 0 ? e[0] : 0); ++k) parts.push_back(n);
  for (int j = 1; j < n; ++j) {
    const int count = e[j] - e[j - 1] - 1;
    for (int k = 0; k < count; ++k) parts.push_back(n - j);
  }
  return BoxPartition::make(std::move(parts), n, m);
}

Tableau psi_inv(const BoxPartition& lam) {
  const int n = lam.box_n();
  if (n == 0) return Tableau{};
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (int p : lam.parts()) ++count[static_cast<std::size_t>(p)];
  std::vector<int> e(static_cast<std::size_t>(n));
  e[0] = count[static_cast<std::size_t>(n)];
  for (int j = 1; j < n; ++j)
    e[static_cast<std::size_t>(j)] =
        e[static_cast<std::size_t>(j) - 1] + count[static_cast<std::size_t>(n - j)] + 1;
  return Tableau::from_sorted(std::move(e));
}

std::vector<Tableau> enumerate_tableaux(int n, int r) {
  std::vector<Tableau> out;
  if (n < 0 || r < n - 1) return out;
  if (n == 0) {
    out.push_back(Tableau{});
    return out;
  }
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 0);
  while (true) {
    out.push_back(Tableau::from_sorted(e));
    // Next strictly increasing sequence in [0, r], lexicographic order.
    int j = n - 1;
    while (j >= 0 && e[static_cast<std::size_t>(j)] == r - (n - 1 - j)) --j;
    if (j < 0) break;
    ++e[static_cast<std::size_t>(j)];
    for (int k = j + 1; k < n; ++k)
      e[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k) - 1] + 1;
  }
  return out;
}

Tableau t_down(const Tableau& t) {
  const int n = t.size();
  if (n < 2) throw UnderflowError("t_down needs at least two entries");
  const auto& e = t.entries();
  std::vector<int> inner(e.begin() + 1, e.end() - 1);
  for (int& a : inner) a -= e[0] + 1;
  return Tableau::from_sorted(std::move(inner));
}

bool covers(const BoxPartition& lam, const BoxPartition& mu) {
  if (lam.rank() != mu.rank() + 1) return false;
  const auto& a = lam.parts();
  const auto& b = mu.parts();
  std::size_t rows = std::max(a.size(), b.size());
  int diff_rows = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    const int ai = i < a.size() ? a[i] : 0;
    const int bi = i < b.size() ? b[i] : 0;
    if (ai != bi) {
      if (ai != bi + 1) return false;
      ++diff_rows;
    }
  }
  return diff_rows == 1;
}

}  // namespace ysc
