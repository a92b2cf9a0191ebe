#include "ysc/crystal.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace ysc {

namespace {

std::vector<int> reinsert(const Tableau& outer, const Tableau& middle) {
  const int an = outer.smallest();
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(outer.size()));
  e.push_back(an);
  for (int b : middle.entries()) e.push_back(b + an + 1);
  e.push_back(outer.largest());
  return e;
}

}  // namespace

Operator::Operator(int n) : n_(n) {
  if (n < 0) throw Error("Operator: negative n");
  for (int level = n; level >= 2; level -= 2) seeds_[level] = builtin_seed(level);
}

Operator::Operator(int n, SeedSpec top_seed) : n_(n) {
  if (n < 2) throw Error("Operator: user seed requires n >= 2");
  if (top_seed.n != n) throw Error("Operator: seed is for a different n");
  seeds_[n] = std::move(top_seed);
  for (int level = n - 2; level >= 2; level -= 2) seeds_[level] = builtin_seed(level);
}

const SeedSpec& Operator::seed(int level) const {
  auto it = seeds_.find(level);
  if (it == seeds_.end())
    throw Error("Operator: no seed at level " + std::to_string(level));
  return it->second;
}

std::optional<Tableau> Operator::f_top(const Tableau& t) const {
  const int n = t.size();
  if (n <= 2) return std::nullopt;
  const auto ft = f(t_down(t));
  if (!ft) return std::nullopt;
  std::vector<int> e = reinsert(t, *ft);
  if (e[static_cast<std::size_t>(n) - 2] >= e[static_cast<std::size_t>(n) - 1])
    return std::nullopt;  // the raised middle entry collides with a_1
  return Tableau::from_sorted(std::move(e));
}

int Operator::phi_r(const Tableau& t, int r) const {
  const int level = t.size();
  if (level == 0) return 0;
  if (t.largest() > r)
    throw NotInRangeError("phi_r: tableau " + t.display() + " not in B_" +
                          std::to_string(r));
  if (level == 1) return r - t.largest();
  if (level == 2) return phi_bot(seed(2), t, r);
  int count = 0;
  Tableau cur = t;
  while (true) {
    const auto next = f(cur);
    if (!next || next->largest() > r) return count;
    cur = *next;
    ++count;
  }
}

int Operator::gauge_A(const Tableau& t) const {
  const int n = t.size();
  if (n < 2) throw Error("gauge_A: requires at least two entries");
  const int a1 = t.largest();
  const int an = t.smallest();
  const int local = phi_bot_local(seed(n), t);
  const int lower = phi_r(t_down(t), a1 - an - 1);
  return local - lower + n * an + (n - 2);
}

std::optional<Tableau> Operator::f(const Tableau& t) const {
  const int n = t.size();
  if (n == 0) return std::nullopt;
  if (n == 1) return Tableau::from_sorted({t.largest() + 1});
  if (gauge_A(t) < 0) return f_top(t);
  return f_bot(seed(n), t);
}

std::optional<Tableau> Operator::e(const Tableau& t) const {
  const int n = t.size();
  if (n == 0) return std::nullopt;
  if (n == 1) {
    if (t.largest() == 0) return std::nullopt;
    return Tableau::from_sorted({t.largest() - 1});
  }
  // Bottom candidate: the path predecessor, valid when it takes the bottom
  // branch itself.
  if (const auto eb = e_bot(seed(n), t); eb && gauge_A(*eb) >= 0) return eb;
  // Top candidate: undo the B(n-2) recursion, valid when it takes the top
  // branch.
  if (n >= 3) {
    if (const auto ed = e(t_down(t))) {
      Tableau et = Tableau::from_sorted(reinsert(t, *ed));
      if (gauge_A(et) < 0) return et;
    }
  }
  return std::nullopt;
}

std::int64_t CrystalGraph::binom(int a, int b) const {
  return binom_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_ + 1) +
                static_cast<std::size_t>(b)];
}

Tableau CrystalGraph::node(int idx) const {
  const auto* base = &entries_[static_cast<std::size_t>(idx) * static_cast<std::size_t>(n_)];
  return Tableau::from_sorted(std::vector<int>(base, base + n_));
}

int CrystalGraph::index_of(const Tableau& t) const {
  // Lexicographic (combinadic) rank of t's entry vector among the n-subsets
  // of {0,...,r}: for each position j, count the combinations that agree on
  // the prefix and take a smaller j-th entry. The inner sum telescopes by
  // the hockey-stick identity.
  std::int64_t rank = 0;
  int prev = -1;
  const auto& e = t.entries();
  for (int j = 0; j < n_; ++j) {
    const int lo = prev + 1;
    const int hi = e[static_cast<std::size_t>(j)];
    if (hi > lo)
      rank += binom(r_ - lo + 1, n_ - j) - binom(r_ - hi + 1, n_ - j);
    prev = hi;
  }
  return static_cast<int>(rank);
}

std::vector<int> CrystalGraph::component_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(component_count_), 0);
  for (std::int32_t c : comp_) ++sizes[static_cast<std::size_t>(c)];
  return sizes;
}

std::vector<int> CrystalGraph::highest_weight_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < node_count(); ++i)
    if (is_hw(i)) out.push_back(i);
  return out;
}

CrystalGraph build(int n, int r, const Operator& op, int jobs) {
  if (n < 0 || r < 0) throw Error("build: negative parameters");
  if (op.n() != n) throw Error("build: operator is for a different n");
  CrystalGraph g;
  g.n_ = n;
  g.r_ = r;
  g.binom_.assign(static_cast<std::size_t>(r + 2) * static_cast<std::size_t>(n + 1), 0);
  for (int a = 0; a <= r + 1; ++a) {
    g.binom_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n + 1)] = 1;
    for (int b = 1; b <= std::min(a, n); ++b)
      g.binom_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n + 1) +
               static_cast<std::size_t>(b)] =
          checked_add(g.binom(a - 1, b - 1), g.binom(a - 1, b));
  }

  const std::vector<Tableau> nodes = enumerate_tableaux(n, r);
  const std::size_t N = nodes.size();
  g.entries_.resize(N * static_cast<std::size_t>(n));
  g.succ_.assign(N, -1);
  g.pred_.assign(N, -1);
  g.wt2_.resize(N);
  g.comp_.assign(N, -1);
  for (std::size_t i = 0; i < N; ++i) {
    const auto& e = nodes[i].entries();
    std::copy(e.begin(), e.end(),
              g.entries_.begin() + static_cast<std::ptrdiff_t>(i * static_cast<std::size_t>(n)));
    g.wt2_[i] = static_cast<std::int32_t>(wt2(nodes[i], r));
  }

  if (jobs <= 0) {
    if (const char* env = std::getenv("YSC_THREADS")) jobs = std::atoi(env);
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
  }
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(N == 0 ? 1 : N)));

  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const auto ft = op.f(nodes[i]);
      if (ft && ft->largest() <= r)
        g.succ_[i] = static_cast<std::int32_t>(g.index_of(*ft));
    }
  };
  if (jobs == 1 || N < 1024) {
    work(0, N);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (N + static_cast<std::size_t>(jobs) - 1) / static_cast<std::size_t>(jobs);
    for (int j = 0; j < jobs; ++j) {
      const std::size_t lo = static_cast<std::size_t>(j) * chunk;
      const std::size_t hi = std::min(N, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t i = 0; i < N; ++i)
    if (g.succ_[i] >= 0) g.pred_[static_cast<std::size_t>(g.succ_[i])] = static_cast<std::int32_t>(i);

  int comp_id = 0;
  for (std::size_t i = 0; i < N; ++i) {
    if (g.pred_[i] >= 0) continue;
    std::int32_t cur = static_cast<std::int32_t>(i);
    std::size_t guard = 0;
    while (cur >= 0 && g.comp_[static_cast<std::size_t>(cur)] < 0 && guard++ <= N) {
      g.comp_[static_cast<std::size_t>(cur)] = comp_id;
      cur = g.succ_[static_cast<std::size_t>(cur)];
    }
    ++comp_id;
  }
  g.component_count_ = comp_id;
  return g;
}

CrystalGraph build(int n, int r) { return build(n, r, Operator(n), 0); }

std::string CrystalGraph::to_dot(bool color_components) const {
  static const char* palette[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f",
                                  "#cab8d9", "#ffff99", "#1f78b4", "#33a02c"};
  std::ostringstream os;
  os << "digraph crystal {\n";
  os << "  rankdir=TB;\n";
  for (int i = 0; i < node_count(); ++i) {
    os << "  n" << i << " [label=\"" << node(i).display() << "\\nwt="
       << format_half(wt2(i)) << "\"";
    if (color_components)
      os << ", style=filled, fillcolor=\"" << palette[component(i) % 8] << "\"";
    os << "];\n";
  }
  for (int i = 0; i < node_count(); ++i)
    if (succ(i) >= 0) os << "  n" << i << " -> n" << succ(i) << ";\n";
  os << "}\n";
  return os.str();
}

std::string CrystalGraph::to_json_string() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["r"] = r_;
  j["nodes"] = nlohmann::ordered_json::array();
  for (int i = 0; i < node_count(); ++i) {
    nlohmann::ordered_json nj;
    nj["entries"] = std::vector<int>(
        entries_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(i) * static_cast<std::size_t>(n_)),
        entries_.begin() + static_cast<std::ptrdiff_t>((static_cast<std::size_t>(i) + 1) * static_cast<std::size_t>(n_)));
    nj["wt"] = format_half(wt2(i));
    if (succ(i) >= 0)
      nj["succ_index"] = succ(i);
    else
      nj["succ_index"] = nullptr;
    nj["component"] = component(i);
    nj["is_hw"] = is_hw(i);
    j["nodes"].push_back(std::move(nj));
  }
  return j.dump();
}

std::string AxiomReport::to_json_string() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["r"] = r;
  j["c0"] = c0;
  j["c1"] = c1;
  j["c2"] = c2;
  j["result"] = pass() ? "pass" : "fail";
  j["witnesses"] = witnesses;
  return j.dump();
}

AxiomReport verify_axioms(const CrystalGraph& g) {
  AxiomReport rep;
  rep.n = g.n();
  rep.r = g.r();
  rep.c0 = rep.c1 = rep.c2 = true;
  const int N = g.node_count();

  // C0: no two nodes share a successor.
  std::vector<std::int32_t> indegree(static_cast<std::size_t>(N), 0);
  for (int i = 0; i < N; ++i)
    if (g.succ(i) >= 0) ++indegree[static_cast<std::size_t>(g.succ(i))];
  for (int i = 0; i < N; ++i) {
    if (indegree[static_cast<std::size_t>(i)] > 1) {
      rep.c0 = false;
      rep.witnesses.push_back("C0: node " + g.node(i).display() +
                              " has several predecessors");
    }
  }

  // C2: each arc lowers the weight by one.
  for (int i = 0; i < N; ++i) {
    if (g.succ(i) >= 0 && g.wt2(g.succ(i)) != g.wt2(i) - 2) {
      rep.c2 = false;
      rep.witnesses.push_back("C2: arc " + g.node(i).display() + " -> " +
                              g.node(g.succ(i)).display());
    }
  }

  // C1: phi = eps + 2wt at every node, walking each chain from its
  // highest-weight node: at position p of a length-L chain, eps = p and
  // phi = L - 1 - p, so the condition reads 2wt = L - 1 - 2p.
  for (int hw : g.highest_weight_nodes()) {
    std::vector<int> chain;
    for (int cur = hw; cur >= 0; cur = g.succ(cur)) {
      chain.push_back(cur);
      if (static_cast<int>(chain.size()) > N) break;  // cycle guard
    }
    const int L = static_cast<int>(chain.size());
    for (int p = 0; p < L; ++p) {
      if (g.wt2(chain[static_cast<std::size_t>(p)]) != L - 1 - 2 * p) {
        rep.c1 = false;
        rep.witnesses.push_back(
            "C1: node " + g.node(chain[static_cast<std::size_t>(p)]).display() +
            " in a chain of length " + std::to_string(L));
      }
    }
  }
  return rep;
}

std::string ProblemReport::to_json_string() const {
  nlohmann::ordered_json j;
  j["problem"] = problem;
  j["n"] = n;
  j["r_max"] = r_max;
  j["result"] = pass ? "pass" : "fail";
  j["counterexamples"] = counterexamples;
  return j.dump();
}

ProblemReport verify_problem2(const Operator& op, int r_max) {
  ProblemReport rep;
  rep.problem = "problem2";
  rep.n = op.n();
  rep.r_max = r_max;
  for (const Tableau& t : enumerate_tableaux(op.n(), r_max)) {
    if (!op.e(t) && op.gauge_A(t) > 0)
      rep.counterexamples.push_back(t.display() + ": A = " +
                                    std::to_string(op.gauge_A(t)));
  }
  rep.pass = rep.counterexamples.empty();
  return rep;
}

ProblemReport verify_problem3(const Operator& op, int r_max) {
  ProblemReport rep;
  rep.problem = "problem3";
  rep.n = op.n();
  rep.r_max = r_max;
  for (const Tableau& t : enumerate_tableaux(op.n(), r_max)) {
    if (op.n() < 3) break;  // Top is empty: the condition is void
    if (op.gauge_A(t) >= 0) continue;
    const auto ft = op.f(t);
    if (!ft || op.gauge_A(*ft) < 0) continue;
    if (op.gauge_A(*ft) != 0)
      rep.counterexamples.push_back(t.display() + ": A(F.t) = " +
                                    std::to_string(op.gauge_A(*ft)));
    Tableau cur = *ft;
    while (true) {
      const auto next = op.f(cur);
      if (!next || next->largest() > r_max) break;
      cur = *next;
      if (op.gauge_A(cur) <= 0) {
        rep.counterexamples.push_back(t.display() + ": A(F^k.t) = " +
                                      std::to_string(op.gauge_A(cur)) +
                                      " at " + cur.display());
        break;
      }
    }
  }
  rep.pass = rep.counterexamples.empty();
  return rep;
}

}  // namespace ysc
