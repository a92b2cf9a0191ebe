// Command-line front end: crystals, symmetric chain decompositions,
// characters, plethystic coefficients and the verification sweeps.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ysc/crystal.hpp"
#include "ysc/oracle.hpp"
#include "ysc/plethysm.hpp"
#include "ysc/qchar.hpp"
#include "ysc/seedlang.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ysc::Error("cannot open output file " + out_path);
  out << text;
}

ysc::Operator make_operator(int n, const std::string& seed_path) {
  if (seed_path.empty()) return ysc::Operator(n);
  std::ifstream in(seed_path, std::ios::binary);
  if (!in) throw ysc::Error("cannot open seed file " + seed_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const ysc::seedlang::SeedFile f = ysc::seedlang::parse(buf.str());
  if (f.n != n)
    throw ysc::Error("seed file is for n = " + std::to_string(f.n));
  return ysc::Operator(n, ysc::seedlang::to_seedspec(f));
}

ysc::SeedSpec make_seed(int n, const std::string& seed_path) {
  if (seed_path.empty()) return ysc::builtin_seed(n);
  std::ifstream in(seed_path, std::ios::binary);
  if (!in) throw ysc::Error("cannot open seed file " + seed_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const ysc::seedlang::SeedFile f = ysc::seedlang::parse(buf.str());
  if (f.n != n)
    throw ysc::Error("seed file is for n = " + std::to_string(f.n));
  return ysc::seedlang::to_seedspec(f);
}

int cmd_crystal(int n, int r, const std::string& format, const std::string& out,
                const std::string& seed_path, int jobs, bool color) {
  const ysc::Operator op = make_operator(n, seed_path);
  const ysc::CrystalGraph g = ysc::build(n, r, op, jobs);
  if (format == "dot")
    emit(g.to_dot(color), out);
  else
    emit(g.to_json_string() + "\n", out);
  return kExitOk;
}

int cmd_scd(int n, int m, const std::string& format, const std::string& out) {
  const ysc::plethysm::ChainFamily fam = ysc::plethysm::scd(n, m);
  if (format == "json") {
    emit(fam.to_json_string() + "\n", out);
    return kExitOk;
  }
  std::ostringstream os;
  for (const auto& chain : fam.chains) {
    for (std::size_t i = 0; i < chain.size(); ++i)
      os << (i ? " < " : "") << chain[i].display();
    os << "\n";
  }
  emit(os.str(), out);
  return kExitOk;
}

int cmd_character(int n, int r_lo, int r_hi, const std::string& out) {
  std::ostringstream os;
  for (int r = r_lo; r <= r_hi; ++r)
    os << ysc::qchar::render(ysc::plethysm::character(n, r)) << "\n";
  emit(os.str(), out);
  return kExitOk;
}

int cmd_coeff(int n, int r, std::optional<int> k, const std::string& out) {
  if (k) {
    emit(std::to_string(ysc::plethysm::coefficient(n, r, *k)) + "\n", out);
    return kExitOk;
  }
  emit(ysc::plethysm::coefficient_csv(n, r), out);
  return kExitOk;
}

int cmd_constituents(int n, int r_lo, int r_hi, const std::string& out) {
  std::ostringstream os;
  for (int r = r_lo; r <= r_hi; ++r)
    os << ysc::plethysm::constituents(n, r).to_json_string() << "\n";
  emit(os.str(), out);
  return kExitOk;
}

int cmd_verify(const std::string& target, int n, int r_max,
               const std::string& seed_path, int jobs) {
  bool ok = true;
  int warnings = 0;
  if (target == "axioms") {
    const ysc::Operator op = make_operator(n, seed_path);
    for (int r = n; r <= r_max; ++r) {
      const auto rep = ysc::verify_axioms(ysc::build(n, r, op, jobs));
      if (!rep.pass()) {
        ok = false;
        std::cout << rep.to_json_string() << "\n";
      }
    }
    std::cout << "axioms n=" << n << " r<=" << r_max
              << (ok ? ": pass" : ": FAIL") << "\n";
  } else if (target == "seed") {
    const ysc::SeedSpec seed = make_seed(n, seed_path);
    const auto p1 = ysc::verify_problem1(seed, r_max);
    const ysc::Operator op =
        seed_path.empty() ? ysc::Operator(n) : ysc::Operator(n, seed);
    const auto p2 = ysc::verify_problem2(op, r_max);
    const auto p3 = ysc::verify_problem3(op, r_max);
    ok = p1.pass && p2.pass && p3.pass;
    std::cout << p1.to_json_string() << "\n"
              << p2.to_json_string() << "\n"
              << p3.to_json_string() << "\n";
  } else if (target == "recursions") {
    for (int r = n; r <= r_max; ++r) {
      ysc::qchar::RecursionReport rep;
      switch (n) {
        case 2: rep = ysc::qchar::check_recursion_n2(r); break;
        case 3: rep = ysc::qchar::check_recursion_n3(r); break;
        case 4: rep = ysc::qchar::check_recursion_n4(r); break;
        default: throw ysc::Error("recursions: n must be 2, 3 or 4");
      }
      if (!rep.equal) {
        ok = false;
        std::cout << "recursion fails at n=" << n << " r=" << r << ": "
                  << ysc::qchar::render(rep.rhs) << " != "
                  << ysc::qchar::render(rep.lhs) << "\n";
      }
    }
    std::cout << "recursions n=" << n << " r<=" << r_max
              << (ok ? ": pass" : ": FAIL") << "\n";
  } else if (target == "paper-claims") {
    const ysc::Operator op = make_operator(n, seed_path);
    // Flagged (warning-level) discrepancies are aggregated per claim, not
    // per instance: one warning line per quoted formula that disagrees.
    int closed_form_hits = 0, side_cond_hits = 0;
    std::string closed_form_first, side_cond_first;
    for (int r = n; r <= r_max; ++r) {
      // Hard checks: closed-form highest-weight sets and the character
      // identity against the independent rank-profile oracle.
      if (n >= 2) {
        std::vector<ysc::Tableau> computed;
        for (const ysc::Tableau& t : ysc::enumerate_tableaux(n, r))
          if (!op.e(t)) computed.push_back(t);
        if (computed != ysc::plethysm::hw_closed_form(n, r)) {
          ok = false;
          std::cout << "hw closed form mismatch at n=" << n << " r=" << r << "\n";
        }
      }
      const auto cc = ysc::oracle::cross_check_character(n, r);
      if (!cc.pass()) {
        ok = false;
        std::cout << cc.to_json_string() << "\n";
      }
      // Flagged comparisons: the quoted constituent formulas and the
      // quoted linear side-conditions on the coefficient index.
      const auto cons = ysc::plethysm::constituents(n, r);
      for (const auto& w : cons.warnings) {
        if (closed_form_hits++ == 0)
          closed_form_first = "r=" + std::to_string(r) + ": " + w;
      }
      if (cons.count != cons.oracle) ok = false;
      for (const ysc::Tableau& t : ysc::plethysm::hw_closed_form(n, r)) {
        // The quoted side-conditions on the coefficient index, evaluated
        // verbatim with a the largest entry: a+2b (n=2), 3a+2b+c (n=3),
        // 4a+3b+2c+d (n=4).
        const auto& e = t.entries();  // smallest-first
        long side = 0;
        if (n == 2) {
          side = e[1] + 2L * e[0];
        } else {
          for (int i = 0; i < n; ++i)
            side += static_cast<long>(i + 1) * e[static_cast<std::size_t>(i)];
        }
        if (side != ysc::wt2(t, r)) {
          if (side_cond_hits++ == 0)
            side_cond_first = "r=" + std::to_string(r) + " " + t.display() +
                              ": quoted value " + std::to_string(side) +
                              ", k = " + std::to_string(ysc::wt2(t, r));
        }
      }
    }
    if (closed_form_hits > 0) {
      ++warnings;
      std::cout << "warning: constituent floor formula disagrees with the "
                << "computed count at " << closed_form_hits
                << " values of r (first: " << closed_form_first << ")\n";
    }
    if (side_cond_hits > 0) {
      ++warnings;
      std::cout << "warning: coefficient side-condition fails at "
                << side_cond_hits << " highest-weight tableaux (first: "
                << side_cond_first << ")\n";
    }
    std::cout << "paper-claims n=" << n << " r<=" << r_max << ": "
              << (ok ? "pass" : "FAIL") << " (" << warnings << " warnings)\n";
  } else {
    throw CLI::ValidationError("unknown verify target " + target);
  }
  return ok ? kExitOk : kExitVerifyFail;
}

int cmd_bench(int n, int r, int jobs) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const ysc::Operator op(n);
  const ysc::CrystalGraph g = ysc::build(n, r, op, jobs);
  const auto t1 = clock::now();
  const auto axioms = ysc::verify_axioms(g);
  const auto t2 = clock::now();
  ysc::qchar::QIntCombo from_graph;
  for (int hw : g.highest_weight_nodes()) from_graph.add(g.wt2(hw) + 1, 1);
  const bool char_ok = from_graph == ysc::qchar::peel(ysc::qchar::q_binom(r + 1, n));
  const auto t3 = clock::now();
  auto ms = [](auto a, auto b) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
  };
  std::cout << "nodes: " << g.node_count() << "\n"
            << "components: " << g.component_count() << "\n"
            << "build: " << ms(t0, t1) << " ms\n"
            << "axioms: " << ms(t1, t2) << " ms ("
            << (axioms.pass() ? "pass" : "FAIL") << ")\n"
            << "character: " << ms(t2, t3) << " ms ("
            << (char_ok ? "match" : "MISMATCH") << ")\n"
            << "total: " << ms(t0, t3) << " ms\n";
  return axioms.pass() && char_ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystal operators, characters and symmetric chain "
               "decompositions of the Young lattice L(n,m)"};
  app.require_subcommand(1);

  int n = 0, r = 0, m = 0, r_hi = -1, r_max = 20, jobs = 0;
  std::optional<int> k;
  std::string format = "json", out, seed_path, target;
  bool color = false;

  auto* crystal = app.add_subcommand("crystal", "Build and export a crystal graph");
  crystal->add_option("--n", n)->required();
  crystal->add_option("--r", r)->required();
  crystal->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  crystal->add_option("--out", out);
  crystal->add_option("--seed-file", seed_path);
  crystal->add_option("--jobs", jobs);
  crystal->add_flag("--color", color, "colour components in DOT output");

  auto* scd = app.add_subcommand("scd", "Symmetric chain decomposition of L(n,m)");
  scd->add_option("--n", n)->required();
  scd->add_option("--m", m)->required();
  scd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  scd->add_option("--out", out);

  auto* character = app.add_subcommand("character", "Decomposition into irreducibles");
  character->add_option("--n", n)->required();
  character->add_option("--r", r)->required();
  character->add_option("--r-hi", r_hi, "sweep r .. r-hi");
  character->add_option("--out", out);

  auto* coeff = app.add_subcommand("coeff", "Plethystic coefficients");
  coeff->add_option("--n", n)->required();
  coeff->add_option("--r", r)->required();
  coeff->add_option("--k", k);
  coeff->add_option("--out", out);

  auto* constituents = app.add_subcommand("constituents", "Constituent counts");
  constituents->add_option("--n", n)->required();
  constituents->add_option("--r", r)->required();
  constituents->add_option("--r-hi", r_hi, "sweep r .. r-hi");
  constituents->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "Verification sweeps");
  verify->add_option("target", target)
      ->required()
      ->check(CLI::IsMember({"axioms", "seed", "recursions", "paper-claims"}));
  verify->add_option("--n", n)->required();
  verify->add_option("--r-max", r_max);
  verify->add_option("--seed-file", seed_path);
  verify->add_option("--jobs", jobs);

  auto* bench = app.add_subcommand("bench", "Build-and-verify timing");
  bench->add_option("--n", n)->required();
  bench->add_option("--r", r)->required();
  bench->add_option("--jobs", jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (crystal->parsed()) return cmd_crystal(n, r, format, out, seed_path, jobs, color);
    if (scd->parsed()) return cmd_scd(n, m, format, out);
    if (character->parsed())
      return cmd_character(n, r, r_hi < 0 ? r : r_hi, out);
    if (coeff->parsed()) return cmd_coeff(n, r, k, out);
    if (constituents->parsed())
      return cmd_constituents(n, r, r_hi < 0 ? r : r_hi, out);
    if (verify->parsed()) return cmd_verify(target, n, r_max, seed_path, jobs);
    if (bench->parsed()) return cmd_bench(n, r, jobs);
  } catch (const ysc::NoBuiltinSeedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ysc::ParseError& e) {
    std::cerr << "seed parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ysc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}
