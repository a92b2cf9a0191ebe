#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ysc/crystal.hpp"
#include "ysc/qchar.hpp"
#include "ysc/tableaux.hpp"

namespace ysc::plethysm {

/// The highest-weight tableaux of B_r(n) by the printed closed-form
/// predicates (n = 2, 3, 4), in lexicographic order.
std::vector<Tableau> hw_closed_form(int n, int r);

/// Multiplicity of Sym^k C^2 in Lambda^n Sym^r C^2: the number of
/// highest-weight tableaux of B_r(n) with 2*wt = k.
std::int64_t coefficient(int n, int r, int k);

/// The full decomposition: the multiset {2*wt(t) + 1 : t highest weight}.
qchar::QIntCombo character(int n, int r);

/// CSV with header "n,r,k,coefficient", one row per nonzero coefficient in
/// ascending k.
std::string coefficient_csv(int n, int r);

struct ConstituentsReport {
  int n = 0;
  int r = 0;
  std::int64_t count = 0;          // number of crystal components
  std::int64_t oracle = 0;         // middle-rank count of L(n, r+1-n)
  std::int64_t closed_form = -1;   // the printed floor formula, when one exists
  std::int64_t second_proof = -1;  // the n=3 intermediate expression
  std::vector<std::string> warnings;
  std::string to_json_string() const;
};

/// Number of irreducible constituents of Lambda^n Sym^r C^2, with the
/// printed closed forms evaluated for comparison; disagreements become
/// warnings, never corrections.
ConstituentsReport constituents(int n, int r);

struct ChainFamily {
  int n = 0;
  int m = 0;
  /// Each chain lists partitions in rank-ascending order (the image of the
  /// highest-weight tableau first).
  std::vector<std::vector<BoxPartition>> chains;
  std::string to_json_string() const;
};

/// Symmetric chain decomposition of L(n,m), transported from the crystal
/// on B_{n+m-1}(n).
ChainFamily scd(int n, int m);

struct ScdReport {
  int n = 0;
  int m = 0;
  bool is_partition = false;
  bool saturated = false;
  bool symmetric = false;
  std::vector<std::string> witnesses;
  bool pass() const { return is_partition && saturated && symmetric; }
  std::string to_json_string() const;
};

/// Checks that the family partitions L(n,m) into saturated chains whose
/// rank sets are symmetric about nm/2.
ScdReport verify_scd(const ChainFamily& fam);

}  // namespace ysc::plethysm
