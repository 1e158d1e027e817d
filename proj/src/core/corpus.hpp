#pragma once

#include "core/condense.hpp"
#include "core/groups.hpp"
#include "core/tower.hpp"

namespace focal {

// Fixed list of small monoids (orders 1..5, groups and non-groups) used by
// the realization checks; each table is validated on construction.
std::vector<std::string> monoid_names();
const std::vector<std::vector<int>>& monoid_table(const std::string& name);
bool monoid_is_group(const std::vector<std::vector<int>>& table);

// A ready-to-run atom system, optionally with a group action on its algebra.
struct PreparedSystem {
  std::string name;
  AtomSystem system;
  std::optional<ActionOnAlgebra> action;
};

PreparedSystem quotient_t2();
PreparedSystem quotient_t2_minus_1();
PreparedSystem quotient_t2_minus_t();
PreparedSystem quotient_t3_minus_1();
PreparedSystem trace_zero_system(int n);
PreparedSystem s3_standard_system();
PreparedSystem galois_biquadratic_system();
PreparedSystem monoid_algebra_system(const std::string& monoid_name);

// The three irreducible characters of S3, with values indexed by the elements
// of the group inside s3_standard_system (same generators, same ordering).
std::vector<CharacterRow> s3_characters();

// Every atom-system-backed example, for sweep-style checks.
std::vector<PreparedSystem> all_prepared_systems();

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CorpusReport {
  std::string item;
  std::vector<CheckResult> checks;
  bool pass = true;
};

std::vector<std::string> corpus_item_names();
CorpusReport run_corpus_item(const std::string& name);

// Scripted verification of the dependent-atom example on End(W) for the
// 3-dimensional representation of A4 over Q(zeta_3): product identities,
// the nonassociativity witness, and the reproductive-law failure.
CorpusReport a4_checks();

// Entire 11-atom fragment of that example as an abstract table
// (diagonal lines C, Z, Z' and the U-lines closed under the products).
HyperTable a4_fragment_table();

// The A4 rotation group (permutations of 4 points) together with its
// 3-dimensional representation by signed permutation matrices.
std::pair<std::shared_ptr<const FiniteGroup>, std::vector<Matrix>> a4_rotation_representation();

}  // namespace focal
