#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ignatiev/oracle.hpp"

namespace ign::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample on failure
  std::size_t cases = 0;
  double seconds = 0;
};

// Exhaustive pairwise sweeps: glb against the brute-force meet, output
// validity, order/meet coherence, and the diamond laws for n in {0, 1, 2}.
std::vector<CheckResult> glb_suite(const EnumerationBound& b);

// Filter closure of every principal filter sequence and the membership/order
// roundtrip of the point-filter correspondence.
std::vector<CheckResult> filters_suite(const EnumerationBound& b);

// sigma against the supremum oracle on attained coordinates, the
// upper-bound half unconditionally, and the output shape.
std::vector<CheckResult> sigma_suite(const EnumerationBound& b);

// Relation characterizations against their member-wise definitions, forcing
// against the constructive witness, and entailment against frame validity.
std::vector<CheckResult> semantics_suite(const EnumerationBound& b);

// parse/format identity for generated ordinals, points, sequences, formulas.
std::vector<CheckResult> roundtrip_suite(std::size_t count_per_kind);

// which: one of glb, sigma, filters, semantics, all.
std::vector<CheckResult> run_suites(std::string_view which, const EnumerationBound& b);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace ign::verify
