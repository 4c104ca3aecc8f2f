#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscover/enumerate.hpp"

namespace oscover {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::int64_t cases = 0;
  std::string detail;
};

struct VerifyReport {
  std::int64_t d_max = 0;
  std::int64_t mu_max = 0;
  std::vector<CriterionResult> criteria;
  bool pass() const;
};

/// The full consistency suite over the sweep d <= d_max, mu <= mu_max
/// (componentwise, parity-constrained), both offset families, all
/// distinguished indices and signs yielding valid types:
///
///   1  adjunction genus of the system class equals (gamma^(1)-1)/2
///   2  closed-form degree agrees with the quadratic relation
///   3  constructed families pass the necessary conditions, saturating
///      the quadratic relation and the genus bound
///   4  coefficient identities of the decomposition close exactly
///   5  exactly one reading of each written ambiguity verifies, stably
///   6  three worked instances agree along all three routes
///   7  brute-force oracle matches, and injected faults are detected
///   8  randomized lattice axioms (bilinearity, symmetry, parity,
///      equivalence is a congruence)
///   9  genus grows strictly along the mu = (0,t,t,t) ray
VerifyReport verify_paper(std::int64_t d_max, std::int64_t mu_max);

}  // namespace oscover
