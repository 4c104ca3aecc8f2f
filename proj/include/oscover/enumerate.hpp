#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscover/builder.hpp"

namespace oscover {

struct SweepConfig {
  std::int64_t d_max = 2;
  std::int64_t mu_max = 3;        // componentwise bound on mu
  std::int64_t genus_max = 1000;
  enum class Format { csv, json } format = Format::csv;
};

struct AdmissibleType {
  TypeVector gamma;
  std::int64_t g_max = 0;  // largest g passing the genus bound
};

/// All types gamma within the quadratic bound passing the necessary
/// conditions for degree n, ramification rho, for some genus g >= 0.
/// Ordered lexicographically in gamma. Empty when rho itself is
/// inadmissible.
std::vector<AdmissibleType> enumerate_admissible(std::int64_t d, std::int64_t n, std::int64_t rho);

struct Parametrization {
  MuVector mu;
  EpsilonChoice eps;
  Vec4 eps_vector{0, 0, 0, 0};
};

/// One constructed family, deduplicated by (d, gamma); every (mu, eps)
/// realizing the same type is listed, canonical parametrization first.
struct FamilyRow {
  std::int64_t d = 1;
  TypeVector gamma;
  std::int64_t n = 0;
  std::int64_t g = 0;
  std::int64_t dim = 0;
  std::vector<Parametrization> parametrizations;
};

/// Sweep of all constructed families within the bounds. Deterministic:
/// rows in lexicographic (d, gamma) order, byte-identical output for
/// identical configs. The sweep is partitioned over workers by mu prefix
/// and merged in canonical order.
std::vector<FamilyRow> enumerate_families(const SweepConfig& cfg);

std::string families_csv(const std::vector<FamilyRow>& rows);

/// How much of the admissible set the constructions reach at one (d, n):
/// admissible types at rho = 1, the constructed ones of degree n, and the
/// difference. Reported as data; no completeness claim is attached.
struct GapReport {
  std::int64_t d = 1;
  std::int64_t n = 1;
  std::vector<TypeVector> admissible;
  std::vector<TypeVector> constructed;
  std::vector<TypeVector> unconstructed;  // admissible minus constructed
};

GapReport construction_gap(std::int64_t d, std::int64_t n);

// Single-condition faults that can be injected into the brute-force
// oracle to prove the cross-check can detect a divergence.
enum class FaultInjection {
  none,
  parity,
  genus_bound,
  quadratic_bound,
  ramification_bound,
  degree_relation,
};

struct OracleMismatch {
  std::int64_t n = 0;
  TypeVector gamma;
  std::string kind;  // "impl-only" | "oracle-only" | "degree"
};

struct OracleReport {
  std::int64_t cells_checked = 0;
  std::vector<OracleMismatch> mismatches;
  bool clean() const { return mismatches.empty(); }
};

/// Differential test: re-derives the admissible sets (and the degree
/// relation) from first principles with inline arithmetic, and diffs
/// against enumerate_admissible / degree_genus_of for every n <= n_max
/// at rho = 1.
OracleReport oracle_crosscheck(std::int64_t d, std::int64_t n_max,
                               FaultInjection fault = FaultInjection::none);

std::string to_string(FaultInjection f);

}  // namespace oscover
