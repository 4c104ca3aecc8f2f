#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscover/typesystem.hpp"

namespace oscover {

/// Parameter vector of the constructed families. Parity constraint:
/// mu0+1 = mu1 = mu2 = mu3 (mod 2), all entries non-negative.
struct MuVector {
  Vec4 mu{0, 1, 1, 1};

  MuVector() = default;
  explicit MuVector(const Vec4& m);

  std::int64_t sum() const;
  std::int64_t sum_squares() const;

  friend bool operator==(const MuVector&, const MuVector&) = default;
};

enum class EpsFamily { A, B };

// The offset vector comes in two normalizations differing by a factor 2;
// the full-size one is canonical here, the half-size one is accepted on
// input and converted.
enum class EpsConvention { french, english };

/// Choice of offset family: pattern A has |eps_i| = (2d-2)(1-delta_{i,k});
/// pattern B is a signed permutation of (d-2,d,d,d) for even d and of
/// (d+1,d-1,d-1,d-1) for odd d, with k the index carrying the
/// distinguished entry. Signs at positions where the pattern vanishes are
/// ignored.
struct EpsilonChoice {
  EpsFamily family = EpsFamily::A;
  int k = 0;
  std::array<int, 4> signs{1, 1, 1, 1};
  EpsConvention convention = EpsConvention::french;
};

/// Resolved offset vector in the canonical (full-size) normalization.
Vec4 epsilon_vector(std::int64_t d, const EpsilonChoice& eps);

/// gamma_i = (2d-1) mu_i + eps_i. Throws if any entry is negative.
TypeVector gamma_of(std::int64_t d, const MuVector& mu, const EpsilonChoice& eps);

struct DegreeGenus {
  std::int64_t n = 0;
  std::int64_t g = 0;
};

/// Invert gamma^(2) = (2d-1)(2n-2)+3 and gamma^(1) = 2g+1. Returns
/// nothing when no positive integer n (or integer g) exists.
std::optional<DegreeGenus> try_degree_genus(std::int64_t d, const TypeVector& gamma);

/// Same as try_degree_genus but throws DomainError when the type is not
/// realizable by the quadratic relation.
DegreeGenus degree_genus_of(std::int64_t d, const TypeVector& gamma);

/// Degree by the closed form 2n = (2d-1) mu^(2) + 2 sum_i mu_i eps_i + 6d-7,
/// stated for pattern A (any k, any signs). Throws UnsupportedFormError for
/// pattern B, whose degree comes from the quadratic relation instead.
std::int64_t closed_form_degree(std::int64_t d, const MuVector& mu, const EpsilonChoice& eps);

/// The invariant-curve class template: for alpha in N^4 with
/// alpha_k + 1 = alpha_j (mod 2) for all j != k, the class
///
///   e*( (1/2)(-1 + sum alpha_i^2) C0 + F(w_k) ) - s_k - sum_i alpha_i r_i.
///
/// Each such class contains a unique irreducible invariant curve; the
/// classes built from it are tagged invariant-by-construction.
PicClass z_class(const Vec4& alpha, int k);

/// Class of the target linear system of a degree-n type-gamma family:
/// e*(n C0 + (2d-1) F(w0)) - s0 - sum_i gamma_i r_i, all fibers over w0.
PicClass lambda_class(std::int64_t d, std::int64_t n, const TypeVector& gamma);

/// Componentwise comparison of a candidate class against a linear-system
/// class: which basis coefficients (and whether degree/torsion) obstruct
/// membership.
struct MembershipReport {
  PicClass difference;  // candidate minus target
  bool coefficients_match = false;
  bool torsion_match = false;
  bool member = false;
  std::vector<std::string> obstructions;
};

MembershipReport membership_report(const PicClass& cls, const PicClass& lambda);

// The written source of the construction is ambiguous in two places; both
// readings are implemented and the one satisfying the equivalence checks
// is adopted.
enum class ZPrimeFiber { origin, omega1 };       // fiber label of Z'
enum class SMultiplicity { single, double_s };   // multiplicity of s_k inside F_j

struct ReadingReport {
  ZPrimeFiber zprime_adopted = ZPrimeFiber::omega1;
  bool zprime_origin_ok = false;
  bool zprime_omega1_ok = false;
  MembershipReport zprime_rejected_diff;  // D1 under the rejected reading vs D0

  SMultiplicity f_adopted = SMultiplicity::double_s;
  bool f_applicable = false;  // there are no F_j when d = 1
  bool f_single_ok = false;
  bool f_double_ok = false;
  MembershipReport f_rejected_diff;  // F_0 under the rejected reading vs lambda
};

struct VerificationReport {
  bool d0_equiv_d1 = false;
  bool g_in_lambda = false;
  bool f_in_lambda = false;  // all j; vacuously true when d = 1
  bool c_identity_f = false; // 1 + sum_k m(k) + (d-2)(m+ + m-) = n
  bool c_identity_g = false; // m + (d-1)(m+ + m-) = n
  bool r_identity = false;   // mu_i + (d-1)(mu+_i + mu-_i) = gamma_i
  bool witness_adjunction = false;
  bool witness_cover_check = false;
  bool adjunction_matches_genus = false;  // requested lambda
  bool cover_check_pass = false;          // requested (d, n, 1, g, gamma)
  bool closed_form_applicable = false;
  bool closed_form_matches = false;

  bool all() const;
};

/// One constituent class of the construction, with its invariance tag.
struct Constituent {
  std::string name;
  PicClass cls;
  bool tau_invariant = true;
  std::string source;  // "z-class" or "composite"
};

/// The decomposition witnessing the family: the auxiliary classes built
/// from mu alone (distinguished index 0, positive offsets).
struct Witness {
  TypeVector gamma;
  std::int64_t n = 0;
  std::int64_t g = 0;
  PicClass lambda;

  std::int64_t m = 0, m_plus = 0, m_minus = 0, m_prime = 0;
  std::array<std::int64_t, 3> m_k{0, 0, 0};
  bool z_minus_composite = false;  // mu0 = 0: Z- is Z+ + 2 r0 as a class

  PicClass z;                     // from mu
  std::array<PicClass, 3> z_k;    // from mu + (0,0,1,1), (0,1,0,1), (0,1,1,0)
  PicClass z_plus, z_minus, z_prime;
  PicClass d0, d1;
  std::vector<PicClass> f;        // j = 0..d-2
  PicClass g_divisor;             // z + (d-1) d0

  ReadingReport readings;

  std::vector<Constituent> constituents() const;
};

/// Full description of one constructed family.
struct FamilySpec {
  std::int64_t d = 1;
  MuVector mu;
  EpsilonChoice eps;
  Vec4 eps_vector{0, 0, 0, 0};

  TypeVector gamma;
  std::int64_t n = 0;
  std::int64_t g = 0;
  std::int64_t family_dimension = 0;  // d-1
  PicClass lambda;

  // The decomposition exists for the distinguished-index-0, positive-offset
  // pattern-A data of the same (d, mu); when the requested offsets differ,
  // the witness documents the construction and witness_matches_type is
  // false. It is absent only when the witness type itself has no positive
  // degree (d = 1, mu^(2) = 1).
  std::optional<Witness> witness;
  bool witness_matches_type = false;

  VerificationReport verification;
};

/// A verification the builder guarantees failed; carries the failing check
/// and both classes so the mismatch can be localized.
class InconsistencyError : public std::runtime_error {
 public:
  InconsistencyError(const std::string& check, const PicClass& lhs, const PicClass& rhs);
  explicit InconsistencyError(const std::string& check);

  const std::string& check() const { return check_; }
  const std::optional<PicClass>& lhs() const { return lhs_; }
  const std::optional<PicClass>& rhs() const { return rhs_; }

 private:
  std::string check_;
  std::optional<PicClass> lhs_, rhs_;
};

/// Build and verify one family. Throws DomainError when (d, mu, eps) has
/// no realizable type, InconsistencyError when any verification fails.
FamilySpec build_family(std::int64_t d, const MuVector& mu, const EpsilonChoice& eps);

std::string to_string(EpsFamily f);
std::string to_string(ZPrimeFiber f);
std::string to_string(SMultiplicity m);

}  // namespace oscover
