#include "oscover/builder.hpp"

#include "oscover/checked.hpp"

namespace oscover {

namespace {

std::int64_t sum_of(const Vec4& v) {
  std::int64_t acc = 0;
  for (auto x : v) acc = checked_add(acc, x);
  return acc;
}

std::int64_t sum_squares_of(const Vec4& v) {
  std::int64_t acc = 0;
  for (auto x : v) acc = checked_add(acc, checked_mul(x, x));
  return acc;
}

Vec4 plus(const Vec4& a, const Vec4& b) {
  return {checked_add(a[0], b[0]), checked_add(a[1], b[1]), checked_add(a[2], b[2]),
          checked_add(a[3], b[3])};
}

bool same_parity(std::int64_t a, std::int64_t b) { return ((a - b) % 2) == 0; }

// half the (sum of squares - 1), the degree coefficient attached to an
// invariant-curve parameter vector
std::int64_t half_sq(const Vec4& v) {
  const std::int64_t sq = sum_squares_of(v);
  if (sq % 2 == 0) throw DomainError("parameter vector must have odd square sum");
  return (sq - 1) / 2;
}

}  // namespace

MuVector::MuVector(const Vec4& m) : mu(m) {
  for (auto x : mu)
    if (x < 0) throw DomainError("mu entries must be non-negative");
  if (!(same_parity(mu[0] + 1, mu[1]) && same_parity(mu[1], mu[2]) && same_parity(mu[2], mu[3])))
    throw DomainError("mu must satisfy mu0+1 = mu1 = mu2 = mu3 (mod 2)");
}

std::int64_t MuVector::sum() const { return sum_of(mu); }
std::int64_t MuVector::sum_squares() const { return sum_squares_of(mu); }

Vec4 epsilon_vector(std::int64_t d, const EpsilonChoice& eps) {
  if (d < 1) throw DomainError("osculating order must be positive");
  if (eps.k < 0 || eps.k > 3) throw DomainError("distinguished index must be in 0..3");
  for (int s : eps.signs)
    if (s != 1 && s != -1) throw DomainError("signs must be +1 or -1");

  Vec4 mag{};
  const bool even = d % 2 == 0;
  const std::int64_t twice_d = checked_mul(2, d);
  for (std::size_t i = 0; i < 4; ++i) {
    const bool at_k = static_cast<int>(i) == eps.k;
    if (eps.convention == EpsConvention::french) {
      if (eps.family == EpsFamily::A) {
        mag[i] = at_k ? 0 : twice_d - 2;
      } else {
        mag[i] = at_k ? (even ? d - 2 : checked_add(d, 1)) : (even ? d : d - 1);
      }
    } else {
      // half-size convention; doubled below
      if (eps.family == EpsFamily::A) {
        mag[i] = at_k ? 0 : d - 1;
      } else {
        mag[i] = d / 2 - (even ? 1 : -1) * (at_k ? 1 : 0);
      }
      mag[i] = checked_mul(2, mag[i]);
    }
  }

  Vec4 out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = eps.signs[i] * mag[i];
  return out;
}

TypeVector gamma_of(std::int64_t d, const MuVector& mu, const EpsilonChoice& eps) {
  const Vec4 e = epsilon_vector(d, eps);
  const std::int64_t sheets = checked_sub(checked_mul(2, d), 1);
  Vec4 g{};
  for (std::size_t i = 0; i < 4; ++i) {
    g[i] = checked_add(checked_mul(sheets, mu.mu[i]), e[i]);
    if (g[i] < 0) throw DomainError("type must be in N^4");
  }
  return TypeVector(g);
}

std::optional<DegreeGenus> try_degree_genus(std::int64_t d, const TypeVector& gamma) {
  if (d < 1) return std::nullopt;
  const std::int64_t sheets = checked_sub(checked_mul(2, d), 1);
  const std::int64_t q = checked_sub(gamma.sum_squares(), 3);
  if (q < 0) return std::nullopt;
  if (q % sheets != 0) return std::nullopt;
  const std::int64_t q2 = q / sheets;
  if (q2 % 2 != 0) return std::nullopt;
  const std::int64_t g1 = gamma.sum();
  if (g1 % 2 == 0) return std::nullopt;
  return DegreeGenus{q2 / 2 + 1, (g1 - 1) / 2};
}

DegreeGenus degree_genus_of(std::int64_t d, const TypeVector& gamma) {
  if (d < 1) throw DomainError("osculating order must be positive");
  auto dg = try_degree_genus(d, gamma);
  if (!dg) throw DomainError("type not realizable by the quadratic degree relation");
  return *dg;
}

std::int64_t closed_form_degree(std::int64_t d, const MuVector& mu, const EpsilonChoice& eps) {
  if (eps.family != EpsFamily::A)
    throw UnsupportedFormError(
        "closed-form degree is stated for offset pattern A only; for pattern B the stated form "
        "misses the quadratic relation by 4-2d (the relation is authoritative)");
  const Vec4 e = epsilon_vector(d, eps);
  std::int64_t dot = 0;
  for (std::size_t i = 0; i < 4; ++i) dot = checked_add(dot, checked_mul(mu.mu[i], e[i]));
  const std::int64_t sheets = checked_sub(checked_mul(2, d), 1);
  const std::int64_t twice =
      checked_add(checked_add(checked_mul(sheets, mu.sum_squares()), checked_mul(2, dot)),
                  checked_sub(checked_mul(6, d), 7));
  if (twice % 2 != 0) throw DomainError("closed-form degree is not an integer");
  return twice / 2;
}

PicClass z_class(const Vec4& alpha, int k) {
  if (k < 0 || k > 3) throw DomainError("fiber index must be in 0..3");
  for (auto a : alpha)
    if (a < 0) throw DomainError("alpha entries must be non-negative");
  for (int j = 0; j < 4; ++j) {
    if (j == k) continue;
    if (!same_parity(alpha[static_cast<std::size_t>(k)] + 1, alpha[static_cast<std::size_t>(j)]))
      throw DomainError("alpha must satisfy alpha_k+1 = alpha_j (mod 2) for j != k");
  }
  PicClass out;
  out.c = half_sq(alpha);
  out.fibers[static_cast<std::size_t>(k)] = 1;
  out.s[static_cast<std::size_t>(k)] = -1;
  for (std::size_t i = 0; i < 4; ++i) out.r[i] = -alpha[i];
  return out;
}

PicClass lambda_class(std::int64_t d, std::int64_t n, const TypeVector& gamma) {
  if (d < 1) throw DomainError("osculating order must be positive");
  PicClass out;
  out.c = n;
  out.fibers[0] = checked_sub(checked_mul(2, d), 1);
  out.s[0] = -1;
  for (std::size_t i = 0; i < 4; ++i) out.r[i] = -gamma.gamma[i];
  return out;
}

MembershipReport membership_report(const PicClass& cls, const PicClass& lambda) {
  MembershipReport rep;
  rep.difference = cls - lambda;
  rep.coefficients_match = rep.difference.c == 0 && rep.difference.s == Vec4{0, 0, 0, 0} &&
                           rep.difference.r == Vec4{0, 0, 0, 0} &&
                           rep.difference.fiber_degree() == 0;
  rep.torsion_match = cls.torsion() == lambda.torsion();
  rep.member = lin_equiv(cls, lambda);

  if (rep.difference.c != 0) rep.obstructions.push_back("c");
  for (std::size_t i = 0; i < 4; ++i)
    if (rep.difference.s[i] != 0) rep.obstructions.push_back("s" + std::to_string(i));
  for (std::size_t i = 0; i < 4; ++i)
    if (rep.difference.r[i] != 0) rep.obstructions.push_back("r" + std::to_string(i));
  if (rep.difference.fiber_degree() != 0) rep.obstructions.push_back("fiber-degree");
  if (!rep.torsion_match) rep.obstructions.push_back("torsion");
  return rep;
}

bool VerificationReport::all() const {
  return d0_equiv_d1 && g_in_lambda && f_in_lambda && c_identity_f && c_identity_g && r_identity &&
         witness_adjunction && witness_cover_check && adjunction_matches_genus &&
         cover_check_pass && (!closed_form_applicable || closed_form_matches);
}

InconsistencyError::InconsistencyError(const std::string& check, const PicClass& lhs,
                                       const PicClass& rhs)
    : std::runtime_error("construction inconsistency: " + check),
      check_(check),
      lhs_(lhs),
      rhs_(rhs) {}

InconsistencyError::InconsistencyError(const std::string& check)
    : std::runtime_error("construction inconsistency: " + check), check_(check) {}

std::vector<Constituent> Witness::constituents() const {
  std::vector<Constituent> out;
  out.push_back({"Z", z, true, "z-class"});
  for (int k = 1; k <= 3; ++k)
    out.push_back({"Z_(" + std::to_string(k) + ")", z_k[static_cast<std::size_t>(k - 1)], true,
                   "z-class"});
  out.push_back({"Z_plus", z_plus, true, "z-class"});
  out.push_back({"Z_minus", z_minus, true, z_minus_composite ? "composite" : "z-class"});
  out.push_back({"Z_prime", z_prime, true,
                 readings.zprime_adopted == ZPrimeFiber::omega1 ? "z-class" : "composite"});
  out.push_back({"D_0", d0, true, "composite"});
  out.push_back({"D_1", d1, true, "composite"});
  for (std::size_t j = 0; j < f.size(); ++j)
    out.push_back({"F_" + std::to_string(j), f[j], true, "composite"});
  out.push_back({"G", g_divisor, true, "composite"});
  return out;
}

namespace {

// The decomposition of the proof, written for distinguished index 0 and
// positive offsets; depends only on (d, mu).
Witness build_witness(std::int64_t d, const MuVector& mu, const TypeVector& gamma_w,
                      const DegreeGenus& dg, VerificationReport& v) {
  const Vec4& m4 = mu.mu;

  Witness w;
  w.gamma = gamma_w;
  w.n = dg.n;
  w.g = dg.g;
  w.lambda = lambda_class(d, w.n, w.gamma);

  w.m = half_sq(m4);
  w.z = z_class(m4, 0);

  const std::array<Vec4, 3> mu_k = {plus(m4, {0, 0, 1, 1}), plus(m4, {0, 1, 0, 1}),
                                    plus(m4, {0, 1, 1, 0})};
  for (std::size_t k = 0; k < 3; ++k) {
    w.m_k[k] = half_sq(mu_k[k]);
    w.z_k[k] = z_class(mu_k[k], static_cast<int>(k) + 1);
  }

  const Vec4 mu_plus = plus(m4, {1, 1, 1, 1});
  w.m_plus = half_sq(mu_plus);
  w.z_plus = z_class(mu_plus, 0);

  const Vec4 mu_minus = plus(m4, {-1, 1, 1, 1});  // mu0-1 may be -1; squared below
  w.m_minus = half_sq(mu_minus);
  if (m4[0] >= 1) {
    w.z_minus = z_class(mu_minus, 0);
    w.z_minus_composite = false;
  } else {
    w.z_minus = w.z_plus + 2 * PicClass::r_exceptional(0);
    w.z_minus_composite = true;
  }

  w.d0 = w.z_plus + w.z_minus + 2 * PicClass::s_exceptional(0);

  // Z': both readings of its fiber label; each gives a candidate D_1.
  const Vec4 mu_prime = plus(m4, {0, 2, 1, 1});
  w.m_prime = half_sq(mu_prime);
  const PicClass zp_omega1 = z_class(mu_prime, 1);
  PicClass zp_origin = zp_omega1;
  zp_origin.fibers[1] = 0;
  zp_origin.fibers[0] = 1;

  const PicClass two_s1 = 2 * PicClass::s_exceptional(1);
  const PicClass d1_omega1 = zp_omega1 + w.z_k[0] + two_s1;
  const PicClass d1_origin = zp_origin + w.z_k[0] + two_s1;

  w.readings.zprime_omega1_ok = lin_equiv(w.d0, d1_omega1);
  w.readings.zprime_origin_ok = lin_equiv(w.d0, d1_origin);
  if (w.readings.zprime_omega1_ok == w.readings.zprime_origin_ok)
    throw InconsistencyError("exactly one fiber reading of Z' must make D_0 ~ D_1", d1_origin,
                             d1_omega1);
  if (w.readings.zprime_omega1_ok) {
    w.readings.zprime_adopted = ZPrimeFiber::omega1;
    w.z_prime = zp_omega1;
    w.d1 = d1_omega1;
    w.readings.zprime_rejected_diff = membership_report(d1_origin, w.d0);
  } else {
    w.readings.zprime_adopted = ZPrimeFiber::origin;
    w.z_prime = zp_origin;
    w.d1 = d1_origin;
    w.readings.zprime_rejected_diff = membership_report(d1_omega1, w.d0);
  }

  // F_j: both readings of the s_k multiplicity.
  w.readings.f_applicable = d >= 2;
  if (d >= 2) {
    auto build_f = [&](std::int64_t mult) {
      PicClass base = PicClass::strict_section();
      for (int k = 1; k <= 3; ++k)
        base += w.z_k[static_cast<std::size_t>(k - 1)] + mult * PicClass::s_exceptional(k);
      std::vector<PicClass> fs;
      for (std::int64_t j = 0; j <= d - 2; ++j)
        fs.push_back(base + j * w.d0 + (d - 2 - j) * w.d1);
      return fs;
    };
    const auto f_single = build_f(1);
    const auto f_double = build_f(2);
    auto all_in = [&](const std::vector<PicClass>& fs) {
      for (const auto& fj : fs)
        if (!lin_equiv(fj, w.lambda)) return false;
      return true;
    };
    w.readings.f_single_ok = all_in(f_single);
    w.readings.f_double_ok = all_in(f_double);
    if (w.readings.f_single_ok == w.readings.f_double_ok)
      throw InconsistencyError("exactly one s-multiplicity reading must put every F_j in lambda",
                               f_single[0], f_double[0]);
    if (w.readings.f_double_ok) {
      w.readings.f_adopted = SMultiplicity::double_s;
      w.f = f_double;
      w.readings.f_rejected_diff = membership_report(f_single[0], w.lambda);
    } else {
      w.readings.f_adopted = SMultiplicity::single;
      w.f = f_single;
      w.readings.f_rejected_diff = membership_report(f_double[0], w.lambda);
    }
  } else {
    // no F_j at d = 1; the double-s reading is the sweep-wide convention
    w.readings.f_adopted = SMultiplicity::double_s;
    w.readings.f_single_ok = true;
    w.readings.f_double_ok = true;
  }

  w.g_divisor = w.z + (d - 1) * w.d0;

  v.d0_equiv_d1 = lin_equiv(w.d0, w.d1);
  v.g_in_lambda = lin_equiv(w.g_divisor, w.lambda);
  v.f_in_lambda = true;
  for (const auto& fj : w.f) v.f_in_lambda = v.f_in_lambda && lin_equiv(fj, w.lambda);

  const std::int64_t m_pm = checked_add(w.m_plus, w.m_minus);
  std::int64_t m_k_sum = 0;
  for (auto mk : w.m_k) m_k_sum = checked_add(m_k_sum, mk);
  v.c_identity_f = checked_add(checked_add(1, m_k_sum), checked_mul(d - 2, m_pm)) == w.n;
  v.c_identity_g = checked_add(w.m, checked_mul(d - 1, m_pm)) == w.n;

  v.r_identity = true;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::int64_t via_pm = m4[i] + (d - 1) * (mu_plus[i] + mu_minus[i]);
    const std::int64_t via_offset = (2 * d - 1) * m4[i] + (2 * d - 2) * (i == 0 ? 0 : 1);
    v.r_identity = v.r_identity && via_pm == w.gamma.gamma[i] && via_offset == w.gamma.gamma[i];
  }

  v.witness_adjunction = adjunction_genus(w.lambda) == w.g;
  v.witness_cover_check = check_cover({d, w.n, 1, w.g, w.gamma}).pass();

  return w;
}

[[noreturn]] void throw_first_failure(const VerificationReport& v, const FamilySpec& fam) {
  if (fam.witness) {
    const Witness& w = *fam.witness;
    if (!v.d0_equiv_d1) throw InconsistencyError("D_0 ~ D_1", w.d0, w.d1);
    if (!v.g_in_lambda) throw InconsistencyError("G in lambda", w.g_divisor, w.lambda);
    if (!v.f_in_lambda) {
      for (const auto& fj : w.f)
        if (!lin_equiv(fj, w.lambda)) throw InconsistencyError("F_j in lambda", fj, w.lambda);
    }
    if (!v.c_identity_f) throw InconsistencyError("c-coefficient identity for F");
    if (!v.c_identity_g) throw InconsistencyError("c-coefficient identity for G");
    if (!v.r_identity) throw InconsistencyError("r-coefficient identity");
    if (!v.witness_adjunction) throw InconsistencyError("witness adjunction genus");
    if (!v.witness_cover_check) throw InconsistencyError("witness necessary conditions");
  }
  if (!v.adjunction_matches_genus)
    throw InconsistencyError("adjunction genus of lambda", fam.lambda, canonical_class());
  if (!v.cover_check_pass) throw InconsistencyError("necessary conditions at rho = 1");
  if (v.closed_form_applicable && !v.closed_form_matches)
    throw InconsistencyError("closed-form degree");
  throw InconsistencyError("unknown verification failure");
}

}  // namespace

FamilySpec build_family(std::int64_t d, const MuVector& mu, const EpsilonChoice& eps) {
  if (d < 1) throw DomainError("osculating order must be positive");

  FamilySpec fam;
  fam.d = d;
  fam.mu = mu;
  fam.eps = eps;
  fam.eps_vector = epsilon_vector(d, eps);
  fam.gamma = gamma_of(d, mu, eps);

  const auto dg = try_degree_genus(d, fam.gamma);
  if (!dg) throw DomainError("type not realizable by the quadratic degree relation");
  fam.n = dg->n;
  fam.g = dg->g;
  fam.family_dimension = d - 1;
  fam.lambda = lambda_class(d, fam.n, fam.gamma);

  VerificationReport& v = fam.verification;
  v.adjunction_matches_genus = adjunction_genus(fam.lambda) == fam.g;
  v.cover_check_pass = check_cover({d, fam.n, 1, fam.g, fam.gamma}).pass();
  v.closed_form_applicable = eps.family == EpsFamily::A;
  if (v.closed_form_applicable)
    v.closed_form_matches = closed_form_degree(d, mu, eps) == fam.n;

  const EpsilonChoice reference;  // pattern A, k = 0, positive signs
  const TypeVector gamma_w = gamma_of(d, mu, reference);
  fam.witness_matches_type = gamma_w == fam.gamma;

  if (const auto dgw = try_degree_genus(d, gamma_w)) {
    fam.witness = build_witness(d, mu, gamma_w, *dgw, v);
  } else {
    // degenerate witness type of degree zero (d = 1, mu^(2) = 1); the
    // requested family is still fully checked against its own lambda
    v.d0_equiv_d1 = v.g_in_lambda = v.f_in_lambda = true;
    v.c_identity_f = v.c_identity_g = v.r_identity = true;
    v.witness_adjunction = v.witness_cover_check = true;
  }

  if (!v.all()) throw_first_failure(v, fam);
  return fam;
}

std::string to_string(EpsFamily f) { return f == EpsFamily::A ? "A" : "B"; }

std::string to_string(ZPrimeFiber f) { return f == ZPrimeFiber::omega1 ? "w1" : "w0"; }

std::string to_string(SMultiplicity m) { return m == SMultiplicity::double_s ? "2" : "1"; }

}  // namespace oscover
