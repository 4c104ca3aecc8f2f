#include "oscover/verify.hpp"

#include <limits>
#include <random>
#include <sstream>

namespace oscover {

namespace {

constexpr std::uint64_t kAxiomSeed = 0x0c0ffee0d15c0ull;
constexpr std::int64_t kAxiomTrials = 10000;

std::vector<Vec4> parity_mus(std::int64_t mu_max) {
  std::vector<Vec4> out;
  for (std::int64_t a = 0; a <= mu_max; ++a)
    for (std::int64_t b = 0; b <= mu_max; ++b)
      for (std::int64_t c = 0; c <= mu_max; ++c)
        for (std::int64_t e = 0; e <= mu_max; ++e)
          if ((a + 1 - b) % 2 == 0 && (b - c) % 2 == 0 && (c - e) % 2 == 0)
            out.push_back({a, b, c, e});
  return out;
}

std::vector<EpsilonChoice> all_choices() {
  std::vector<EpsilonChoice> out;
  for (EpsFamily family : {EpsFamily::A, EpsFamily::B})
    for (int k = 0; k < 4; ++k)
      for (int mask = 0; mask < 16; ++mask) {
        EpsilonChoice c{family, k, {1, 1, 1, 1}, EpsConvention::french};
        for (int b = 0; b < 4; ++b)
          if (mask & (1 << b)) c.signs[static_cast<std::size_t>(b)] = -1;
        out.push_back(c);
      }
  return out;
}

CriterionResult genus_identity(std::int64_t d_max, std::int64_t mu_max) {
  CriterionResult res{1, "adjunction-genus identity", true, 0, ""};
  for (std::int64_t d = 1; d <= d_max; ++d) {
    const auto choices = all_choices();
    for (const auto& mu_vec : parity_mus(mu_max)) {
      const MuVector mu(mu_vec);
      for (const auto& eps : choices) {
        TypeVector gamma;
        try {
          gamma = gamma_of(d, mu, eps);
        } catch (const DomainError&) {
          continue;
        }
        const auto dg = try_degree_genus(d, gamma);
        if (!dg) continue;
        ++res.cases;
        const std::int64_t pa = adjunction_genus(lambda_class(d, dg->n, gamma));
        if (pa != (gamma.sum() - 1) / 2 || pa != dg->g) {
          res.pass = false;
          res.detail = "first failure at d=" + std::to_string(d);
          return res;
        }
      }
    }
  }
  res.detail = std::to_string(res.cases) + " system classes checked";
  return res;
}

CriterionResult degree_consistency(std::int64_t d_max, std::int64_t mu_max) {
  CriterionResult res{2, "degree closed form vs quadratic relation", true, 0, ""};
  for (std::int64_t d = 1; d <= d_max; ++d) {
    const auto choices = all_choices();
    for (const auto& mu_vec : parity_mus(mu_max)) {
      const MuVector mu(mu_vec);
      for (const auto& eps : choices) {
        if (eps.family != EpsFamily::A) continue;
        TypeVector gamma;
        try {
          gamma = gamma_of(d, mu, eps);
        } catch (const DomainError&) {
          continue;
        }
        const auto dg = try_degree_genus(d, gamma);
        if (!dg) continue;
        ++res.cases;
        if (closed_form_degree(d, mu, eps) != dg->n) {
          res.pass = false;
          res.detail = "closed form diverges at d=" + std::to_string(d);
          return res;
        }
      }
    }
  }
  // at d = 2 the two offset patterns must resolve to the same vectors
  for (int k = 0; k < 4; ++k)
    for (int mask = 0; mask < 16; ++mask) {
      std::array<int, 4> signs{1, 1, 1, 1};
      for (int b = 0; b < 4; ++b)
        if (mask & (1 << b)) signs[static_cast<std::size_t>(b)] = -1;
      ++res.cases;
      const Vec4 ea = epsilon_vector(2, {EpsFamily::A, k, signs, EpsConvention::french});
      const Vec4 eb = epsilon_vector(2, {EpsFamily::B, k, signs, EpsConvention::french});
      if (ea != eb) {
        res.pass = false;
        res.detail = "patterns A and B differ at d=2";
        return res;
      }
    }
  res.detail = std::to_string(res.cases) + " degrees cross-checked";
  return res;
}

CriterionResult saturation(std::int64_t d_max, std::int64_t mu_max) {
  CriterionResult res{3, "necessary-condition saturation", true, 0, ""};
  SweepConfig cfg;
  cfg.d_max = d_max;
  cfg.mu_max = mu_max;
  cfg.genus_max = std::numeric_limits<std::int64_t>::max() / 4;
  for (const auto& row : enumerate_families(cfg)) {
    ++res.cases;
    const bool cover_ok = check_cover({row.d, row.n, 1, row.g, row.gamma}).pass();
    const bool saturated = row.gamma.sum_squares() == (2 * row.d - 1) * (2 * row.n - 2) + 3;
    const bool genus_tight = 2 * row.g + 1 == row.gamma.sum();
    if (!cover_ok || !saturated || !genus_tight) {
      res.pass = false;
      res.detail = "row (d=" + std::to_string(row.d) + ") violates saturation";
      return res;
    }
  }
  res.detail = std::to_string(res.cases) + " constructed families saturate the bounds";
  return res;
}

CriterionResult identities(std::int64_t d_max, std::int64_t mu_max) {
  CriterionResult res{4, "decomposition coefficient identities", true, 0, ""};
  for (std::int64_t d = 1; d <= d_max; ++d)
    for (const auto& mu_vec : parity_mus(mu_max)) {
      const MuVector mu(mu_vec);
      const EpsilonChoice ref;
      TypeVector gamma = gamma_of(d, mu, ref);
      if (!try_degree_genus(d, gamma)) continue;
      const FamilySpec fam = build_family(d, mu, ref);
      ++res.cases;
      const auto& v = fam.verification;
      if (!fam.witness || !v.c_identity_f || !v.c_identity_g || !v.r_identity) {
        res.pass = false;
        res.detail = "identity failure at d=" + std::to_string(d);
        return res;
      }
    }
  res.detail = std::to_string(res.cases) + " decompositions closed exactly";
  return res;
}

CriterionResult readings(std::int64_t d_max, std::int64_t mu_max) {
  CriterionResult res{5, "reading resolution", true, 0, ""};
  bool any_f_cell = false;
  for (std::int64_t d = 1; d <= d_max; ++d)
    for (const auto& mu_vec : parity_mus(mu_max)) {
      const MuVector mu(mu_vec);
      const EpsilonChoice ref;
      TypeVector gamma = gamma_of(d, mu, ref);
      if (!try_degree_genus(d, gamma)) continue;
      const FamilySpec fam = build_family(d, mu, ref);
      if (!fam.witness) continue;
      ++res.cases;
      const ReadingReport& r = fam.witness->readings;
      const bool z_exact = r.zprime_omega1_ok && !r.zprime_origin_ok &&
                           r.zprime_adopted == ZPrimeFiber::omega1;
      bool f_exact = true;
      if (r.f_applicable) {
        any_f_cell = true;
        f_exact = r.f_double_ok && !r.f_single_ok && r.f_adopted == SMultiplicity::double_s;
      }
      if (!z_exact || !f_exact) {
        res.pass = false;
        res.detail = "reading not unique/stable at d=" + std::to_string(d);
        return res;
      }
    }
  if (d_max >= 2 && !any_f_cell) {
    res.pass = false;
    res.detail = "no cell exercised the s-multiplicity reading";
    return res;
  }
  res.detail = "adopted: Z' fiber over w1, s-multiplicity 2 (" + std::to_string(res.cases) +
               " decompositions)";
  return res;
}

CriterionResult worked_instances() {
  CriterionResult res{6, "worked instances", true, 0, ""};
  struct Instance {
    std::int64_t d;
    Vec4 mu;
    std::int64_t n, g;
    Vec4 gamma;
  };
  const Instance table[] = {
      {1, {2, 1, 1, 1}, 3, 2, {2, 1, 1, 1}},
      {2, {0, 1, 1, 1}, 13, 7, {0, 5, 5, 5}},
      {3, {0, 1, 1, 1}, 25, 13, {0, 9, 9, 9}},
  };
  for (const auto& inst : table) {
    ++res.cases;
    const MuVector mu(inst.mu);
    const EpsilonChoice ref;
    const TypeVector gamma = gamma_of(inst.d, mu, ref);
    const DegreeGenus dg = degree_genus_of(inst.d, gamma);
    const std::int64_t n_closed = closed_form_degree(inst.d, mu, ref);
    const std::int64_t pa = adjunction_genus(lambda_class(inst.d, dg.n, gamma));
    const bool ok = gamma.gamma == inst.gamma && dg.n == inst.n && n_closed == inst.n &&
                    dg.g == inst.g && pa == inst.g;
    if (!ok) {
      res.pass = false;
      res.detail = "instance d=" + std::to_string(inst.d) + " disagrees";
      return res;
    }
  }
  res.detail = "3 instances, 3 agreeing routes each";
  return res;
}

CriterionResult oracle_equivalence() {
  CriterionResult res{7, "oracle equivalence and fault detection", true, 0, ""};
  for (std::int64_t d = 1; d <= 4; ++d) {
    const OracleReport rep = oracle_crosscheck(d, 10);
    res.cases += rep.cells_checked;
    if (!rep.clean()) {
      res.pass = false;
      res.detail = "oracle diff at d=" + std::to_string(d);
      return res;
    }
  }
  const FaultInjection faults[] = {FaultInjection::parity, FaultInjection::genus_bound,
                                   FaultInjection::quadratic_bound,
                                   FaultInjection::ramification_bound,
                                   FaultInjection::degree_relation};
  for (const auto fault : faults) {
    bool detected = false;
    for (std::int64_t d = 1; d <= 2 && !detected; ++d)
      detected = !oracle_crosscheck(d, 6, fault).clean();
    if (!detected) {
      res.pass = false;
      res.detail = "fault " + to_string(fault) + " not detected";
      return res;
    }
  }
  res.detail = std::to_string(res.cases) + " cells clean; 5/5 injected faults detected";
  return res;
}

CriterionResult lattice_axioms() {
  CriterionResult res{8, "lattice axioms", true, 0, ""};
  std::mt19937_64 rng(kAxiomSeed);
  std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
  std::uniform_int_distribution<std::int64_t> scalar(-3, 3);
  std::uniform_int_distribution<std::int64_t> small(-2, 2);

  auto random_class = [&] {
    PicClass p;
    p.c = coeff(rng);
    for (std::size_t i = 0; i < 4; ++i) {
      p.fibers[i] = coeff(rng);
      p.s[i] = coeff(rng);
      p.r[i] = coeff(rng);
    }
    return p;
  };

  // degree- and torsion-preserving fiber moves
  const Vec4 kernel[3] = {{1, 1, -1, -1}, {1, -1, 1, -1}, {2, -2, 0, 0}};
  const PicClass k_class = canonical_class();

  for (std::int64_t trial = 0; trial < kAxiomTrials; ++trial) {
    ++res.cases;
    const PicClass a = random_class();
    const PicClass b = random_class();
    const PicClass x = random_class();
    const std::int64_t t = scalar(rng);

    bool ok = intersect(a, b) == intersect(b, a);
    ok = ok && intersect(a + b, x) == intersect(a, x) + intersect(b, x);
    ok = ok && intersect(t * a, x) == t * intersect(a, x);
    ok = ok && intersect(a, a + k_class) % 2 == 0;

    PicClass a_equiv = a;
    for (const auto& kv : kernel) {
      const std::int64_t u = small(rng);
      for (std::size_t i = 0; i < 4; ++i) a_equiv.fibers[i] += u * kv[i];
    }
    ok = ok && lin_equiv(a, a_equiv) && intersect(a_equiv, x) == intersect(a, x);

    if (!ok) {
      res.pass = false;
      res.detail = "axiom failure at trial " + std::to_string(trial);
      return res;
    }
  }
  res.detail = std::to_string(res.cases) + " randomized triples";
  return res;
}

CriterionResult unbounded_genus(std::int64_t mu_max) {
  CriterionResult res{9, "unbounded genus", true, 0, ""};
  std::int64_t prev = -1;
  for (std::int64_t t = 1; t <= std::min<std::int64_t>(7, mu_max); t += 2) {
    ++res.cases;
    const FamilySpec fam = build_family(2, MuVector({0, t, t, t}), EpsilonChoice{});
    const std::int64_t expected = (9 * t + 5) / 2;
    if (fam.g != expected || fam.g <= prev) {
      res.pass = false;
      res.detail = "genus not strictly increasing at t=" + std::to_string(t);
      return res;
    }
    prev = fam.g;
  }
  res.detail = "g strictly increasing along mu=(0,t,t,t), " + std::to_string(res.cases) +
               " points";
  return res;
}

}  // namespace

bool VerifyReport::pass() const {
  for (const auto& c : criteria)
    if (!c.pass) return false;
  return true;
}

VerifyReport verify_paper(std::int64_t d_max, std::int64_t mu_max) {
  if (d_max < 1 || mu_max < 0) throw DomainError("sweep bounds must be positive");
  VerifyReport rep;
  rep.d_max = d_max;
  rep.mu_max = mu_max;
  rep.criteria.push_back(genus_identity(d_max, mu_max));
  rep.criteria.push_back(degree_consistency(d_max, mu_max));
  rep.criteria.push_back(saturation(d_max, mu_max));
  rep.criteria.push_back(identities(d_max, mu_max));
  rep.criteria.push_back(readings(d_max, mu_max));
  rep.criteria.push_back(worked_instances());
  rep.criteria.push_back(oracle_equivalence());
  rep.criteria.push_back(lattice_axioms());
  rep.criteria.push_back(unbounded_genus(mu_max));
  return rep;
}

}  // namespace oscover
