#include <doctest.h>

#include <algorithm>
#include <random>

#include "gram_oracle.hpp"
#include "oscover/builder.hpp"

using namespace oscover;

TEST_CASE("invariant-curve class template") {
  const PicClass z = z_class({0, 1, 1, 1}, 0);
  CHECK(z.c == 1);
  CHECK(z.fibers == Vec4{1, 0, 0, 0});
  CHECK(z.s == Vec4{-1, 0, 0, 0});
  CHECK(z.r == Vec4{0, -1, -1, -1});

  const PicClass z2 = z_class({2, 1, 1, 1}, 0);
  CHECK(z2.c == 3);  // (4+3-1)/2
  CHECK(z2.r == Vec4{-2, -1, -1, -1});

  CHECK_THROWS_AS(z_class({1, 1, 1, 1}, 0), DomainError);   // parity
  CHECK_THROWS_AS(z_class({0, 1, 1, 1}, 4), DomainError);   // index range
  CHECK_THROWS_AS(z_class({-1, 0, 0, 0}, 0), DomainError);  // negative entry
}

TEST_CASE("mu vectors enforce the parity pattern") {
  CHECK_NOTHROW(MuVector({0, 1, 1, 1}));
  CHECK_NOTHROW(MuVector({1, 0, 0, 0}));
  CHECK_THROWS_AS(MuVector({1, 1, 1, 1}), DomainError);
  CHECK_THROWS_AS(MuVector({0, 1, 1, -1}), DomainError);
}

TEST_CASE("offset vectors and the type map") {
  CHECK(gamma_of(2, MuVector({0, 1, 1, 1}), EpsilonChoice{}).gamma == Vec4{0, 5, 5, 5});
  // at d = 1 pattern A degenerates to zero offsets
  CHECK(gamma_of(1, MuVector({2, 1, 1, 1}), EpsilonChoice{}).gamma == Vec4{2, 1, 1, 1});
  // patterns A and B coincide at d = 2
  const EpsilonChoice b2{EpsFamily::B, 0, {1, 1, 1, 1}, EpsConvention::french};
  CHECK(gamma_of(2, MuVector({0, 1, 1, 1}), b2).gamma == Vec4{0, 5, 5, 5});
  // negative entries are rejected
  const EpsilonChoice minus{EpsFamily::A, 0, {1, -1, 1, 1}, EpsConvention::french};
  CHECK_THROWS_AS(gamma_of(2, MuVector({0, 0, 0, 0}), minus), DomainError);
}

TEST_CASE("both offset normalizations resolve to the same vectors") {
  for (std::int64_t d = 1; d <= 6; ++d)
    for (int k = 0; k < 4; ++k)
      for (EpsFamily family : {EpsFamily::A, EpsFamily::B}) {
        const EpsilonChoice fr{family, k, {1, -1, 1, -1}, EpsConvention::french};
        const EpsilonChoice en{family, k, {1, -1, 1, -1}, EpsConvention::english};
        CHECK(epsilon_vector(d, fr) == epsilon_vector(d, en));
      }
}

TEST_CASE("degree and genus from the type") {
  const DegreeGenus a = degree_genus_of(2, TypeVector({0, 5, 5, 5}));
  CHECK(a.n == 13);
  CHECK(a.g == 7);

  const DegreeGenus b = degree_genus_of(1, TypeVector({2, 1, 1, 1}));
  CHECK(b.n == 3);
  CHECK(b.g == 2);

  CHECK_THROWS_AS(degree_genus_of(2, TypeVector({1, 5, 5, 5})), DomainError);  // 73 not div. by 3
  CHECK_FALSE(try_degree_genus(1, TypeVector({1, 0, 0, 0})).has_value());      // degree 0
}

TEST_CASE("closed-form degree") {
  CHECK(closed_form_degree(2, MuVector({0, 1, 1, 1}), EpsilonChoice{}) == 13);
  CHECK(closed_form_degree(3, MuVector({0, 1, 1, 1}), EpsilonChoice{}) == 25);
  CHECK(closed_form_degree(1, MuVector({2, 1, 1, 1}), EpsilonChoice{}) == 3);

  const EpsilonChoice b{EpsFamily::B, 0, {1, 1, 1, 1}, EpsConvention::french};
  CHECK_THROWS_AS(closed_form_degree(3, MuVector({0, 1, 1, 1}), b), UnsupportedFormError);
}

TEST_CASE("worked family: d=2, mu=(0,1,1,1)") {
  const FamilySpec fam = build_family(2, MuVector({0, 1, 1, 1}), EpsilonChoice{});
  CHECK(fam.n == 13);
  CHECK(fam.g == 7);
  CHECK(fam.gamma.gamma == Vec4{0, 5, 5, 5});
  CHECK(fam.family_dimension == 1);
  CHECK(fam.witness_matches_type);
  CHECK(fam.verification.all());

  REQUIRE(fam.witness.has_value());
  const Witness& w = *fam.witness;
  CHECK(w.m == 1);
  CHECK(w.m_k == std::array<std::int64_t, 3>{4, 4, 4});
  CHECK(w.m_plus == 6);
  CHECK(w.m_minus == 6);
  CHECK(w.z_minus_composite);  // mu0 = 0, so Z- = Z+ + 2 r0

  // the double section class: coefficient bookkeeping done by hand
  CHECK(w.d0.c == 12);
  CHECK(w.d0.fibers == Vec4{2, 0, 0, 0});
  CHECK(w.d0.s == Vec4{0, 0, 0, 0});
  CHECK(w.d0.r == Vec4{0, -4, -4, -4});
  CHECK(lin_equiv(w.d0, w.d1));

  CHECK(w.f.size() == 1);  // j = 0..d-2
  CHECK(lin_equiv(w.f[0], w.lambda));
  CHECK(lin_equiv(w.g_divisor, w.lambda));

  // the adopted readings
  CHECK(w.readings.zprime_adopted == ZPrimeFiber::omega1);
  CHECK(w.readings.zprime_omega1_ok);
  CHECK_FALSE(w.readings.zprime_origin_ok);
  CHECK(w.readings.f_adopted == SMultiplicity::double_s);
  CHECK(w.readings.f_double_ok);
  CHECK_FALSE(w.readings.f_single_ok);

  // rejected readings leave documented obstructions
  CHECK(w.readings.zprime_rejected_diff.obstructions == std::vector<std::string>{"torsion"});
  CHECK(w.readings.f_rejected_diff.difference.s == Vec4{0, -1, -1, -1});
  CHECK(w.readings.f_rejected_diff.obstructions ==
        std::vector<std::string>{"s1", "s2", "s3"});
}

TEST_CASE("degenerate family: d=1, mu=(2,1,1,1)") {
  const FamilySpec fam = build_family(1, MuVector({2, 1, 1, 1}), EpsilonChoice{});
  CHECK(fam.n == 3);
  CHECK(fam.g == 2);
  CHECK(fam.family_dimension == 0);
  REQUIRE(fam.witness.has_value());
  CHECK(fam.witness->f.empty());  // j ranges over the empty set
  CHECK(fam.witness->g_divisor == fam.witness->z);  // G = Z + 0
  CHECK(lin_equiv(fam.witness->d0, fam.witness->d1));
}

TEST_CASE("family with mu0 positive: d=2, mu=(1,0,0,0)") {
  const FamilySpec fam = build_family(2, MuVector({1, 0, 0, 0}), EpsilonChoice{});
  CHECK(fam.gamma.gamma == Vec4{3, 2, 2, 2});
  CHECK(fam.n == 4);
  CHECK(fam.g == 4);
  REQUIRE(fam.witness.has_value());
  CHECK_FALSE(fam.witness->z_minus_composite);
  CHECK(fam.verification.all());
}

TEST_CASE("membership reports name the obstructing coefficients") {
  const FamilySpec fam = build_family(2, MuVector({0, 1, 1, 1}), EpsilonChoice{});
  const Witness& w = *fam.witness;

  const MembershipReport ok = membership_report(w.g_divisor, w.lambda);
  CHECK(ok.member);
  CHECK(ok.obstructions.empty());
  CHECK(ok.difference.c == 0);

  const MembershipReport same = membership_report(w.lambda, w.lambda);
  CHECK(same.member);

  PicClass off = w.lambda + PicClass::r_exceptional(2);
  const MembershipReport bad = membership_report(off, w.lambda);
  CHECK_FALSE(bad.member);
  CHECK(bad.obstructions == std::vector<std::string>{"r2"});

  // a fiber over the origin shifts the degree but not the torsion label
  PicClass extra_fiber = w.lambda + PicClass::fiber(HalfPeriod(0));
  const MembershipReport deg = membership_report(extra_fiber, w.lambda);
  CHECK_FALSE(deg.member);
  CHECK(deg.obstructions == std::vector<std::string>{"fiber-degree"});

  PicClass moved_fiber = w.lambda - PicClass::fiber(HalfPeriod(0)) + PicClass::fiber(HalfPeriod(3));
  const MembershipReport tor = membership_report(moved_fiber, w.lambda);
  CHECK_FALSE(tor.member);
  CHECK(tor.obstructions == std::vector<std::string>{"torsion"});
}

TEST_CASE("offset choices validate their inputs") {
  CHECK_THROWS_AS(epsilon_vector(2, EpsilonChoice{EpsFamily::A, 4, {1, 1, 1, 1},
                                                  EpsConvention::french}),
                  DomainError);
  CHECK_THROWS_AS(epsilon_vector(2, EpsilonChoice{EpsFamily::A, 0, {1, 2, 1, 1},
                                                  EpsConvention::french}),
                  DomainError);
  CHECK_THROWS_AS(epsilon_vector(0, EpsilonChoice{}), DomainError);
}

TEST_CASE("a distinguished index away from the marking still verifies") {
  // pattern A at k=1: gamma = (2,3,5,5), a different parity pattern than
  // any relabeling of the k=0 decomposition can reach
  const EpsilonChoice at1{EpsFamily::A, 1, {1, 1, 1, 1}, EpsConvention::french};
  const FamilySpec fam = build_family(2, MuVector({0, 1, 1, 1}), at1);
  CHECK(fam.gamma.gamma == Vec4{2, 3, 5, 5});
  CHECK(fam.n == 11);
  CHECK(fam.g == 7);
  CHECK_FALSE(fam.witness_matches_type);
  CHECK(fam.verification.all());
  CHECK(adjunction_genus(fam.lambda) == 7);
}

TEST_CASE("requested offsets away from the decomposition are still verified") {
  // negative sign: gamma = (0,1,5,5), realizable but not the witness type
  const EpsilonChoice minus{EpsFamily::A, 0, {1, -1, 1, 1}, EpsConvention::french};
  const FamilySpec fam = build_family(2, MuVector({0, 1, 1, 1}), minus);
  CHECK(fam.gamma.gamma == Vec4{0, 1, 5, 5});
  CHECK(fam.n == 9);
  CHECK(fam.g == 5);
  CHECK_FALSE(fam.witness_matches_type);
  CHECK(fam.verification.adjunction_matches_genus);
  CHECK(fam.verification.cover_check_pass);

  // pattern B at d = 3 is not a relabeling of pattern A
  const EpsilonChoice b{EpsFamily::B, 0, {1, 1, 1, 1}, EpsConvention::french};
  const FamilySpec fb = build_family(3, MuVector({0, 1, 1, 1}), b);
  CHECK(fb.gamma.gamma == Vec4{4, 7, 7, 7});
  CHECK(fb.n == 17);
  CHECK(fb.g == 12);
  CHECK_FALSE(fb.witness_matches_type);
  CHECK(fb.verification.all());
}

TEST_CASE("witness degenerates only at the degree-zero corner") {
  // d=1, mu=(1,0,0,0): the witness type (1,0,0,0) has no positive degree
  const EpsilonChoice b{EpsFamily::B, 0, {1, 1, 1, 1}, EpsConvention::french};
  const FamilySpec fam = build_family(1, MuVector({1, 0, 0, 0}), b);
  CHECK(fam.gamma.gamma == Vec4{3, 0, 0, 0});
  CHECK(fam.n == 4);
  CHECK(fam.g == 1);
  CHECK_FALSE(fam.witness.has_value());
  CHECK(fam.verification.all());

  // the same request through pattern A is simply not realizable
  CHECK_THROWS_AS(build_family(1, MuVector({1, 0, 0, 0}), EpsilonChoice{}), DomainError);
}

TEST_CASE("the whole decomposition transports along index relabelings") {
  const FamilySpec fam = build_family(3, MuVector({2, 1, 1, 1}), EpsilonChoice{});
  const Witness& w = *fam.witness;

  std::array<int, 4> perm{0, 1, 2, 3};
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 24; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(lin_equiv(relabel(w.d0, perm), relabel(w.d1, perm)));
    CHECK(lin_equiv(relabel(w.g_divisor, perm), relabel(w.lambda, perm)));
    for (const auto& fj : w.f) CHECK(lin_equiv(relabel(fj, perm), relabel(w.lambda, perm)));
    CHECK(adjunction_genus(relabel(w.lambda, perm)) == fam.g);
  }
}

TEST_CASE("constituents carry the invariance tag") {
  const FamilySpec fam = build_family(2, MuVector({0, 1, 1, 1}), EpsilonChoice{});
  const auto parts = fam.witness->constituents();
  CHECK(parts.size() == 11);  // Z, Z_(1..3), Z+, Z-, Z', D0, D1, F0, G
  for (const auto& part : parts) CHECK(part.tau_invariant);
}

TEST_CASE("coefficient identities close on a small sweep") {
  for (std::int64_t d = 1; d <= 4; ++d)
    for (std::int64_t a = 0; a <= 3; ++a)
      for (std::int64_t t = 1; t <= 3; t += 2) {
        Vec4 mu_vec{a, t, t, t};
        if ((a + 1 - t) % 2 != 0) continue;
        const MuVector mu(mu_vec);
        if (!try_degree_genus(d, gamma_of(d, mu, EpsilonChoice{}))) continue;
        const FamilySpec fam = build_family(d, mu, EpsilonChoice{});
        const Witness& w = *fam.witness;
        std::int64_t mks = w.m_k[0] + w.m_k[1] + w.m_k[2];
        CHECK(1 + mks + (d - 2) * (w.m_plus + w.m_minus) == w.n);
        CHECK(w.m + (d - 1) * (w.m_plus + w.m_minus) == w.n);
        for (std::size_t i = 0; i < 4; ++i)
          CHECK((2 * d - 1) * mu.mu[i] + (2 * d - 2) * (i == 0 ? 0 : 1) == w.gamma.gamma[i]);
        // closed form and quadratic route agree, genus via the oracle too
        CHECK(closed_form_degree(d, mu, EpsilonChoice{}) == w.n);
        CHECK(gram_oracle::genus(w.lambda) == w.g);
      }
}
