#include <doctest.h>

#include <limits>
#include <random>

#include "gram_oracle.hpp"
#include "oscover/picclass.hpp"

using namespace oscover;

namespace {

PicClass random_class(std::mt19937_64& rng, std::int64_t span = 9) {
  std::uniform_int_distribution<std::int64_t> dist(-span, span);
  PicClass p;
  p.c = dist(rng);
  for (std::size_t i = 0; i < 4; ++i) {
    p.fibers[i] = dist(rng);
    p.s[i] = dist(rng);
    p.r[i] = dist(rng);
  }
  return p;
}

// the marked system class of degree n, sheet count 2d-1, type gamma
PicClass system_class(std::int64_t d, std::int64_t n, const Vec4& gamma) {
  PicClass out;
  out.c = n;
  out.fibers[0] = 2 * d - 1;
  out.s[0] = -1;
  for (std::size_t i = 0; i < 4; ++i) out.r[i] = -gamma[i];
  return out;
}

}  // namespace

TEST_CASE("intersection numbers on basis elements") {
  const PicClass sec = PicClass::section();
  const PicClass f2 = PicClass::fiber(HalfPeriod(2));
  const PicClass s0 = PicClass::s_exceptional(0);

  CHECK(intersect(sec, f2) == 1);
  CHECK(gram_oracle::pair(sec, f2) == 1);
  CHECK(intersect(sec, sec) == 0);
  CHECK(intersect(f2, f2) == 0);
  CHECK(intersect(f2, PicClass::fiber(HalfPeriod(3))) == 0);
  CHECK(intersect(s0, s0) == -1);
  CHECK(gram_oracle::pair(s0, s0) == -1);
  CHECK(intersect(s0, PicClass::s_exceptional(1)) == 0);
  CHECK(intersect(s0, PicClass::r_exceptional(0)) == 0);
}

TEST_CASE("self-intersection of a marked cover class") {
  // degree 13, three sheets over w0, type (0,5,5,5)
  const PicClass d13 = system_class(2, 13, {0, 5, 5, 5});
  CHECK(gram_oracle::pair(d13, d13) == 2);
  CHECK(intersect(d13, d13) == 2);
}

TEST_CASE("canonical class") {
  const PicClass k = canonical_class();
  CHECK(k.c == -2);
  CHECK(k.fibers == Vec4{0, 0, 0, 0});
  CHECK(k.s == Vec4{1, 1, 1, 1});
  CHECK(k.r == Vec4{1, 1, 1, 1});

  CHECK(gram_oracle::pair(k, k) == -8);
  CHECK(intersect(k, k) == -8);
  CHECK(intersect(k, PicClass::fiber(HalfPeriod(0))) == -2);
  CHECK(intersect(k, PicClass::s_exceptional(0)) == -1);
}

TEST_CASE("adjunction genus") {
  CHECK(gram_oracle::genus(PicClass::strict_section()) == 1);
  CHECK(adjunction_genus(PicClass::strict_section()) == 1);

  const PicClass cover = system_class(2, 13, {0, 5, 5, 5});
  CHECK(gram_oracle::genus(cover) == 7);
  CHECK(adjunction_genus(cover) == 7);

  CHECK(adjunction_genus(PicClass::s_exceptional(0)) == 0);
  CHECK(adjunction_genus(PicClass::fiber(HalfPeriod(1))) == 0);
}

TEST_CASE("genus identity on the lattice for realizable types") {
  // whenever gamma^(2) = (2d-1)(2n-2)+3 has an integer solution, the
  // adjunction genus of the system class is (gamma^(1)-1)/2
  std::int64_t cells = 0;
  for (std::int64_t d = 1; d <= 4; ++d) {
    Vec4 g{};
    for (g[0] = 0; g[0] <= 6; ++g[0])
      for (g[1] = 0; g[1] <= 6; ++g[1])
        for (g[2] = 0; g[2] <= 6; ++g[2])
          for (g[3] = 0; g[3] <= 6; ++g[3]) {
            const std::int64_t sq = g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3];
            const std::int64_t lin = g[0] + g[1] + g[2] + g[3];
            if (sq < 3 || (sq - 3) % (2 * d - 1) != 0) continue;
            const std::int64_t q = (sq - 3) / (2 * d - 1);
            if (q % 2 != 0) continue;
            const std::int64_t n = q / 2 + 1;
            ++cells;
            CHECK(adjunction_genus(system_class(d, n, g)) == (lin - 1) / 2);
          }
  }
  CHECK(cells > 100);
}

TEST_CASE("linear equivalence on fiber rearrangements") {
  PicClass a = system_class(1, 5, {1, 1, 1, 1});
  PicClass b = a;
  a.fibers = {2, 0, 0, 0};
  b.fibers = {0, 2, 0, 0};
  CHECK(lin_equiv(a, b));  // 2w0 ~ 2w1

  b.fibers = {0, 1, 0, 0};
  a.fibers = {1, 0, 0, 0};
  CHECK_FALSE(lin_equiv(a, b));  // w0 and w1 differ in the torsion group

  CHECK(lin_equiv(a, a));
}

TEST_CASE("intersect matches the Gram oracle on random classes") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 2000; ++trial) {
    const PicClass a = random_class(rng);
    const PicClass b = random_class(rng);
    CHECK(intersect(a, b) == gram_oracle::pair(a, b));
  }
}

TEST_CASE("bilinearity, symmetry, adjunction parity") {
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<std::int64_t> scalar(-4, 4);
  const PicClass k = canonical_class();
  for (int trial = 0; trial < 2000; ++trial) {
    const PicClass a = random_class(rng);
    const PicClass b = random_class(rng);
    const PicClass x = random_class(rng);
    const std::int64_t t = scalar(rng);

    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(intersect(a + b, x) == intersect(a, x) + intersect(b, x));
    CHECK(intersect(t * a, x) == t * intersect(a, x));
    CHECK(intersect(a, a + k) % 2 == 0);
  }
}

TEST_CASE("linear equivalence is a congruence for the pairing") {
  std::mt19937_64 rng(303);
  std::uniform_int_distribution<std::int64_t> small(-2, 2);
  const Vec4 kernel[3] = {{1, 1, -1, -1}, {1, -1, 1, -1}, {2, -2, 0, 0}};
  for (int trial = 0; trial < 1000; ++trial) {
    const PicClass a = random_class(rng);
    const PicClass x = random_class(rng);
    PicClass a2 = a;
    for (const auto& kv : kernel) {
      const std::int64_t u = small(rng);
      for (std::size_t i = 0; i < 4; ++i) a2.fibers[i] += u * kv[i];
    }
    CHECK(lin_equiv(a, a2));
    CHECK(lin_equiv(a2, a));
    CHECK(intersect(a2, x) == intersect(a, x));
    CHECK(adjunction_genus(a2) == adjunction_genus(a));
  }
}

TEST_CASE("relabeling the half-period indices changes nothing observable") {
  std::mt19937_64 rng(404);
  std::array<int, 4> perm{0, 1, 2, 3};
  for (int trial = 0; trial < 200; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const PicClass a = random_class(rng);
    const PicClass b = random_class(rng);
    CHECK(intersect(relabel(a, perm), relabel(b, perm)) == intersect(a, b));
    CHECK(adjunction_genus(relabel(a, perm)) == adjunction_genus(a));
    CHECK(lin_equiv(relabel(a, perm), relabel(b, perm)) == lin_equiv(a, b));
  }
  CHECK_THROWS_AS(relabel(PicClass::section(), {0, 0, 1, 2}), DomainError);
}

TEST_CASE("named curves") {
  const NamedCurve c0 = named_curve(CurveKind::c0_strict);
  // the section passes through all four s_i, so its strict transform
  // subtracts every s-exceptional class
  CHECK(c0.cls == PicClass::section() - PicClass::s_exceptional(0) - PicClass::s_exceptional(1) -
                      PicClass::s_exceptional(2) - PicClass::s_exceptional(3));
  CHECK(intersect(c0.cls, c0.cls) == -4);

  const NamedCurve s2 = named_curve(CurveKind::s_exceptional, 2);
  CHECK(intersect(s2.cls, s2.cls) == -1);
  CHECK(named_z_curve(PicClass::section()).kind == CurveKind::z_curve);
  CHECK_THROWS_AS(named_curve(CurveKind::z_curve), DomainError);
}

TEST_CASE("coefficient overflow is reported, not wrapped") {
  PicClass big;
  big.c = std::numeric_limits<std::int64_t>::max() - 1;
  big.fibers = {3, 0, 0, 0};
  CHECK_THROWS_AS(intersect(big, big), OverflowError);
  CHECK_THROWS_AS(big + big, OverflowError);
  CHECK_THROWS_AS(3 * big, OverflowError);
}
