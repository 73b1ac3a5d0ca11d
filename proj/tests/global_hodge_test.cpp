#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace testing_support;

namespace {

std::vector<LocalSpectrum> six_cusps() {
  return std::vector<LocalSpectrum>(6, local_spectral_pairs(BrieskornPham{{2, 3}}));
}

GlobalPositionData conic_position() {
  GlobalPositionData g;
  g.pn1_cover[1][2] = 1;
  g.pn1_cover[5][1] = 1;
  return g;
}

}  // namespace

TEST(HodgeXInfinity, CuspidalSextic) {
  const HodgeNumbers h = hodge_X_infinity(six_cusps(), {}, 2, 6);
  EXPECT_EQ(h, (HodgeNumbers{{{0, 1}, 4}, {{1, 0}, 4}}));
}

TEST(HodgeXInfinity, SmoothIsJacobianRing) {
  for (int n = 2; n <= 4; ++n)
    for (int d = 2; d <= 6; ++d) {
      const HodgeNumbers h = hodge_X_infinity({}, {}, n, d);
      for (const auto& [ij, m] : h) EXPECT_EQ(ij.first + ij.second, n - 1);
      for (int i = 0; i < n; ++i) EXPECT_EQ(hodge_at(h, i, n - 1 - i), j_constant(n, d, i, 0));
    }
}

TEST(HodgeXInfinity, InflatedGlobalTermIsRejected) {
  GlobalPositionData g;
  g.pn_xinf[1] = 5;
  EXPECT_THROW(hodge_X_infinity(six_cusps(), g, 2, 6), InconsistentGlobalData);
  EXPECT_THROW(hodge_X_infinity({}, {}, 1, 3), ValidationError);
}

TEST(HodgeCover, ZariskiSectors) {
  const auto on_conic = hodge_cover(six_cusps(), conic_position(), 2, 6);
  EXPECT_EQ(hodge_at(on_conic.at(1), 1, 1), 4);
  EXPECT_EQ(hodge_at(on_conic.at(1), 2, 0), 1);
  EXPECT_EQ(hodge_at(on_conic.at(1), 1, 0), 5);

  const auto general = hodge_cover(six_cusps(), {}, 2, 6);
  EXPECT_EQ(hodge_at(general.at(1), 1, 1), 3);
  EXPECT_EQ(hodge_at(general.at(1), 2, 0), 0);
  EXPECT_EQ(hodge_at(general.at(1), 1, 0), 6);

  for (const auto* c : {&on_conic, &general}) {
    EXPECT_EQ(hodge_at(c->at(2), 1, 1), 6);
    EXPECT_EQ(hodge_at(c->at(2), 2, 0), 3);
    EXPECT_EQ(hodge_at(c->at(2), 0, 2), 0);
  }
}

TEST(HodgeCover, InflatedGlobalTermIsRejected) {
  GlobalPositionData g;
  g.pn1_cover[1][2] = 7;
  g.pn1_cover[5][1] = 7;
  EXPECT_THROW(hodge_cover(six_cusps(), g, 2, 6), InconsistentGlobalData);
}

TEST(GlobalPositionData, Validation) {
  GlobalPositionData g;
  g.pn1_cover[1][2] = 1;
  EXPECT_THROW(g.validate(2, 6), ValidationError);  // sector 5 missing its conjugate
  g.pn1_cover[5][1] = 1;
  EXPECT_NO_THROW(g.validate(2, 6));
  g.pn1_cover[6][1] = 1;
  EXPECT_THROW(g.validate(2, 6), ValidationError);

  GlobalPositionData x;
  x.pn_xinf[0] = 1;
  EXPECT_THROW(x.validate(2, 6), ValidationError);
  x.pn_xinf[2] = 1;
  EXPECT_NO_THROW(x.validate(2, 6));
  x.pn_xinf[3] = 1;
  EXPECT_THROW(x.validate(2, 6), ValidationError);
}

TEST(LiftDoubleCover, ZeroAndSmooth) {
  for (const auto& [s, h] : lift_double_cover({}, {}, 5)) EXPECT_TRUE(h.empty()) << s;

  // k = n with smooth data: both pure inputs vanish
  for (const auto& [s, h] : lift_double_cover(pure_xinf({}, 2), pure_cover({}, 2), 4)) EXPECT_TRUE(h.empty());

  // k = n-1 for smooth data lands on the Jacobian ring one dimension up
  for (int n = 2; n <= 3; ++n)
    for (int d = 2; d <= 6; ++d) {
      const auto lifted = lift_double_cover(hodge_X_infinity({}, {}, n, d), hodge_cover({}, {}, n, d), d);
      for (int s = 1; s < d; ++s)
        for (int i = 0; i <= n + 1; ++i)
          EXPECT_EQ(hodge_at(lifted.at(s), i, n + 1 - i), j_constant(n + 1, d, n + 1 - i, s))
              << n << ' ' << d << ' ' << s << ' ' << i;
    }
}

TEST(LiftDoubleCover, ZariskiSectorThree) {
  const auto xinf = hodge_X_infinity(six_cusps(), {}, 2, 6);
  const auto cover = hodge_cover(six_cusps(), {}, 2, 6);
  const auto lifted = lift_double_cover(xinf, cover, 6);
  HodgeNumbers expect;
  for (const auto& [pq, m] : xinf) expect[{pq.first + 1, pq.second + 1}] += m;
  for (int t : {1, 2, 4, 5}) {
    const int c = (3 + t) / 6;
    for (const auto& [ab, m] : cover.at((3 + t) % 6)) expect[{ab.first - c + 1, ab.second + c}] += m;
  }
  EXPECT_EQ(lifted.at(3), expect);
}

// Properties ---------------------------------------------------------------

TEST(GlobalHodgeProperties, SmoothMass) {
  for (int n = 2; n <= 4; ++n)
    for (int d = 2; d <= 7; ++d) {
      std::int64_t mass = hodge_total(hodge_X_infinity({}, {}, n, d)), expect = 1;
      for (const auto& [s, h] : hodge_cover({}, {}, n, d)) mass += hodge_total(h);
      for (int i = 0; i <= n; ++i) expect *= d - 1;
      EXPECT_EQ(mass, expect) << n << ' ' << d;
    }
}

TEST(GlobalHodgeProperties, OutputConjugation) {
  struct Case {
    std::vector<LocalSpectrum> locals;
    GlobalPositionData g;
    int n, d;
  };
  std::vector<Case> cases{{six_cusps(), conic_position(), 2, 6}, {six_cusps(), {}, 2, 6}};
  for (int d = 2; d <= 6; ++d) cases.push_back({{}, {}, 3, d});
  for (const auto& c : cases) {
    const HodgeNumbers x = hodge_X_infinity(c.locals, c.g, c.n, c.d);
    for (const auto& [ij, m] : x) EXPECT_EQ(hodge_at(x, ij.second, ij.first), m);
    const auto cov = hodge_cover(c.locals, c.g, c.n, c.d);
    for (const auto& [s, h] : cov)
      for (const auto& [ij, m] : h) EXPECT_EQ(hodge_at(cov.at(c.d - s), ij.second, ij.first), m);
  }
}

TEST(GlobalHodgeProperties, LiftMatchesCoverOfSuspension) {
  // the k = n-1 lift is the cover of the suspended top form
  for (const GlobalPositionData& g : {conic_position(), GlobalPositionData{}}) {
    StarPolynomialSpec spec{2, 6, std::vector<LocalModel>(6, BrieskornPham{{2, 3}}), g};
    const StarPolynomialSpec up = suspended_spec(spec);
    const auto locals = spec.local_spectra();
    const auto lifted =
        lift_double_cover(hodge_X_infinity(locals, g, 2, 6), hodge_cover(locals, g, 2, 6), 6);
    EXPECT_EQ(lifted, hodge_cover(up.local_spectra(), up.global, 3, 6));
  }
}
