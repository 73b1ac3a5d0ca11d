#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace testing_support;

namespace {

StarPolynomialSpec zariski(bool on_conic) {
  StarPolynomialSpec s{2, 6, std::vector<LocalModel>(6, BrieskornPham{{2, 3}}), {}};
  if (on_conic) {
    s.global.pn1_cover[1][2] = 1;
    s.global.pn1_cover[5][1] = 1;
  }
  return s;
}

HodgeTable curve_example_primitive() { return curve_primitives(CurveSpec{{2, 2}}); }

std::int64_t power(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST(PrimitivesAtInfinity, ZariskiCaseOne) {
  const HodgeTable p = primitives_at_infinity(zariski(true));
  EXPECT_EQ(p.at(RootLabel::one(), 1, 2), 4);
  EXPECT_EQ(p.at(RootLabel::one(), 2, 1), 4);
  EXPECT_EQ(p.at(label(1, 6), 1, 1), 4);
  EXPECT_EQ(p.at(label(1, 6), 2, 0), 1);
  EXPECT_EQ(p.at(label(1, 6), 2, 1), 5);
  EXPECT_EQ(p.at(label(5, 6), 1, 1), 4);
  EXPECT_EQ(p.at(label(5, 6), 0, 2), 1);
  EXPECT_EQ(p.at(label(5, 6), 1, 2), 5);
}

TEST(PrimitivesAtInfinity, ThirtiethRoots) {
  for (bool conic : {true, false}) {
    const HodgeTable p = primitives_at_infinity(zariski(conic));
    for (int l : {1, 7, 11, 13, 17, 19, 23, 29}) EXPECT_EQ(p.at(label(l, 30), 1, 1), 6) << l;
    std::int64_t off_roots = 0;
    for (const auto& [key, m] : p)
      if (!key.lambda.has_order_dividing(6)) off_roots += m;
    EXPECT_EQ(off_roots, 48);
  }
}

TEST(PrimitivesAtInfinity, SmoothTopForm) {
  for (int n = 2; n <= 4; ++n)
    for (int d = 2; d <= 6; ++d) {
      const HodgeTable p = primitives_at_infinity(StarPolynomialSpec{n, d, {}, {}});
      for (const auto& [key, m] : p) {
        EXPECT_TRUE(key.lambda.has_order_dividing(d));
        if (key.lambda.is_one()) {
          EXPECT_EQ(key.p + key.q, n + 1);
          EXPECT_EQ(m, j_constant(n, d, n - key.q, 0));
        }
      }
    }
}

TEST(PrimitivesAtInfinity, SpecValidation) {
  StarPolynomialSpec bad{2, 6, {BrieskornPham{{2, 3, 4}}}, {}};
  EXPECT_THROW(primitives_at_infinity(bad), ValidationError);
  EXPECT_THROW(primitives_at_infinity(StarPolynomialSpec{1, 4, {}, {}}), ValidationError);
}

TEST(FullAtInfinity, Examples) {
  EXPECT_EQ(full_at_infinity(curve_example_primitive()).total(), 7);
  const HodgeTable full = full_at_infinity(primitives_at_infinity(zariski(false)));
  EXPECT_EQ(full.total(), spp_at_infinity(full, 2).total());
  EXPECT_TRUE(full_at_infinity(HodgeTable(TableKind::primitive, 2)).empty());
}

TEST(JordanStructure, CurveExample) {
  const JordanStructure j = jordan_structure(curve_example_primitive());
  EXPECT_EQ(j, (JordanStructure{{{RootLabel::one(), 1}, 1},
                                {{label(1, 2), 2}, 1},
                                {{neg_label(1, 6), 1}, 2},
                                {{neg_label(5, 6), 1}, 2}}));
  EXPECT_TRUE(jordan_structure(HodgeTable(TableKind::primitive, 2)).empty());
}

TEST(SppAtInfinity, CurveExample) {
  const SppSet s = spp_at_infinity(full_at_infinity(curve_example_primitive()), 1);
  EXPECT_EQ(s, (SppSet{{{r(0), 1}, 1},
                       {{r(-1, 2), 2}, 1},
                       {{r(1, 2), 0}, 1},
                       {{r(1, 6), 1}, 2},
                       {{r(-1, 6), 1}, 2}}));
  EXPECT_TRUE(check_spp_symmetry(s, 1).spectrum_symmetric);
  EXPECT_TRUE(spp_at_infinity(HodgeTable(TableKind::full, 2), 2).empty());
}

TEST(InfinityHodge, MaxJordanBlock) {
  const InfinityHodge h = infinity_hodge_from_primitive(curve_example_primitive(), 1);
  EXPECT_EQ(h.rank, 7);
  EXPECT_EQ(h.max_jordan_block(), 2);
  EXPECT_EQ(h.max_jordan_block(label(1, 2)), 2);
}

// Properties ---------------------------------------------------------------

TEST(MhsProperties, SmoothRankLaw) {
  for (int n = 2; n <= 4; ++n)
    for (int d = 2; d <= 6; ++d) {
      const InfinityHodge h = infinity_hodge(StarPolynomialSpec{n, d, {}, {}});
      EXPECT_EQ(h.rank, power(d - 1, n + 1)) << n << ' ' << d;
    }
}

TEST(MhsProperties, RandomConfigurations) {
  std::mt19937 rng(31);
  int checked = 0;
  for (int iter = 0; iter < 80; ++iter) {
    const int d = 4 + static_cast<int>(rng() % 5);
    StarPolynomialSpec spec{2, d, {}, {}};
    const int count = static_cast<int>(rng() % 4);
    for (int j = 0; j < count; ++j) spec.locals.push_back(BrieskornPham{random_exponents(rng, 2, 4)});
    InfinityHodge h;
    try {
      h = infinity_hodge(spec);
    } catch (const InconsistentGlobalData&) {
      continue;  // no top form of this degree has these singularities with zero position data
    }
    ++checked;
    std::int64_t mass = 0;
    for (const auto& [key, c] : h.jordan) mass += key.second * c;
    EXPECT_EQ(mass, h.rank);
    EXPECT_EQ(h.spp.total(), h.rank);
    EXPECT_TRUE(conjugation_symmetric(h.full));
    EXPECT_TRUE(jordan_bounds_hold(h.jordan, 2, d));
    EXPECT_TRUE(twisted_aggregate_check(spec, h.full).equal);
    EXPECT_TRUE(check_spp_symmetry(h.spp, 2).all());
  }
  EXPECT_GT(checked, 20);
}

TEST(MhsProperties, TwistedAggregateOnZariski) {
  for (bool conic : {true, false}) {
    const StarPolynomialSpec s = zariski(conic);
    const auto check = twisted_aggregate_check(s, infinity_hodge(s).full);
    EXPECT_TRUE(check.equal);
    EXPECT_EQ(check.lhs.total(), 48);
  }
}
