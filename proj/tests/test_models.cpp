#include <gtest/gtest.h>

#include <algorithm>

#include "cdgl/errors.hpp"
#include "cdgl/lie_basis.hpp"
#include "cdgl/models.hpp"
#include "cdgl/series.hpp"

using namespace cdgl;

namespace {

LieElement desuspended_boundary(const DgLie& L, const Simplex& s) {
  LieElement out = L.zero();
  for (const auto& [sign, face] : boundary(s)) out += Rational(sign) * L.gen(simplex_name(face));
  return out;
}

bool all_lie(const DgLie& L) {
  for (const auto& img : L.differential().images()) {
    if (!is_lie(img)) return false;
  }
  return true;
}

// Element of ℒ_{Δ^p} is generated by the horn when it avoids a_{0..p-1} and a_{0..p}.
bool avoids(const LieElement& x, const std::vector<std::string>& names) {
  std::vector<int> letters;
  for (const auto& n : names) letters.push_back(x.alphabet()->index_of(n));
  for (const auto& [w, c] : x.terms()) {
    for (int i = 0; i < w.size(); ++i) {
      if (std::find(letters.begin(), letters.end(), w[i]) != letters.end()) return false;
    }
  }
  return true;
}

}  // namespace

TEST(LsInterval, IsValidAtEight) {
  DgLie L = ls_interval(8);
  ValidationReport r = validate(L);
  EXPECT_TRUE(r.ok) << (r.violations.empty() ? "" : r.violations.front());
  EXPECT_TRUE(L.d(L.d_of("x")).is_zero());
  EXPECT_TRUE(is_mc(L, L.gen("a")));
  EXPECT_TRUE(is_mc(L, L.gen("b")));
}

TEST(LsInterval, LowSlices) {
  DgLie L = ls_interval(8);
  LieElement a = L.gen("a"), b = L.gen("b"), x = L.gen("x");
  EXPECT_EQ(L.d_of("x").length_slice(1), b - a);
  EXPECT_EQ(L.d_of("x").length_slice(2), bracket(x, b) - Rational(1, 2) * bracket(x, b - a));
}

TEST(LsInterval, BothWritingsAgree) {
  DgLie L = ls_interval(8);
  LieElement a = L.gen("a"), b = L.gen("b"), x = L.gen("x");
  LieElement other = bracket(x, a) + ad_series(at_negative(z_over_exp_minus_one(8)), x, b - a);
  EXPECT_EQ(L.d_of("x"), other);
}

TEST(SimplexModel, PointIsMc) {
  DgLie L = model_of_simplex(0, 6);
  EXPECT_EQ(L.alphabet()->size(), 1);
  EXPECT_TRUE(is_mc(L, L.gen("a0")));
}

TEST(SimplexModel, EdgeIsLsInterval) {
  DgLie L = model_of_simplex(1, 8);
  DgLie I = ls_interval(8);
  LieMorphism rename = LieMorphism::from_named(
      I.alphabet(), L.alphabet(), 8, {{"a", L.gen("a0")}, {"b", L.gen("a1")}, {"x", L.gen("a01")}});
  EXPECT_TRUE(is_chain_map(rename, I, L));
  EXPECT_EQ(rename.apply(I.d_of("x")), L.d_of("a01"));
}

TEST(SimplexModel, TriangleBchLaw) {
  DgLie L = model_of_simplex(2, 8);
  EXPECT_TRUE(validate(L).ok);
  LieElement lhs = L.d_of("a012") + bracket(L.gen("a0"), L.gen("a012"));
  EXPECT_EQ(lhs, bch(L.gen("a01"), bch(L.gen("a12"), -L.gen("a02"))));
}

TEST(SimplexModel, TetrahedronCharacterization) {
  DgLie L = model_of_simplex(3, 5);
  ValidationReport r = validate(L);
  ASSERT_TRUE(r.ok) << (r.violations.empty() ? "" : r.violations.front());
  EXPECT_TRUE(all_lie(L));
  for (const auto& [name, s] : L.simplex_labels()) {
    EXPECT_EQ(L.d_of(name).length_slice(1), desuspended_boundary(L, s)) << name;
    if (s.size() == 1) EXPECT_TRUE(is_mc(L, L.gen(name))) << name;
  }
  LieElement top = L.d_of("a0123") + bracket(L.gen("a0"), L.gen("a0123"));
  EXPECT_TRUE(avoids(top, {"a0123"}));
  EXPECT_TRUE(avoids(top + L.gen("a012"), {"a0123", "a012"}));
}

TEST(SimplexModel, NaturalUnderFaceInclusions) {
  ModelBuilder builder(5);
  DgLie big = builder.model(standard_simplex(3));
  DgLie small = builder.model(standard_simplex(2));
  // the face (1,2,3) of Δ³
  std::map<std::string, LieElement> images;
  Simplex face{1, 2, 3};
  for (const auto& [name, s] : small.simplex_labels()) {
    Simplex t;
    for (int v : s) t.push_back(face[v]);
    images.emplace(name, big.gen(simplex_name(t)));
  }
  LieMorphism inclusion = LieMorphism::from_named(small.alphabet(), big.alphabet(), 5, images);
  EXPECT_TRUE(is_chain_map(inclusion, small, big));
}

TEST(ComplexModel, BoundaryOfTriangle) {
  DgLie L = model_of_complex(simplex_boundary(2), 6);
  EXPECT_EQ(L.alphabet()->size(), 6);
  EXPECT_TRUE(validate(L).ok);
  DgLie I = ls_interval(6);
  LieMorphism edge = LieMorphism::from_named(
      I.alphabet(), L.alphabet(), 6, {{"a", L.gen("a1")}, {"b", L.gen("a2")}, {"x", L.gen("a12")}});
  EXPECT_TRUE(is_chain_map(edge, I, L));
}

TEST(ComplexModel, WideVertexNames) {
  SimplicialComplex X(12, {{3, 11}});
  DgLie L = model_of_complex(X, 4);
  EXPECT_TRUE(L.alphabet()->find("a3_11") >= 0);
  EXPECT_TRUE(validate(L).ok);
}

TEST(MapModel, FaceAndDegeneracy) {
  const int n = 5;
  SimplicialComplex d1 = standard_simplex(1), d2 = standard_simplex(2);
  DgLie L1 = model_of_complex(d1, n), L2 = model_of_complex(d2, n);
  LieMorphism face = model_of_map({{0, 2}}, d1, L1, d2, L2);
  EXPECT_EQ(face.image("a01"), L2.gen("a02"));
  LieMorphism collapse = model_of_map({{0, 0, 1}}, d2, L2, d1, L1);
  EXPECT_TRUE(collapse.image("a01").is_zero());
  EXPECT_TRUE(collapse.image("a012").is_zero());
  EXPECT_EQ(collapse.image("a12"), L1.gen("a01"));
  EXPECT_THROW(model_of_map({{1, 0}}, d1, L1, d1, L1), AlgebraError);
}

TEST(Surface, KleinBottle) {
  DgLie K = surface_model({{"u", "v"}, {{0, 1}, {1, 1}, {0, 1}, {1, -1}}, "y"}, 6);
  EXPECT_TRUE(validate(K).ok);
  LieElement u = K.gen("u"), v = K.gen("v");
  LieElement dy = K.d_of("y");
  EXPECT_EQ(dy.length_slice(1), Rational(2) * u);
  EXPECT_EQ(dy.length_slice(2), bracket(v, u));
}

TEST(Surface, TorusAndEmptyWord) {
  DgLie T = surface_model({{"x", "z"}, {{0, 1}, {1, 1}, {0, -1}, {1, -1}}, "y"}, 6);
  EXPECT_TRUE(T.d_of("y").length_slice(1).is_zero());
  EXPECT_EQ(T.d_of("y").length_slice(2), bracket(T.gen("x"), T.gen("z")));
  DgLie S = surface_model({{"x"}, {}, "y"}, 6);
  EXPECT_TRUE(S.d_of("y").is_zero());
  EXPECT_THROW(surface_model({{"x"}, {{1, 1}}, "y"}, 6), InputError);
}

TEST(Paths, ComposeWithConstantIsIdentity) {
  DgLie I = ls_interval(6);
  LieMorphism id = LieMorphism::identity(I.alphabet(), 6);
  LieMorphism constant = LieMorphism::from_named(I.alphabet(), I.alphabet(), 6, {{"a", I.gen("b")}, {"b", I.gen("b")}});
  ASSERT_TRUE(is_chain_map(constant, I, I));
  EXPECT_EQ(compose_paths(id, constant), id);
  EXPECT_THROW(compose_paths(constant, id), AlgebraError);
}

TEST(Paths, GluedIntervalsComposeToChainMap) {
  DgLie L = model_of_complex(SimplicialComplex(3, {{0, 1}, {1, 2}}), 6);
  DgLie I = ls_interval(6);
  LieMorphism p1 = LieMorphism::from_named(I.alphabet(), L.alphabet(), 6,
                                           {{"a", L.gen("a0")}, {"b", L.gen("a1")}, {"x", L.gen("a01")}});
  LieMorphism p2 = LieMorphism::from_named(I.alphabet(), L.alphabet(), 6,
                                           {{"a", L.gen("a1")}, {"b", L.gen("a2")}, {"x", L.gen("a12")}});
  LieMorphism p = compose_paths(p1, p2);
  EXPECT_TRUE(is_chain_map(p, I, L));
  EXPECT_EQ(p.image("a"), L.gen("a0"));
  EXPECT_EQ(p.image("b"), L.gen("a2"));
}
