#include <gtest/gtest.h>

#include "cdgl/errors.hpp"
#include "cdgl/homology.hpp"
#include "cdgl/lie_basis.hpp"
#include "cdgl/models.hpp"
#include "cdgl/transfer.hpp"

using namespace cdgl;

namespace {

std::map<int, std::size_t> dims(const DgLie& L, int lo, int hi, bool direct) {
  HomologyOptions o;
  o.direct = direct;
  std::map<int, std::size_t> out;
  for (const auto& h : homology(L, lo, hi, o)) out[h.degree] = h.dim;
  return out;
}

std::map<int, std::size_t> persistent(const DgLie& L, int lo, int hi, bool direct = false) {
  HomologyOptions o;
  o.direct = direct;
  o.representatives = false;
  std::map<int, std::size_t> out;
  for (const auto& h : homology(L, lo, hi, o)) out[h.degree] = h.persistent;
  return out;
}

DgLie perturbed_model(const SimplicialComplex& X, int n) {
  DgLie L = model_of_complex(X, n);
  return perturb(L, L.gen("a0"), "a0");
}

}  // namespace

TEST(Homology, McPointIsAcyclic) {
  std::vector<GradedGenerator> gens{{"a", -1}};
  LieElement a = LieElement::generator(make_alphabet(gens), 6, "a");
  DgLie L = DgLie::from_named(gens, 6, {{"a", Rational(-1, 2) * bracket(a, a)}});
  for (bool direct : {false, true}) {
    for (const auto& [deg, dim] : dims(L, -6, 2, direct)) EXPECT_EQ(dim, 0u) << deg;
  }
}

TEST(Homology, OddGeneratorWithZeroDifferential) {
  DgLie L = DgLie::free({{"u", 1}}, 5);
  for (bool direct : {false, true}) {
    auto d = dims(L, 1, 3, direct);
    EXPECT_EQ(d[1], 1u);
    EXPECT_EQ(d[2], 1u);
    EXPECT_EQ(d[3], 0u);
  }
  auto h = homology(L, 2, 2);
  ASSERT_EQ(h.front().representatives.size(), 1u);
  EXPECT_EQ(h.front().representatives.front(), Rational(1, 2) * bracket(L.gen("u"), L.gen("u")));
}

TEST(Homology, PerturbedIntervalIsAcyclic) {
  DgLie P = perturbed_model(standard_simplex(1), 6);
  for (const auto& h : homology(P, -6, 3)) {
    EXPECT_TRUE(h.stable) << h.degree;
    EXPECT_EQ(h.dim, 0u) << h.degree;
  }
}

TEST(Homology, TransferAgreesWithDirectElimination) {
  std::vector<DgLie> cases;
  cases.push_back(ls_interval(4));
  cases.push_back(model_of_complex(simplex_boundary(2), 4));
  cases.push_back(perturbed_model(standard_simplex(2), 3));
  cases.push_back(perturbed_model(simplex_boundary(2), 4));
  cases.push_back(surface_model({{"u", "v"}, {{0, 1}, {1, 1}, {0, 1}, {1, -1}}, "y"}, 4));
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const int n = cases[i].truncation();
    EXPECT_EQ(dims(cases[i], -n, 3, false), dims(cases[i], -n, 3, true)) << "case " << i;
    EXPECT_EQ(persistent(cases[i], -n, 3, false), persistent(cases[i], -n, 3, true)) << "case " << i;
  }
}

TEST(Homology, TransferredDifferentialSquaresToZero) {
  DgLie P = perturbed_model(simplex_boundary(3), 4);
  HomologyTransfer t(P);
  LieBasis basis(t.homology_alphabet(), 4);
  for (int deg = -4; deg <= 4; ++deg) {
    for (const Word& w : basis.words_of_degree(deg)) {
      const LieElement& x = basis.element(w);
      EXPECT_TRUE(t.differential(t.differential(x)).is_zero());
      // i_∞ is a chain map
      EXPECT_EQ(P.d(t.include(x)), t.include(t.differential(x)));
    }
  }
}

TEST(Homology, RepresentativesAreCycles) {
  DgLie P = perturbed_model(simplex_boundary(3), 4);
  for (const auto& h : homology(P, -1, 3)) {
    EXPECT_EQ(h.representatives.size(), h.dim);
    for (const auto& z : h.representatives) {
      EXPECT_TRUE(P.d(z).is_zero());
      EXPECT_EQ(z.terms().front().second, 1);
      EXPECT_EQ(*z.degree(), h.degree);
    }
  }
}

TEST(Homology, TopLengthClassesAreNotPersistent) {
  DgLie L = model_of_complex(simplex_boundary(2), 4);
  auto h = homology(L, -2, -1);
  EXPECT_EQ(h[0].dim, 1u);
  EXPECT_EQ(h[1].dim, 1u);
  EXPECT_EQ(h[0].persistent, 0u);
  EXPECT_EQ(h[1].persistent, 0u);
}

TEST(Lift, Identity) {
  DgLie L = DgLie::free({{"u", 1}}, 4);
  LieMorphism id = LieMorphism::identity(L.alphabet(), 4);
  LieElement z = bracket(L.gen("u"), L.gen("u"));
  EXPECT_EQ(lift_cycle(id, L, L, z), z);
  EXPECT_TRUE(lift_cycle(id, L, L, L.zero()).is_zero());
}

TEST(Lift, BoundaryThroughAcyclicPair) {
  const int n = 4;
  std::vector<GradedGenerator> gens{{"a", -1}, {"u", 0}, {"su", 1}};
  AlphabetPtr alpha = make_alphabet(gens);
  LieElement a = LieElement::generator(alpha, n, "a");
  DgLie B = DgLie::from_named(gens, n, {{"a", Rational(-1, 2) * bracket(a, a)}, {"su", LieElement::generator(alpha, n, "u")}});
  std::vector<GradedGenerator> small{{"a", -1}};
  LieElement a0 = LieElement::generator(make_alphabet(small), n, "a");
  DgLie A = DgLie::from_named(small, n, {{"a", Rational(-1, 2) * bracket(a0, a0)}});
  LieMorphism p = LieMorphism::by_name(B.alphabet(), A.alphabet(), n);
  ASSERT_TRUE(is_chain_map(p, B, A));
  // z' = u maps to 0 = d(0); the lift must bound u
  LieElement x = lift_boundary(p, B, A, B.gen("u"), A.zero());
  EXPECT_EQ(B.d(x), B.gen("u"));
  EXPECT_TRUE(p.apply(x).is_zero());
}

TEST(Solve, ReportsFailingLength) {
  DgLie L = DgLie::free({{"u", 1}}, 4);
  try {
    solve_boundary_by_length(L, L.gen("u"), 2, "bound");
    FAIL() << "expected SolveError";
  } catch (const SolveError& e) {
    EXPECT_NE(std::string(e.what()).find("at word length 1"), std::string::npos) << e.what();
  }
}

TEST(Solve, LinearContractionBoundsCycles) {
  DgLie L = model_of_complex(standard_simplex(2), 4);
  LinearContraction c(L);
  // d_1 of [a01, a12] is a cycle of length 2 and a boundary
  LieElement y = bracket(L.gen("a01"), L.gen("a12"));
  DgLie d1 = linear_part(L);
  auto bound = c.bound(d1.d(y));
  ASSERT_TRUE(bound.has_value());
  EXPECT_EQ(d1.d(*bound), d1.d(y));
  // [a0, a0] is a d_1-cycle that is not a boundary
  EXPECT_FALSE(c.bound(bracket(L.gen("a0"), L.gen("a0"))).has_value());
}
