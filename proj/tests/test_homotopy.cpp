#include <gtest/gtest.h>

#include "cdgl/errors.hpp"
#include "cdgl/homotopy.hpp"
#include "cdgl/models.hpp"
#include "cdgl/series.hpp"

using namespace cdgl;

namespace {

DgLie mc_point(int n, const std::string& name = "a") {
  std::vector<GradedGenerator> gens{{name, -1}};
  LieElement a = LieElement::generator(make_alphabet(gens), n, name);
  return DgLie::from_named(gens, n, {{name, Rational(-1, 2) * bracket(a, a)}});
}

LieElement desuspended_boundary(const DgLie& L, const Simplex& s) {
  LieElement out = L.zero();
  for (const auto& [sign, face] : boundary(s)) out += Rational(sign) * L.gen(simplex_name(face));
  return out;
}

// (w, u, su) with |w| = 0, |u| = -1, dw = du = 0, d su = u, over (w) with zero differential.
struct Fibration {
  DgLie source;
  DgLie target;
  LieMorphism p;
};

Fibration three_generator_fibration(int n) {
  std::vector<GradedGenerator> gens{{"w", 0}, {"u", -1}, {"su", 0}};
  DgLie source = DgLie::from_named(gens, n, {{"su", LieElement::generator(make_alphabet(gens), n, "u")}});
  DgLie target = DgLie::free({{"w", 0}}, n);
  LieMorphism p = LieMorphism::by_name(source.alphabet(), target.alphabet(), n);
  return {source, target, p};
}

LieMorphism path(const DgLie& I, const DgLie& L, const LieElement& a, const LieElement& b, const LieElement& x) {
  return LieMorphism::from_named(I.alphabet(), L.alphabet(), I.truncation(), {{"a", a}, {"b", b}, {"x", x}});
}

}  // namespace

TEST(TensorLambda, EvaluationsAndDifferential) {
  DgLie I = ls_interval(5);
  TensorLambda T = tensor_lambda(I);
  PolyElement xt(I.alphabet(), 5);
  xt.add_plain(1, I.gen("a"));
  EXPECT_TRUE(xt.at_zero().is_zero());
  EXPECT_EQ(xt.at_one(), I.gen("a"));
  // |a| = -1: d(a t) = (da) t - a dt
  PolyElement d = T.d(xt);
  EXPECT_EQ(d.plain_coefficient(1), I.d_of("a"));
  EXPECT_EQ(d.dt_coefficient(0), -I.gen("a"));
  EXPECT_THROW(xt.add_plain(6, I.gen("a")), AlgebraError);
}

TEST(TensorLambda, EvaluationsAreChainMaps) {
  DgLie I = ls_interval(5);
  TensorLambda T = tensor_lambda(I);
  LieElement a = I.gen("a"), b = I.gen("b"), x = I.gen("x");
  PolyElement z(I.alphabet(), 5);
  z.add_plain(0, bracket(x, a));
  z.add_plain(2, a + bracket(x, b));
  z.add_plain(3, bracket(x, bracket(x, b)));
  z.add_dt(1, x);
  z.add_dt(2, bracket(x, x) + bracket(a, b));
  EXPECT_EQ(T.d(z).at_zero(), I.d(z.at_zero()));
  EXPECT_EQ(T.d(z).at_one(), I.d(z.at_one()));
  EXPECT_TRUE(T.d(T.d(z)).is_zero());
}

TEST(LeftToRight, IdentityPath) {
  DgLie I = ls_interval(6);
  PolyElement g = left_to_right(LieMorphism::identity(I.alphabet(), 6), I);
  EXPECT_TRUE(tensor_lambda(I).is_mc(g));
  EXPECT_EQ(g.at_zero(), I.gen("a"));
  EXPECT_EQ(g.at_one(), I.gen("b"));
}

TEST(LeftToRight, ConstantPath) {
  DgLie I = ls_interval(6);
  DgLie L = mc_point(6, "m");
  PolyElement g = left_to_right(path(I, L, L.gen("m"), L.gen("m"), L.zero()), L);
  EXPECT_EQ(g, PolyElement::constant(L.gen("m")));
  EXPECT_THROW(left_to_right(path(I, L, L.gen("m"), L.zero(), L.zero()), L), AlgebraError);
}

TEST(RightToLeft, RoundTripAndConstant) {
  DgLie I = ls_interval(6);
  LieMorphism id = LieMorphism::identity(I.alphabet(), 6);
  LieMorphism back = right_to_left(left_to_right(id, I), I);
  EXPECT_TRUE(is_chain_map(back, I, I));
  EXPECT_EQ(back, id);

  DgLie L = mc_point(6, "m");
  LieMorphism constant = right_to_left(PolyElement::constant(L.gen("m")), L);
  EXPECT_TRUE(constant.image("x").is_zero());
  PolyElement bad(L.alphabet(), 6);
  bad.add_plain(1, L.gen("m"));
  EXPECT_THROW(right_to_left(bad, L), AlgebraError);
}

TEST(McReduce, GaugeCertificate) {
  const int n = 6;
  Extension ext = acyclic_extension(mc_point(n), {{"u", -1}});
  const DgLie& B = ext.algebra;
  LsIsomorphism iso = ls_isomorphism(n);
  LieMorphism into_b = LieMorphism::by_name(iso.acyclic.alphabet(), B.alphabet(), n);
  // e^θ(a): gauge transform of a by su, MC and not in L̂(a)
  LieElement y = into_b.apply(iso.psi.image("b"));
  ASSERT_TRUE(is_mc(B, y));
  McReduction r = mc_reduce(B, {"u"}, y);
  EXPECT_EQ(r.y0, B.gen("a"));
  EXPECT_TRUE(tensor_lambda(B).is_mc(r.gauge));
  EXPECT_EQ(r.gauge.at_zero(), r.y0);
  EXPECT_EQ(r.gauge.at_one(), y);
  LieMorphism f = right_to_left(r.gauge, B);
  EXPECT_EQ(f.image("a"), r.y0);
  EXPECT_EQ(f.image("b"), y);

  McReduction trivial = mc_reduce(B, {"u"}, B.gen("a"));
  EXPECT_EQ(trivial.gauge, PolyElement::constant(B.gen("a")));
  EXPECT_THROW(mc_reduce(B, {"u"}, B.gen("u")), AlgebraError);
}

TEST(LsIsomorphism, PsiIsInvertibleChainMap) {
  const int n = 8;
  LsIsomorphism iso = ls_isomorphism(n);
  EXPECT_TRUE(is_chain_map(iso.psi, iso.interval, iso.acyclic));
  EXPECT_TRUE(is_chain_map(iso.psi_inverse, iso.acyclic, iso.interval));
  EXPECT_EQ(compose(iso.psi, iso.psi_inverse), LieMorphism::identity(iso.acyclic.alphabet(), n));
  EXPECT_EQ(compose(iso.psi_inverse, iso.psi), LieMorphism::identity(iso.interval.alphabet(), n));
  const LieElement a = iso.acyclic.gen("a"), u = iso.acyclic.gen("u"), su = iso.acyclic.gen("su");
  LieElement expected = exp_ad(-su, a) + ad_series(at_negative(exp_minus_one_over_z(n)), su, u);
  EXPECT_EQ(iso.psi.image("b"), expected);
}

TEST(LiftPath, IdentityProjection) {
  const int n = 6;
  DgLie I = ls_interval(n);
  LieMorphism id = LieMorphism::identity(I.alphabet(), n);
  EXPECT_EQ(lift_path(id, I, I, id, I.gen("a")), id);
}

TEST(LiftPath, ThreeGeneratorFibration) {
  const int n = 6;
  Fibration F = three_generator_fibration(n);
  DgLie I = ls_interval(n);
  LieMorphism f = path(I, F.target, F.target.zero(), F.target.zero(), F.target.gen("w"));
  const LieElement y = F.source.gen("w") + F.source.gen("su");
  LieMorphism h = lift_path(F.p, F.source, F.target, f, F.source.zero(), y);
  EXPECT_TRUE(is_chain_map(h, I, F.source));
  EXPECT_EQ(compose(F.p, h), f);
  EXPECT_EQ(h.image("a"), F.source.zero());
  EXPECT_EQ(h.image("x"), y);
  // h(b) = e^{ad_{-y}}(c) + ((e^{ad_{-y}} - 1)/ad_{-y})(dy) with c = 0
  EXPECT_EQ(h.image("b"), ad_series(at_negative(exp_minus_one_over_z(n)), y, F.source.d(y)));
  EXPECT_FALSE(h.image("b").is_zero());

  LieMorphism solved = lift_path(F.p, F.source, F.target, f, F.source.zero());
  EXPECT_EQ(compose(F.p, solved), f);
  EXPECT_THROW(lift_path(F.p, F.source, F.target, f, F.source.zero(), F.source.gen("su")), AlgebraError);
}

TEST(LiftPath, PrescribedEndpoints) {
  const int n = 6;
  Fibration F = three_generator_fibration(n);
  DgLie I = ls_interval(n);
  const LieElement zero = F.source.zero();
  LieMorphism f = path(I, F.target, F.target.zero(), F.target.zero(), F.target.gen("w"));
  LieMorphism first = lift_path(F.p, F.source, F.target, f, zero);
  ASSERT_EQ(first.image("b"), zero);
  // a loop whose projection -w is a nonzero cycle, to be corrected
  LieMorphism loop = path(I, F.source, zero, zero, -F.source.gen("w"));
  ASSERT_NE(compose(F.p, compose_paths(first, loop)), f);
  LieMorphism h = lift_path_endpoints(F.p, F.source, F.target, f, zero, zero, loop);
  EXPECT_TRUE(is_chain_map(h, I, F.source));
  EXPECT_EQ(compose(F.p, h), f);
  EXPECT_EQ(h.image("a"), zero);
  EXPECT_EQ(h.image("b"), zero);
  // su is not a cycle, so this is not a path
  LieMorphism wrong = path(I, F.source, zero, zero, F.source.gen("su"));
  EXPECT_THROW(lift_path_endpoints(F.p, F.source, F.target, f, zero, zero, wrong), AlgebraError);
}

TEST(Cylinder, PointGivesLsInterval) {
  const int n = 8;
  DgLie point = mc_point(n);
  CylinderTriple c = cylinder(point);
  DgLie I = ls_interval(n);
  LieMorphism relabel = path(I, c.cylinder, c.cylinder.gen("a"), c.cylinder.gen("a^"), c.cylinder.gen("a~"));
  for (const std::string g : {"a", "b", "x"}) {
    EXPECT_EQ(relabel.apply(I.d_of(g)), c.cylinder.d(relabel.image(g))) << g;
  }
  EXPECT_EQ(compose(c.psi, c.psi_inverse), LieMorphism::identity(c.auxiliary.alphabet(), n));
  EXPECT_EQ(compose(c.psi_inverse, c.psi), LieMorphism::identity(c.cylinder.alphabet(), n));
}

TEST(Cylinder, MapsOfTheTriple) {
  const int n = 4;
  DgLie L = model_of_simplex(2, n);
  CylinderTriple c = cylinder(L);
  ValidationReport r = validate(c.cylinder);
  EXPECT_TRUE(r.ok) << (r.violations.empty() ? "" : r.violations.front());
  EXPECT_TRUE(is_chain_map(c.psi, c.cylinder, c.auxiliary));
  EXPECT_TRUE(is_chain_map(c.lambda0, L, c.cylinder));
  EXPECT_TRUE(is_chain_map(c.lambda1, L, c.cylinder));
  EXPECT_TRUE(is_chain_map(c.projection, c.cylinder, L));
  LieMorphism id = LieMorphism::identity(L.alphabet(), n);
  EXPECT_EQ(compose(c.projection, c.lambda0), id);
  EXPECT_EQ(compose(c.projection, c.lambda1), id);
}

TEST(Cylinder, BarDifferentialModuloLowerGenerators) {
  const int n = 4;
  DgLie L = model_of_simplex(2, n);
  CylinderTriple c = cylinder(L);
  const AlphabetPtr& alpha = c.cylinder.alphabet();
  for (const auto& g : L.alphabet()->generators()) {
    if (g.degree < 1) continue;
    std::vector<int> lower;
    for (int i = 0; i < alpha->size(); ++i) {
      const std::string& name = (*alpha)[i].name;
      const std::string base = name.back() == '^' || name.back() == '~' ? name.substr(0, name.size() - 1) : name;
      if (L.alphabet()->degree(L.alphabet()->index_of(base)) < g.degree) lower.push_back(i);
    }
    LieElement rest = c.cylinder.d_of(g.name + "~") - (c.cylinder.gen(g.name + "^") - c.cylinder.gen(g.name));
    EXPECT_TRUE(in_generator_ideal(rest, lower)) << g.name;
    EXPECT_FALSE(in_generator_ideal(c.cylinder.d_of(g.name + "~"), lower)) << g.name;
  }
}

TEST(Cone, PointAndEdge) {
  const int n = 6;
  DgLie cone0 = cone_dgl(model_of_simplex(0, n));
  EXPECT_EQ(cone0.differential(), model_of_simplex(1, n).differential());

  DgLie cone1 = cone_dgl(model_of_simplex(1, 5));
  ValidationReport r = validate(cone1);
  ASSERT_TRUE(r.ok) << (r.violations.empty() ? "" : r.violations.front());
  for (const auto& [name, s] : cone1.simplex_labels()) {
    EXPECT_EQ(cone1.d_of(name).length_slice(1), desuspended_boundary(cone1, s)) << name;
    if (s.size() == 1) EXPECT_TRUE(is_mc(cone1, cone1.gen(name)));
  }
  // the faces through the apex are cones of the faces of Δ¹
  DgLie edge = cone_dgl(model_of_simplex(0, 5));
  for (const Simplex& face : std::vector<Simplex>{{0, 2}, {1, 2}}) {
    LieMorphism inclusion = LieMorphism::from_named(
        edge.alphabet(), cone1.alphabet(), 5,
        {{"a0", cone1.gen(simplex_name({face[0]}))}, {"a1", cone1.gen(simplex_name({face[1]}))}, {"a01", cone1.gen(simplex_name(face))}});
    EXPECT_TRUE(is_chain_map(inclusion, edge, cone1));
  }
}

TEST(Cone, BoundaryOfTriangle) {
  const int n = 4;
  SimplicialComplex X = simplex_boundary(2);
  DgLie cone = cone_dgl(model_of_complex(X, n));
  DgLie expected = model_of_complex(cone_complex(X), n);
  ASSERT_TRUE(same_alphabet(cone.alphabet(), expected.alphabet()));
  EXPECT_TRUE(validate(cone).ok);
  for (const auto& g : expected.alphabet()->generators()) {
    EXPECT_EQ(cone.d_of(g.name).length_slice(1), expected.d_of(g.name).length_slice(1)) << g.name;
  }
}

TEST(Factorize, IdentityAndZero) {
  const int n = 5;
  DgLie L = mc_point(n);
  LieMorphism id = LieMorphism::identity(L.alphabet(), n);
  Factorization fac = factorize(id, L, L);
  EXPECT_TRUE(validate(fac.middle).ok);
  EXPECT_EQ(compose(fac.projection, fac.inclusion), id);
  EXPECT_TRUE(is_chain_map(fac.inclusion, L, fac.middle));
  EXPECT_EQ(fac.projection.image("sda"), L.gen("a"));

  DgLie I = ls_interval(n);
  LieMorphism zero = LieMorphism::from_named(L.alphabet(), I.alphabet(), n, {});
  Factorization z = factorize(zero, L, I);
  EXPECT_EQ(compose(z.projection, z.inclusion), zero);
  WeakEquivalenceReport report =
      is_weak_equivalence_rel(fac.projection, fac.middle, L, {{fac.middle.gen("a"), L.gen("a")}}, -n, 1);
  EXPECT_TRUE(report.ok);
}

TEST(BuildHomotopy, EndpointsOfTheInterval) {
  const int n = 6;
  SimplicialComplex point = standard_simplex(0), edge = standard_simplex(1);
  HomotopyData h = build_homotopy(point, edge, {{0}}, {{1}}, {{0, 1}}, n);
  DgLie cyl = h.cylinder.cylinder;
  DgLie target = model_of_complex(edge, n);
  EXPECT_TRUE(is_chain_map(h.homotopy, cyl, target));
  EXPECT_EQ(compose(h.homotopy, h.cylinder.lambda0), h.model_f);
  EXPECT_EQ(compose(h.homotopy, h.cylinder.lambda1), h.model_g);
  EXPECT_EQ(h.model_f.image("a0"), target.gen("a0"));
  EXPECT_EQ(h.model_g.image("a0"), target.gen("a1"));
  EXPECT_EQ(h.homotopy.image("a0~"), target.gen("a01"));
}

TEST(BuildHomotopy, ConstantAndCollapsing) {
  const int n = 5;
  SimplicialComplex edge = standard_simplex(1);
  HomotopyData same = build_homotopy(edge, edge, {{0, 1}}, {{0, 1}}, {{0, 0, 1, 1}}, n);
  EXPECT_EQ(compose(same.homotopy, same.cylinder.lambda0), same.model_f);
  EXPECT_EQ(compose(same.homotopy, same.cylinder.lambda1), same.model_f);

  HomotopyData collapse = build_homotopy(edge, edge, {{0, 0}}, {{0, 1}}, {{0, 0, 0, 1}}, n);
  DgLie target = model_of_complex(edge, n);
  EXPECT_TRUE(is_chain_map(collapse.homotopy, collapse.cylinder.cylinder, target));
  EXPECT_EQ(compose(collapse.homotopy, collapse.cylinder.lambda0), collapse.model_f);
  EXPECT_EQ(compose(collapse.homotopy, collapse.cylinder.lambda1), collapse.model_g);
  EXPECT_THROW(build_homotopy(edge, edge, {{0, 1}}, {{0, 1}}, {{0, 0, 0, 1}}, n), InputError);
}

TEST(WeakEquivalence, RelativeChecks) {
  const int n = 5;
  DgLie L = mc_point(n);
  LieMorphism id = LieMorphism::identity(L.alphabet(), n);
  EXPECT_TRUE(is_weak_equivalence_rel(id, L, L, {{L.gen("a"), L.gen("a")}, {L.zero(), L.zero()}}, -n, 1).ok);

  Extension ext = acyclic_extension(L, {{"u", 0}});
  EXPECT_TRUE(is_weak_equivalence_rel(ext.inclusion, L, ext.algebra, {{L.gen("a"), ext.algebra.gen("a")}}, -n, 2).ok);

  DgLie I = ls_interval(n);
  LieMorphism collapse = LieMorphism::from_named(I.alphabet(), L.alphabet(), n, {{"a", L.gen("a")}, {"b", L.gen("a")}});
  EXPECT_TRUE(is_weak_equivalence_rel(collapse, I, L, {{I.gen("a"), L.gen("a")}}, -n, 1).ok);
  EXPECT_THROW(is_weak_equivalence_rel(collapse, I, L, {{I.gen("b"), L.zero()}}, -n, 1), AlgebraError);
}
