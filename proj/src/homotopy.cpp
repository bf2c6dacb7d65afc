#include "cdgl/homotopy.hpp"

#include <algorithm>
#include <set>

#include "cdgl/errors.hpp"
#include "cdgl/models.hpp"
#include "cdgl/series.hpp"

namespace cdgl {

namespace {

std::map<int, LieElement> split_by_degree(const LieElement& x) {
  std::map<int, ElementBuilder> parts;
  for (const auto& [w, c] : x.terms()) {
    auto [it, fresh] = parts.try_emplace(x.alphabet()->word_degree(w), x.alphabet(), x.truncation());
    it->second.add(w, c);
  }
  std::map<int, LieElement> out;
  for (auto& [deg, b] : parts) out.emplace(deg, b.build());
  return out;
}

Rational sign(int exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

void require_chain_map(const LieMorphism& f, const DgLie& source, const DgLie& target, const std::string& what) {
  auto defects = chain_map_defects(f, source, target);
  if (!defects.empty()) {
    throw AlgebraError(what + ": not a chain map on generator '" + defects.front().first + "'");
  }
}

DgLie interval_for(const LieMorphism& f) {
  DgLie I = ls_interval(f.truncation());
  if (!same_alphabet(f.source(), I.alphabet())) throw AlgebraError("expected a path out of the LS interval");
  return I;
}

// Polynomials in t with degree 0 Lie coefficients, for the holonomy equation.
using TPoly = std::map<int, LieElement>;

void add_term(TPoly& p, int k, const LieElement& x) {
  if (x.is_zero()) return;
  auto [it, fresh] = p.try_emplace(k, x);
  if (!fresh) {
    it->second += x;
    if (it->second.is_zero()) p.erase(it);
  }
}

TPoly bracket(const TPoly& x, const TPoly& y) {
  TPoly out;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) add_term(out, i + j, bracket(a, b));
  }
  return out;
}

}  // namespace

PolyElement::PolyElement(AlphabetPtr alphabet, int truncation)
    : alphabet_(std::move(alphabet)), truncation_(truncation) {}

PolyElement PolyElement::constant(const LieElement& x) {
  PolyElement p(x.alphabet(), x.truncation());
  p.add_plain(0, x);
  return p;
}

LieElement PolyElement::plain_coefficient(int k) const {
  auto it = plain_.find(k);
  return it == plain_.end() ? LieElement(alphabet_, truncation_) : it->second;
}

LieElement PolyElement::dt_coefficient(int k) const {
  auto it = dt_.find(k);
  return it == dt_.end() ? LieElement(alphabet_, truncation_) : it->second;
}

void PolyElement::add_to(std::map<int, LieElement>& part, int k, const LieElement& x) {
  if (x.is_zero()) return;
  auto [it, fresh] = part.try_emplace(k, x);
  if (!fresh) {
    it->second += x;
    if (it->second.is_zero()) part.erase(it);
  }
}

void PolyElement::add_plain(int k, const LieElement& x) {
  if (x.is_zero()) return;
  if (k < 0 || k > truncation_) throw AlgebraError("t-exponent " + std::to_string(k) + " outside 0.." + std::to_string(truncation_));
  require_compatible(LieElement(alphabet_, truncation_), x);
  add_to(plain_, k, x);
}

void PolyElement::add_dt(int k, const LieElement& x) {
  if (x.is_zero()) return;
  if (k < 0 || k > truncation_) throw AlgebraError("t-exponent " + std::to_string(k) + " outside 0.." + std::to_string(truncation_));
  require_compatible(LieElement(alphabet_, truncation_), x);
  add_to(dt_, k, x);
}

LieElement PolyElement::at_zero() const { return plain_coefficient(0); }

LieElement PolyElement::at_one() const {
  LieElement out(alphabet_, truncation_);
  for (const auto& [k, x] : plain_) out += x;
  return out;
}

PolyElement PolyElement::operator-() const {
  PolyElement out = *this;
  out *= Rational(-1);
  return out;
}

PolyElement& PolyElement::operator+=(const PolyElement& other) {
  for (const auto& [k, x] : other.plain_) add_plain(k, x);
  for (const auto& [k, x] : other.dt_) add_dt(k, x);
  return *this;
}

PolyElement& PolyElement::operator-=(const PolyElement& other) { return *this += -other; }

PolyElement& PolyElement::operator*=(const Rational& c) {
  if (c == 0) {
    plain_.clear();
    dt_.clear();
    return *this;
  }
  for (auto& [k, x] : plain_) x *= c;
  for (auto& [k, x] : dt_) x *= c;
  return *this;
}

bool operator==(const PolyElement& a, const PolyElement& b) { return a.plain_ == b.plain_ && a.dt_ == b.dt_; }

PolyElement bracket(const PolyElement& x, const PolyElement& y) {
  PolyElement out(x.alphabet(), x.truncation());
  for (const auto& [i, a] : x.plain()) {
    for (const auto& [j, b] : y.plain()) out.add_plain(i + j, bracket(a, b));
    for (const auto& [j, b] : y.dt()) out.add_dt(i + j, bracket(a, b));
  }
  for (const auto& [i, a] : x.dt()) {
    for (const auto& [j, b] : y.plain()) {
      for (const auto& [deg, part] : split_by_degree(b)) out.add_dt(i + j, sign(deg) * bracket(a, part));
    }
  }
  return out;
}

PolyElement apply(const LieMorphism& f, const PolyElement& x) {
  PolyElement out(f.target(), f.truncation());
  for (const auto& [k, a] : x.plain()) out.add_plain(k, f.apply(a));
  for (const auto& [k, a] : x.dt()) out.add_dt(k, f.apply(a));
  return out;
}

PolyElement TensorLambda::d(const PolyElement& x) const {
  PolyElement out(x.alphabet(), x.truncation());
  for (const auto& [k, a] : x.plain()) {
    out.add_plain(k, L_.d(a));
    if (k == 0) continue;
    for (const auto& [deg, part] : split_by_degree(a)) out.add_dt(k - 1, sign(deg) * Rational(k) * part);
  }
  for (const auto& [k, a] : x.dt()) out.add_dt(k, L_.d(a));
  return out;
}

PolyElement TensorLambda::mc_residual(const PolyElement& g) const {
  return d(g) + Rational(1, 2) * bracket(g, g);
}

TensorLambda tensor_lambda(const DgLie& L) { return TensorLambda(L); }

PolyElement left_to_right(const LieMorphism& f, const DgLie& target) {
  const DgLie I = interval_for(f);
  require_chain_map(f, I, target, "left_to_right");
  const int n = I.truncation();
  const LieElement x = I.gen("x");
  PolyElement phi(I.alphabet(), n);
  phi.add_dt(0, x);
  // t^k: (-1)^k/k! ad_x^k(a) + (-1)^{k-1}/k! ad_x^{k-1}(∂x)
  LieElement ad_a = I.gen("a");
  LieElement ad_dx = I.d_of("x");
  for (int k = 0; k <= n && !(ad_a.is_zero() && ad_dx.is_zero()); ++k) {
    const Rational c = sign(k) / factorial(k);
    LieElement coefficient = c * ad_a;
    if (k >= 1) {
      coefficient -= c * ad_dx;
      ad_dx = bracket(x, ad_dx);
    }
    phi.add_plain(k, coefficient);
    ad_a = bracket(x, ad_a);
  }
  return apply(f, phi);
}

LieMorphism right_to_left(const PolyElement& g, const DgLie& L) {
  TensorLambda lambda(L);
  if (!lambda.is_mc(g)) throw AlgebraError("right_to_left: not a Maurer-Cartan element of L ⊗ Λ(t, dt)");
  const int n = L.truncation();
  const std::vector<Rational> coefficients = z_over_one_minus_exp_neg(n);
  TPoly beta(g.dt().begin(), g.dt().end());
  TPoly X;
  // Each pass fixes one more word length of X.
  for (int pass = 0; pass <= n + 1; ++pass) {
    TPoly rhs;
    TPoly term = beta;
    for (int k = 0; k <= n && !term.empty(); ++k) {
      for (const auto& [e, c] : term) add_term(rhs, e, coefficients[k] * c);
      term = bracket(X, term);
    }
    TPoly next;
    for (const auto& [e, c] : rhs) add_term(next, e + 1, c * Rational(1, e + 1));
    if (next == X) break;
    X = std::move(next);
    if (pass == n + 1) throw AlgebraError("right_to_left: holonomy did not converge");
  }
  LieElement holonomy = L.zero();
  for (const auto& [e, c] : X) holonomy += c;
  DgLie I = ls_interval(n);
  LieMorphism f =
      LieMorphism::from_named(I.alphabet(), L.alphabet(), n, {{"a", g.at_zero()}, {"b", g.at_one()}, {"x", holonomy}});
  require_chain_map(f, I, L, "right_to_left");
  return f;
}

McReduction mc_reduce(const DgLie& B, const std::vector<std::string>& U, const LieElement& y) {
  if (!is_mc(B, y)) throw AlgebraError("mc_reduce: y is not a Maurer-Cartan element");
  const AlphabetPtr& alpha = B.alphabet();
  const int n = B.truncation();
  std::vector<bool> acyclic(alpha->size(), false);
  std::map<std::string, LieElement> s_images;
  for (const auto& u : U) {
    const int iu = alpha->find(u), isu = alpha->find("s" + u);
    if (iu < 0 || isu < 0) throw AlgebraError("mc_reduce: missing generator '" + (iu < 0 ? u : "s" + u) + "'");
    acyclic[iu] = acyclic[isu] = true;
    s_images.emplace(u, B.gen("s" + u));
  }
  LieDerivation s = LieDerivation::from_named(alpha, n, 1, s_images);

  std::map<int, ElementBuilder> parts;
  for (const auto& [w, c] : y.terms()) {
    int count = 0;
    for (int i = 0; i < w.size(); ++i) count += acyclic[w[i]] ? 1 : 0;
    auto [it, fresh] = parts.try_emplace(count, alpha, n);
    it->second.add(w, c);
  }
  std::map<int, LieElement> slices;
  for (auto& [k, b] : parts) slices.emplace(k, b.build());

  McReduction out{B.zero(), PolyElement(alpha, n)};
  for (const auto& [k, yk] : slices) {
    if (k == 0) out.y0 = yk;
    out.gauge.add_plain(k, yk);
    if (k >= 1) out.gauge.add_dt(k - 1, s.apply(yk));
  }
  if (!tensor_lambda(B).is_mc(out.gauge)) throw AlgebraError("mc_reduce: gauge is not a Maurer-Cartan element");
  return out;
}

LsIsomorphism ls_isomorphism(int truncation) {
  const int n = truncation;
  DgLie I = ls_interval(n);
  std::vector<GradedGenerator> gens{{"a", -1}, {"u", -1}, {"su", 0}};
  AlphabetPtr alpha = make_alphabet(gens);
  LieElement a = LieElement::generator(alpha, n, "a");
  DgLie A = DgLie::from_named(gens, n, {{"a", Rational(-1, 2) * bracket(a, a)}, {"su", LieElement::generator(alpha, n, "u")}});
  LieDerivation i = LieDerivation::from_named(alpha, n, 1, {{"a", A.gen("su")}});
  LieDerivation theta = commutator(i, A.differential());
  LieMorphism psi = LieMorphism::from_named(I.alphabet(), alpha, n,
                                            {{"a", a}, {"b", exp_derivation(theta, a)}, {"x", A.gen("su")}});
  LieMorphism psi_inverse =
      LieMorphism::from_named(alpha, I.alphabet(), n, {{"a", I.gen("a")}, {"su", I.gen("x")}, {"u", I.d_of("x")}});
  return {std::move(I), std::move(A), std::move(psi), std::move(psi_inverse)};
}

LieMorphism lift_path(const LieMorphism& p, const DgLie& source, const DgLie& target, const LieMorphism& f,
                      const LieElement& c, const std::optional<LieElement>& preimage) {
  const DgLie I = interval_for(f);
  const int n = I.truncation();
  require_chain_map(f, I, target, "lift_path: the target path");
  if (!is_mc(source, c)) throw AlgebraError("lift_path: the starting point is not a Maurer-Cartan element");
  if (p.apply(c) != f.image("a")) throw AlgebraError("lift_path: p(c) differs from the start of the path");
  LieElement y = preimage ? *preimage
                          : solve_for_element(source.alphabet(), n, 0, {{&p, nullptr, f.image("x")}}, "lift_path preimage");
  if (p.apply(y) != f.image("x")) throw AlgebraError("lift_path: the supplied preimage does not map to f(x)");

  LsIsomorphism iso = ls_isomorphism(n);
  LieMorphism rho = LieMorphism::from_named(iso.acyclic.alphabet(), source.alphabet(), n,
                                            {{"a", c}, {"su", y}, {"u", source.d(y)}});
  LieMorphism h = compose(rho, iso.psi);
  require_chain_map(h, I, source, "lift_path");
  if (compose(p, h) != f) throw AlgebraError("lift_path: p∘h differs from f");
  return h;
}

LieMorphism lift_path_endpoints(const LieMorphism& p, const DgLie& source, const DgLie& target, const LieMorphism& f,
                                const LieElement& u, const LieElement& v, const LieMorphism& connecting) {
  const DgLie I = interval_for(f);
  LieMorphism first = lift_path(p, source, target, f, u);
  if (!same_alphabet(connecting.source(), I.alphabet())) throw AlgebraError("connecting path: not a path");
  require_chain_map(connecting, I, source, "lift_path_endpoints: the connecting path");
  if (connecting.image("a") != first.image("b")) {
    throw AlgebraError("lift_path_endpoints: the connecting path does not start at the end of the lift");
  }
  if (connecting.image("b") != v) throw AlgebraError("lift_path_endpoints: the connecting path does not end at v");
  const LieElement pv = p.apply(v);
  if (pv != f.image("b")) throw AlgebraError("lift_path_endpoints: p(v) differs from the end of the path");

  const LieElement z = -p.apply(connecting.image("x"));
  LieElement c = lift_cycle(p, perturb(source, v), perturb(target, pv), z);
  LieMorphism correction = LieMorphism::from_named(I.alphabet(), source.alphabet(), I.truncation(),
                                                   {{"a", v}, {"b", v}, {"x", c}});
  LieMorphism h = compose_paths(compose_paths(first, connecting), correction);
  require_chain_map(h, I, source, "lift_path_endpoints");
  if (compose(p, h) != f) throw AlgebraError("lift_path_endpoints: p∘h differs from f");
  return h;
}

CylinderTriple cylinder(const DgLie& L) {
  const AlphabetPtr& V = L.alphabet();
  const int n = L.truncation();
  std::vector<GradedGenerator> aux_gens, cyl_gens;
  for (const auto& g : V->generators()) {
    aux_gens.push_back(g);
    aux_gens.push_back({g.name + "'", g.degree});
    aux_gens.push_back({"s" + g.name + "'", g.degree + 1});
    cyl_gens.push_back(g);
    cyl_gens.push_back({g.name + "^", g.degree});
    cyl_gens.push_back({g.name + "~", g.degree + 1});
  }
  AlphabetPtr aux = make_alphabet(aux_gens);
  AlphabetPtr cyl = make_alphabet(cyl_gens);
  LieMorphism into_aux = LieMorphism::by_name(V, aux, n);

  std::map<std::string, LieElement> d_images, i_images;
  for (const auto& g : V->generators()) {
    d_images.emplace(g.name, into_aux.apply(L.d_of(g.name)));
    d_images.emplace("s" + g.name + "'", LieElement::generator(aux, n, g.name + "'"));
    i_images.emplace(g.name, LieElement::generator(aux, n, "s" + g.name + "'"));
  }
  DgLie auxiliary(LieDerivation::from_named(aux, n, -1, d_images));
  LieDerivation i = LieDerivation::from_named(aux, n, 1, i_images);
  LieDerivation theta = commutator(i, auxiliary.differential());

  std::map<std::string, LieElement> psi_images, lambda1_images, p_images;
  for (const auto& g : V->generators()) {
    const LieElement v = LieElement::generator(aux, n, g.name);
    psi_images.emplace(g.name, v);
    psi_images.emplace(g.name + "^", exp_derivation(theta, v));
    psi_images.emplace(g.name + "~", LieElement::generator(aux, n, "s" + g.name + "'"));
    lambda1_images.emplace(g.name, LieElement::generator(cyl, n, g.name + "^"));
    p_images.emplace(g.name, LieElement::generator(V, n, g.name));
    p_images.emplace(g.name + "^", LieElement::generator(V, n, g.name));
  }
  LieMorphism psi = LieMorphism::from_named(cyl, aux, n, psi_images);
  LieMorphism psi_inverse = invert_morphism(psi);
  DgLie C(conjugate(psi_inverse, auxiliary.differential(), psi));
  C.set_simplex_labels(L.simplex_labels());
  return {std::move(C),
          LieMorphism::by_name(V, cyl, n),
          LieMorphism::from_named(V, cyl, n, lambda1_images),
          LieMorphism::from_named(cyl, V, n, p_images),
          std::move(auxiliary),
          std::move(psi),
          std::move(psi_inverse)};
}

DgLie cone_dgl(const DgLie& LX) {
  const auto& labels = LX.simplex_labels();
  if (labels.empty()) throw AlgebraError("cone_dgl: the algebra carries no simplex labels");
  const int n = LX.truncation();
  int first_vertex = -1, apex = 0;
  for (const auto& [name, s] : labels) {
    if (s.size() == 1 && (first_vertex < 0 || s[0] < first_vertex)) first_vertex = s[0];
    apex = std::max(apex, s.back() + 1);
  }
  if (first_vertex < 0) throw AlgebraError("cone_dgl: no vertex generators");
  const std::string base = simplex_name({first_vertex}) + "^";

  CylinderTriple cyl = cylinder(LX);
  const DgLie& C = cyl.cylinder;
  std::vector<LieElement> kill;
  for (const auto& [name, s] : labels) {
    if (s.size() > 1) {
      kill.push_back(C.gen(name + "^"));
    } else if (s[0] != first_vertex) {
      kill.push_back(C.gen(name + "^") - C.gen(base));
    }
  }
  Quotient q = quotient_by_generators(C, kill);

  std::vector<GradedGenerator> gens;
  std::map<std::string, std::vector<int>> cone_labels;
  std::map<std::string, LieElement> relabel;
  const AlphabetPtr& qa = q.algebra.alphabet();
  auto q_gen = [&](const std::string& name) { return LieElement::generator(qa, n, name); };
  for (const auto& [name, s] : labels) {
    Simplex with_apex = s;
    with_apex.push_back(apex);
    const std::string top = simplex_name(with_apex);
    gens.push_back({name, static_cast<int>(s.size()) - 2});
    gens.push_back({top, static_cast<int>(s.size()) - 1});
    cone_labels[name] = s;
    cone_labels[top] = with_apex;
    relabel.emplace(name, q_gen(name));
    relabel.emplace(top, sign(static_cast<int>(s.size()) - 1) * q_gen(name + "~"));
  }
  const std::string apex_name = simplex_name({apex});
  gens.push_back({apex_name, -1});
  cone_labels[apex_name] = {apex};
  relabel.emplace(apex_name, q_gen(base));

  AlphabetPtr alpha = make_alphabet(gens);
  LieMorphism Psi = LieMorphism::from_named(alpha, qa, n, relabel);
  DgLie cone(conjugate(invert_morphism(Psi), q.algebra.differential(), Psi));
  cone.set_simplex_labels(std::move(cone_labels));
  return cone;
}

Factorization factorize(const LieMorphism& f, const DgLie& source, const DgLie& target) {
  require_chain_map(f, source, target, "factorize");
  const int n = source.truncation();
  std::vector<GradedGenerator> U;
  for (const auto& g : target.alphabet()->generators()) U.push_back({"d" + g.name, g.degree - 1});
  Extension ext = acyclic_extension(source, U);
  std::map<std::string, LieElement> images;
  for (const auto& g : source.alphabet()->generators()) images.emplace(g.name, f.image(g.name));
  for (const auto& g : target.alphabet()->generators()) {
    images.emplace("sd" + g.name, target.gen(g.name));
    images.emplace("d" + g.name, target.d_of(g.name));
  }
  LieMorphism p = LieMorphism::from_named(ext.algebra.alphabet(), target.alphabet(), n, images);
  require_chain_map(p, ext.algebra, target, "factorize: projection");
  return {std::move(ext.algebra), std::move(ext.inclusion), std::move(p)};
}

HomotopyData build_homotopy(const SimplicialComplex& X, const SimplicialComplex& Y, const SimplicialMap& f,
                            const SimplicialMap& g, const SimplicialMap& H, int truncation) {
  const int n = truncation;
  Prism P = prism(X);
  if (static_cast<int>(H.vertex_map.size()) != P.complex.vertex_count()) {
    throw InputError("homotopy: expected a vertex map on the " + std::to_string(P.complex.vertex_count()) +
                     " prism vertices");
  }
  if (static_cast<int>(f.vertex_map.size()) != X.vertex_count() ||
      static_cast<int>(g.vertex_map.size()) != X.vertex_count()) {
    throw InputError("homotopy: f and g must be vertex maps on X");
  }
  for (int v = 0; v < X.vertex_count(); ++v) {
    if (H.vertex_map[2 * v] != f.vertex_map[v] || H.vertex_map[2 * v + 1] != g.vertex_map[v]) {
      throw InputError("homotopy: H does not restrict to f and g at vertex " + std::to_string(v));
    }
  }
  if (!is_simplicial(H, P.complex, Y)) throw InputError("homotopy: H is not simplicial on the prism");

  ModelBuilder builder(n);
  DgLie LX = builder.model(X), LP = builder.model(P.complex), LY = builder.model(Y);
  LieMorphism j0 = model_of_map(P.bottom, X, LX, P.complex, LP);
  LieMorphism j1 = model_of_map(P.top, X, LX, P.complex, LP);
  LieMorphism Lp = model_of_map(P.projection, P.complex, LP, X, LX);
  LieMorphism LH = model_of_map(H, P.complex, LP, Y, LY);

  CylinderTriple cyl = cylinder(LX);
  const DgLie& C = cyl.cylinder;
  const AlphabetPtr& ca = C.alphabet();
  std::vector<LieElement> images(ca->size(), LP.zero());
  std::vector<int> bars;
  for (const auto& gen : LX.alphabet()->generators()) {
    images[ca->index_of(gen.name)] = j0.image(gen.name);
    images[ca->index_of(gen.name + "^")] = j1.image(gen.name);
    bars.push_back(ca->index_of(gen.name + "~"));
  }
  std::stable_sort(bars.begin(), bars.end(), [&](int a, int b) { return ca->degree(a) < ca->degree(b); });

  // ℓ(v~) is built one word length at a time: at length k the defect of the
  // chain-map identity is a d_1-cycle in ker ℒ_p, bounded by a solve. Within
  // a length, lower degrees go first since they feed the linear part of D.
  const DgLie d1 = linear_part(LP);
  const LinearContraction contraction(LP);
  for (int k = 1; k <= n; ++k) {
    for (int bar : bars) {
      LieMorphism current(ca, LP.alphabet(), n, images);
      const LieElement defect = current.apply(C.differential().image(bar)) - LP.d(images[bar]);
      for (int m = 1; m < k; ++m) {
        if (!defect.length_slice(m).is_zero()) {
          throw SolveError("homotopy: lift of '" + (*ca)[bar].name + "' is inconsistent at word length " +
                           std::to_string(m));
        }
      }
      const LieElement rhs = defect.length_slice(k);
      if (rhs.is_zero()) continue;
      // Bound by the contraction, then move into ker ℒ_p along the section
      // ℒ_{j_0}; the exact solve is the fallback.
      if (std::optional<LieElement> y = contraction.bound(rhs)) {
        images[bar] += *y - j0.apply(Lp.apply(*y));
        continue;
      }
      const std::string what = "homotopy lift of '" + (*ca)[bar].name + "'";
      images[bar] += solve_for_element(LP.alphabet(), n, ca->degree(bar),
                                       {{nullptr, &d1, rhs}, {&Lp, nullptr, LX.zero()}}, what.c_str(), k);
    }
  }
  LieMorphism lift(ca, LP.alphabet(), n, std::move(images));
  auto defects = chain_map_defects(lift, C, LP);
  if (!defects.empty()) throw SolveError("homotopy: lift is not a chain map on '" + defects.front().first + "'");
  if (compose(Lp, lift) != cyl.projection) throw AlgebraError("homotopy: ℒ_p∘ℓ differs from the projection");

  LieMorphism F = compose(LH, lift);
  LieMorphism Lf = model_of_map(f, X, LX, Y, LY);
  LieMorphism Lg = model_of_map(g, X, LX, Y, LY);
  return {std::move(cyl), std::move(lift), std::move(F), std::move(Lf), std::move(Lg)};
}

bool WeakEquivalenceDegree::agrees() const {
  if (source_persistent != target_persistent) return false;
  return !(source_stable && target_stable) || source_dim == target_dim;
}

WeakEquivalenceReport is_weak_equivalence_rel(const LieMorphism& f, const DgLie& source, const DgLie& target,
                                              const std::vector<std::pair<LieElement, LieElement>>& mc_pairs, int lo,
                                              int hi) {
  require_chain_map(f, source, target, "weak equivalence check");
  HomologyOptions options;
  options.representatives = false;
  WeakEquivalenceReport report;
  for (const auto& [m, m_target] : mc_pairs) {
    if (f.apply(m) != m_target) throw AlgebraError("weak equivalence check: f(m) differs from the paired element");
    auto hs = homology(perturb(source, m), lo, hi, options);
    auto ht = homology(perturb(target, m_target), lo, hi, options);
    WeakEquivalencePair pair{m, m_target, {}};
    for (std::size_t i = 0; i < hs.size(); ++i) {
      WeakEquivalenceDegree d{hs[i].degree, hs[i].dim, ht[i].dim, hs[i].stable, ht[i].stable, hs[i].persistent,
                              ht[i].persistent};
      report.ok = report.ok && d.agrees();
      pair.degrees.push_back(d);
    }
    report.pairs.push_back(std::move(pair));
  }
  return report;
}

}  // namespace cdgl
