#include "cdgl/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cdgl/errors.hpp"
#include "cdgl/homotopy.hpp"
#include "cdgl/lie_basis.hpp"
#include "cdgl/models.hpp"
#include "cdgl/series.hpp"

namespace cdgl {

namespace {

using Checks = std::vector<Check>;

// A check body returns the empty string on success and a description of the
// failing identity otherwise.
void run(Checks& out, const std::string& name, const std::function<std::string()>& body) {
  try {
    std::string detail = body();
    out.push_back({name, detail.empty(), detail});
  } catch (const std::exception& e) {
    out.push_back({name, false, std::string("exception: ") + e.what()});
  }
}

std::string shorten(std::string s) {
  constexpr std::size_t limit = 400;
  if (s.size() > limit) s = s.substr(0, limit) + " ...";
  return s;
}

std::string equal(const LieElement& lhs, const LieElement& rhs, const std::string& what = "") {
  if (lhs == rhs) return "";
  return shorten((what.empty() ? "" : what + ": ") + "lhs - rhs = " + (lhs - rhs).to_string());
}

std::string equal(const LieMorphism& lhs, const LieMorphism& rhs) {
  for (int i = 0; i < lhs.source()->size(); ++i) {
    if (lhs.image(i) != rhs.image(i)) return equal(lhs.image(i), rhs.image(i), "on " + (*lhs.source())[i].name);
  }
  return "";
}

std::string chain_map(const LieMorphism& f, const DgLie& source, const DgLie& target) {
  auto defects = chain_map_defects(f, source, target);
  if (defects.empty()) return "";
  return shorten("f d - d f on " + defects.front().first + " = " + defects.front().second.to_string());
}

std::string valid(const DgLie& L) {
  ValidationReport r = validate(L);
  return r.ok ? "" : shorten(r.violations.front());
}

std::string all_lie(const DgLie& L, const std::string& what) {
  for (int i = 0; i < L.alphabet()->size(); ++i) {
    if (!is_lie(L.differential().image(i))) return what + ": d" + (*L.alphabet())[i].name + " is not primitive";
  }
  return "";
}

DgLie mc_point(int n) {
  std::vector<GradedGenerator> gens{{"a", -1}};
  LieElement a = LieElement::generator(make_alphabet(gens), n, "a");
  return DgLie::from_named(gens, n, {{"a", Rational(-1, 2) * bracket(a, a)}});
}

LieMorphism path(const DgLie& I, const DgLie& L, const LieElement& a, const LieElement& b, const LieElement& x) {
  return LieMorphism::from_named(I.alphabet(), L.alphabet(), I.truncation(), {{"a", a}, {"b", b}, {"x", x}});
}

LieElement desuspended_boundary(const DgLie& L, const Simplex& s) {
  LieElement out = L.zero();
  for (const auto& [sign, face] : boundary(s)) out += Rational(sign) * L.gen(simplex_name(face));
  return out;
}

Checks ls_suite(int n) {
  Checks out;
  DgLie I = ls_interval(n);
  const LieElement a = I.gen("a"), b = I.gen("b"), x = I.gen("x");
  run(out, "ls_interval is a valid presentation (d^2 = 0)", [&] { return valid(I); });
  run(out, "a and b are Maurer-Cartan", [&] {
    return is_mc(I, a) && is_mc(I, b) ? "" : std::string("nonzero MC residual");
  });
  run(out, "linear part of dx is b - a", [&] { return equal(I.d_of("x").length_slice(1), b - a); });
  run(out, "length 2 part of dx is [x,b] - 1/2[x,b-a]", [&] {
    return equal(I.d_of("x").length_slice(2), bracket(x, b) - Rational(1, 2) * bracket(x, b - a));
  });
  run(out, "dx = ad_x b + sum B_n/n! ad_x^n(b-a) = ad_x a + sum B_n/n! ad_{-x}^n(b-a)", [&] {
    return equal(I.d_of("x"), bracket(x, a) + ad_series(at_negative(z_over_exp_minus_one(n)), x, b - a));
  });

  LsIsomorphism iso = ls_isomorphism(n);
  run(out, "psi is a chain map", [&] { return chain_map(iso.psi, iso.interval, iso.acyclic); });
  run(out, "psi^-1 is a chain map", [&] { return chain_map(iso.psi_inverse, iso.acyclic, iso.interval); });
  run(out, "psi psi^-1 = id and psi^-1 psi = id", [&] {
    std::string d = equal(compose(iso.psi, iso.psi_inverse), LieMorphism::identity(iso.acyclic.alphabet(), n));
    return d.empty() ? equal(compose(iso.psi_inverse, iso.psi), LieMorphism::identity(iso.interval.alphabet(), n)) : d;
  });
  run(out, "psi(b) = e^{ad_{-su}}(a) + ((e^{ad_{-su}} - 1)/ad_{-su})(u)", [&] {
    const LieElement A = iso.acyclic.gen("a"), u = iso.acyclic.gen("u"), su = iso.acyclic.gen("su");
    return equal(iso.psi.image("b"), exp_ad(-su, A) + ad_series(at_negative(exp_minus_one_over_z(n)), su, u));
  });
  return out;
}

Checks cylinder_suite(int n) {
  Checks out;
  {
    CylinderTriple c = cylinder(mc_point(n));
    DgLie I = ls_interval(n);
    LieMorphism relabel = path(I, c.cylinder, c.cylinder.gen("a"), c.cylinder.gen("a^"), c.cylinder.gen("a~"));
    run(out, "cylinder of a point is the LS interval (a, a^, a~) = (a, b, x)", [&] {
      for (const std::string g : {"a", "b", "x"}) {
        std::string d = equal(relabel.apply(I.d_of(g)), c.cylinder.d(relabel.image(g)), "d" + g);
        if (!d.empty()) return d;
      }
      return std::string();
    });
    run(out, "cylinder of a point: psi is an isomorphism", [&] {
      std::string d = equal(compose(c.psi, c.psi_inverse), LieMorphism::identity(c.auxiliary.alphabet(), n));
      return d.empty() ? equal(compose(c.psi_inverse, c.psi), LieMorphism::identity(c.cylinder.alphabet(), n)) : d;
    });
  }

  const int m = std::min(n, 4);
  DgLie L = model_of_simplex(2, m);
  CylinderTriple c = cylinder(L);
  const std::string at = " (Delta^2, N = " + std::to_string(m) + ")";
  const LieMorphism id = LieMorphism::identity(L.alphabet(), m);
  run(out, "Cyl is a valid presentation" + at, [&] { return valid(c.cylinder); });
  run(out, "lambda_0, lambda_1 and p are chain maps" + at, [&] {
    for (const auto* f : {&c.lambda0, &c.lambda1}) {
      std::string d = chain_map(*f, L, c.cylinder);
      if (!d.empty()) return d;
    }
    return chain_map(c.projection, c.cylinder, L);
  });
  run(out, "p lambda_0 = p lambda_1 = id" + at, [&] {
    std::string d = equal(compose(c.projection, c.lambda0), id);
    return d.empty() ? equal(compose(c.projection, c.lambda1), id) : d;
  });
  run(out, "psi: Cyl -> auxiliary is a chain isomorphism" + at, [&] {
    std::string d = chain_map(c.psi, c.cylinder, c.auxiliary);
    if (d.empty()) d = equal(compose(c.psi_inverse, c.psi), LieMorphism::identity(c.cylinder.alphabet(), m));
    return d;
  });
  run(out, "D(v~) - (v^ - v) lies in the ideal of generators of lower degree, |v| >= 1" + at, [&] {
    const AlphabetPtr& alpha = c.cylinder.alphabet();
    for (const auto& g : L.alphabet()->generators()) {
      if (g.degree < 1) continue;
      std::vector<int> lower;
      for (int i = 0; i < alpha->size(); ++i) {
        std::string base = (*alpha)[i].name;
        if (base.back() == '^' || base.back() == '~') base.pop_back();
        if (L.alphabet()->degree(L.alphabet()->index_of(base)) < g.degree) lower.push_back(i);
      }
      LieElement rest = c.cylinder.d_of(g.name + "~") - (c.cylinder.gen(g.name + "^") - c.cylinder.gen(g.name));
      if (!in_generator_ideal(rest, lower)) return shorten(g.name + ": remainder " + rest.to_string());
    }
    return std::string();
  });
  return out;
}

Checks mc_suite(int n) {
  Checks out;
  DgLie I = ls_interval(n);
  const LieMorphism id = LieMorphism::identity(I.alphabet(), n);
  run(out, "left_to_right(id) is MC in L (x) Lambda(t,dt) with ends a, b", [&] {
    PolyElement g = left_to_right(id, I);
    if (!tensor_lambda(I).is_mc(g)) return std::string("nonzero MC residual");
    std::string d = equal(g.at_zero(), I.gen("a"), "t = 0");
    return d.empty() ? equal(g.at_one(), I.gen("b"), "t = 1") : d;
  });
  run(out, "right_to_left(left_to_right(id)) = id", [&] {
    LieMorphism back = right_to_left(left_to_right(id, I), I);
    std::string d = chain_map(back, I, I);
    return d.empty() ? equal(back, id) : d;
  });
  {
    DgLie T = model_of_simplex(2, n);
    LieMorphism e01 = path(I, T, T.gen("a0"), T.gen("a1"), T.gen("a01"));
    LieMorphism e12 = path(I, T, T.gen("a1"), T.gen("a2"), T.gen("a12"));
    LieMorphism f = compose_paths(e01, e12);
    run(out, "round trip of the glued path a0 -> a1 -> a2 in Delta^2", [&] {
      PolyElement g = left_to_right(f, T);
      if (!tensor_lambda(T).is_mc(g)) return std::string("nonzero MC residual");
      LieMorphism back = right_to_left(g, T);
      std::string d = chain_map(back, I, T);
      return d.empty() ? equal(back, f) : d;
    });
  }
  run(out, "constant MC element gives the constant path", [&] {
    DgLie P = mc_point(n);
    LieMorphism constant = right_to_left(PolyElement::constant(P.gen("a")), P);
    std::string d = equal(constant.image("x"), P.zero(), "x");
    return d.empty() ? equal(constant.image("b"), P.gen("a"), "b") : d;
  });
  run(out, "mc_reduce on L(a) + L(u, su): y0 in L(a) with an MC gauge from y0 to y", [&] {
    Extension ext = acyclic_extension(mc_point(n), {{"u", -1}});
    const DgLie& B = ext.algebra;
    LsIsomorphism iso = ls_isomorphism(n);
    LieElement y = LieMorphism::by_name(iso.acyclic.alphabet(), B.alphabet(), n).apply(iso.psi.image("b"));
    if (!is_mc(B, y)) return std::string("test element is not MC");
    McReduction r = mc_reduce(B, {"u"}, y);
    if (!tensor_lambda(B).is_mc(r.gauge)) return std::string("gauge has nonzero MC residual");
    std::string d = equal(r.y0, B.gen("a"), "y0");
    if (d.empty()) d = equal(r.gauge.at_zero(), r.y0, "t = 0");
    if (d.empty()) d = equal(r.gauge.at_one(), y, "t = 1");
    return d;
  });
  return out;
}

std::vector<Simplex> facets_of(int n) {
  std::vector<Simplex> out;
  for (int omit = 0; omit <= n; ++omit) {
    Simplex face;
    for (int v = 0; v <= n; ++v) {
      if (v != omit) face.push_back(v);
    }
    out.push_back(face);
  }
  return out;
}

Checks models_suite(int n) {
  Checks out;
  run(out, "Delta^2: d a012 + [a0, a012] = a01 * a12 * a02^-1", [&] {
    DgLie L = model_of_simplex(2, n);
    return equal(L.d_of("a012") + bracket(L.gen("a0"), L.gen("a012")),
                 bch(L.gen("a01"), bch(L.gen("a12"), -L.gen("a02"))));
  });
  const int m = std::min(n, 5);
  auto add = [&](const std::string& prefix, Checks checks) {
    for (Check& c : checks) {
      c.name = prefix + ": " + c.name;
      out.push_back(std::move(c));
    }
  };
  std::vector<DgLie> simplices;
  for (int k = 0; k <= 3; ++k) simplices.push_back(model_of_simplex(k, m));
  for (int k = 0; k <= 3; ++k) {
    const std::string prefix = "model_of_simplex(" + std::to_string(k) + ")";
    add(prefix, simplex_characterization(simplices[k], k));
    if (k == 0) continue;
    run(out, prefix + ": facets restrict to model_of_simplex(" + std::to_string(k - 1) + ")", [&] {
      for (const Simplex& face : facets_of(k)) {
        std::string d = restriction_defect(simplices[k], face, simplices[k - 1]);
        if (!d.empty()) return d;
      }
      return std::string();
    });
  }
  std::vector<DgLie> cones;
  for (int k = 1; k <= 3; ++k) {
    cones.push_back(cone_dgl(simplices[k - 1]));
    const DgLie& C = cones.back();
    const std::string prefix = "cone_dgl(model_of_simplex(" + std::to_string(k - 1) + "))";
    add(prefix, simplex_characterization(C, k));
    run(out, prefix + ": the base facet is model_of_simplex(" + std::to_string(k - 1) + ")", [&] {
      return restriction_defect(C, facets_of(k).back(), simplices[k - 1]);
    });
    if (k == 1) continue;
    run(out, prefix + ": facets through the apex are cones on the faces of the base", [&] {
      const std::vector<Simplex> facets = facets_of(k);
      for (int omit = 0; omit < k; ++omit) {
        std::string d = restriction_defect(C, facets[omit], cones[k - 2]);
        if (!d.empty()) return "facet without " + std::to_string(omit) + ": " + d;
      }
      return std::string();
    });
  }
  run(out, "Klein bottle u v u v^-1: dy = 2u + [v,u] + (length >= 3)", [&] {
    DgLie K = surface_model({{"u", "v"}, {{0, 1}, {1, 1}, {0, 1}, {1, -1}}, "y"}, n);
    const LieElement dy = K.d_of("y");
    std::string d = equal(dy.length_slice(1), Rational(2) * K.gen("u"), "length 1");
    return d.empty() ? equal(dy.length_slice(2), bracket(K.gen("v"), K.gen("u")), "length 2") : d;
  });
  return out;
}

Checks algebra_suite(int n, unsigned seed) {
  Checks out;
  std::mt19937 rng(seed);
  const std::vector<GradedGenerator> gens{{"a", -1}, {"u", 1}, {"x", 0}, {"y", 0}};
  const AlphabetPtr alpha = make_alphabet(gens);
  const int degrees[] = {-1, 0, 1};
  auto degree = [&] { return degrees[rng() % 3]; };
  const int trials = 12;

  run(out, "graded antisymmetry [x,y] = -(-1)^{|x||y|}[y,x]", [&] {
    for (int t = 0; t < trials; ++t) {
      const int p = degree(), q = degree();
      LieElement x = random_lie(rng, alpha, n, p, 2), y = random_lie(rng, alpha, n, q, 2);
      std::string d = equal(bracket(x, y), Rational(-sign_power(p * q)) * bracket(y, x));
      if (!d.empty()) return d;
    }
    return std::string();
  });
  run(out, "graded Jacobi [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]", [&] {
    for (int t = 0; t < trials; ++t) {
      const int p = degree(), q = degree(), r = degree();
      LieElement x = random_lie(rng, alpha, n, p, 2), y = random_lie(rng, alpha, n, q, 2);
      LieElement z = random_lie(rng, alpha, n, r, 1);
      std::string d = equal(bracket(x, bracket(y, z)),
                            bracket(bracket(x, y), z) + Rational(sign_power(p * q)) * bracket(y, bracket(x, z)));
      if (!d.empty()) return d;
    }
    return std::string();
  });
  run(out, "BCH unit and inverse: x * 0 = 0 * x = x, x * (-x) = 0", [&] {
    const LieElement zero(alpha, n);
    for (int t = 0; t < trials; ++t) {
      LieElement x = random_lie(rng, alpha, n, 0, 2);
      std::string d = equal(bch(x, zero), x);
      if (d.empty()) d = equal(bch(zero, x), x);
      if (d.empty()) d = equal(bch(x, -x), zero);
      if (!d.empty()) return d;
    }
    return std::string();
  });
  run(out, "BCH associativity (x * y) * z = x * (y * z), and x * y is Lie", [&] {
    for (int t = 0; t < 3; ++t) {
      LieElement x = random_lie(rng, alpha, n, 0, 2), y = random_lie(rng, alpha, n, 0, 2);
      LieElement z = random_lie(rng, alpha, n, 0, 2);
      const LieElement xy = bch(x, y);
      if (!is_lie(xy)) return std::string("bch(x, y) is not primitive");
      std::string d = equal(bch(xy, z), bch(x, bch(y, z)));
      if (!d.empty()) return d;
    }
    return std::string();
  });
  run(out, "Dynkin primitivity of all constructed differential values", [&] {
    const int m = std::min(n, 4);
    std::vector<std::pair<std::string, std::function<DgLie()>>> builders{
        {"ls_interval", [&] { return ls_interval(n); }},
        {"model_of_simplex(3)", [&] { return model_of_simplex(3, m); }},
        {"model_of_complex(boundary of Delta^3)", [&] { return model_of_complex(simplex_boundary(3), m); }},
        {"cylinder(Delta^1)", [&] { return cylinder(model_of_simplex(1, m)).cylinder; }},
        {"cone_dgl(Delta^1)", [&] { return cone_dgl(model_of_simplex(1, m)); }},
        {"Klein bottle", [&] { return surface_model({{"u", "v"}, {{0, 1}, {1, 1}, {0, 1}, {1, -1}}, "y"}, n); }},
        {"perturb(Delta^2, a0)", [&] {
           DgLie T = model_of_simplex(2, m);
           return perturb(T, T.gen("a0"), "a0");
         }},
    };
    for (const auto& [what, build] : builders) {
      std::string d = all_lie(build(), what);
      if (!d.empty()) return d;
    }
    return std::string();
  });
  return out;
}

}  // namespace

bool SuiteReport::ok() const {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ls", "cylinder", "mc", "models", "algebra"};
  return names;
}

SuiteReport run_suite(const std::string& name, int truncation, unsigned seed) {
  if (truncation < 2) throw InputError("verification needs truncation at least 2");
  SuiteReport report{name, truncation, {}};
  auto add = [&](const std::string& suite) {
    Checks checks;
    if (suite == "ls") checks = ls_suite(truncation);
    if (suite == "cylinder") checks = cylinder_suite(truncation);
    if (suite == "mc") checks = mc_suite(truncation);
    if (suite == "models") checks = models_suite(truncation);
    if (suite == "algebra") checks = algebra_suite(truncation, seed);
    for (Check& c : checks) {
      if (name == "all") c.name = suite + ": " + c.name;
      report.checks.push_back(std::move(c));
    }
  };
  if (name == "all") {
    for (const auto& suite : suite_names()) add(suite);
    return report;
  }
  for (const auto& suite : suite_names()) {
    if (suite == name) {
      add(suite);
      return report;
    }
  }
  throw InputError("unknown suite '" + name + "' (expected ls, cylinder, mc, models, algebra or all)");
}

std::vector<Check> simplex_characterization(const DgLie& L, int n) {
  Checks out;
  run(out, "d^2 = 0", [&] { return valid(L); });
  run(out, "differential values are Lie elements", [&] { return all_lie(L, "model"); });
  run(out, "vertices are Maurer-Cartan", [&] {
    for (const auto& [name, s] : L.simplex_labels()) {
      if (s.size() == 1 && !is_mc(L, L.gen(name))) return name + " is not MC";
    }
    return std::string();
  });
  run(out, "linear part = desuspended boundary", [&] {
    for (const auto& [name, s] : L.simplex_labels()) {
      std::string d = equal(L.d_of(name).length_slice(1), desuspended_boundary(L, s), "d" + name);
      if (!d.empty()) return d;
    }
    return std::string();
  });
  run(out, "every face generates a sub-cDGL", [&] {
    for (const auto& [name, s] : L.simplex_labels()) {
      std::vector<bool> inside(L.alphabet()->size(), false);
      for (const auto& [other, t] : L.simplex_labels()) {
        inside[L.alphabet()->index_of(other)] = std::includes(s.begin(), s.end(), t.begin(), t.end());
      }
      for (const auto& [other, t] : L.simplex_labels()) {
        if (!inside[L.alphabet()->index_of(other)]) continue;
        for (const auto& [w, c] : L.d_of(other).terms()) {
          for (int i = 0; i < w.size(); ++i) {
            if (!inside[w[i]]) return "d" + other + " leaves the face " + name;
          }
        }
      }
    }
    return std::string();
  });
  return out;
}

std::string restriction_defect(const DgLie& L, const Simplex& face, const DgLie& face_model) {
  std::map<std::string, LieElement> images;
  for (const auto& [name, s] : face_model.simplex_labels()) {
    Simplex t;
    for (int v : s) t.push_back(face[v]);
    images.emplace(name, L.gen(simplex_name(t)));
  }
  LieMorphism inclusion = LieMorphism::from_named(face_model.alphabet(), L.alphabet(), L.truncation(), images);
  for (const auto& [name, s] : face_model.simplex_labels()) {
    std::string d = equal(inclusion.apply(face_model.d_of(name)), L.d(inclusion.image(name)), "d" + name);
    if (!d.empty()) return d;
  }
  return "";
}

LieElement random_lie(std::mt19937& rng, const AlphabetPtr& alphabet, int truncation, int degree, int max_length) {
  LieBasis basis(alphabet, truncation);
  LieElement x(alphabet, truncation);
  for (int k = 1; k <= std::min(max_length, truncation); ++k) {
    for (const Word& w : basis.words(k, degree)) {
      const int c = static_cast<int>(rng() % 5) - 2;
      if (c != 0) x += Rational(c) * basis.element(w);
    }
  }
  return x;
}

}  // namespace cdgl
