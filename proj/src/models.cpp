#include "cdgl/models.hpp"

#include "cdgl/errors.hpp"
#include "cdgl/homology.hpp"
#include "cdgl/series.hpp"

namespace cdgl {

std::string simplex_name(const Simplex& s) {
  bool wide = false;
  for (int v : s) wide = wide || v >= 10;
  std::string name = "a";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (wide && i > 0) name += "_";
    name += std::to_string(s[i]);
  }
  return name;
}

DgLie ls_interval(int truncation) {
  std::vector<GradedGenerator> gens{{"a", -1}, {"b", -1}, {"x", 0}};
  AlphabetPtr alphabet = make_alphabet(gens);
  const int n = truncation;
  LieElement a = LieElement::generator(alphabet, n, "a");
  LieElement b = LieElement::generator(alphabet, n, "b");
  LieElement x = LieElement::generator(alphabet, n, "x");
  std::map<std::string, LieElement> d;
  d.emplace("a", Rational(-1, 2) * bracket(a, a));
  d.emplace("b", Rational(-1, 2) * bracket(b, b));
  d.emplace("x", bracket(x, b) + ad_series(z_over_exp_minus_one(n), x, b - a));
  return DgLie::from_named(gens, n, d);
}

AlphabetPtr model_alphabet(const SimplicialComplex& X) {
  std::vector<GradedGenerator> gens;
  for (const auto& s : X.simplices()) gens.push_back({simplex_name(s), static_cast<int>(s.size()) - 2});
  return make_alphabet(gens);
}

namespace {

// Relabels an element of ℒ_{Δ^p} along the face σ of a complex with the
// given alphabet.
LieMorphism face_map(const AlphabetPtr& simplex_alphabet, const SimplicialComplex& simplex, const Simplex& sigma,
                     const AlphabetPtr& target, int truncation) {
  std::map<std::string, LieElement> images;
  for (const auto& tau : simplex.simplices()) {
    Simplex image;
    for (int v : tau) image.push_back(sigma.at(v));
    images.emplace(simplex_name(tau), LieElement::generator(target, truncation, simplex_name(image)));
  }
  return LieMorphism::from_named(simplex_alphabet, target, truncation, images);
}

std::map<std::string, std::vector<int>> labels_of(const SimplicialComplex& X) {
  std::map<std::string, std::vector<int>> labels;
  for (const auto& s : X.simplices()) labels[simplex_name(s)] = s;
  return labels;
}

}  // namespace

const LieElement& ModelBuilder::top_differential(int p) {
  auto it = tops_.find(p);
  if (it != tops_.end()) return it->second;
  if (p < 0) throw AlgebraError("negative simplex dimension");
  const int n = truncation_;
  SimplicialComplex delta = standard_simplex(p);
  AlphabetPtr alphabet = model_alphabet(delta);
  auto gen = [&](const std::string& name) { return LieElement::generator(alphabet, n, name); };
  LieElement top(alphabet, n);
  if (p == 0) {
    top = Rational(-1, 2) * bracket(gen("a0"), gen("a0"));
  } else if (p == 1) {
    LieElement a = gen("a0"), b = gen("a1"), x = gen("a01");
    top = bracket(x, b) + ad_series(z_over_exp_minus_one(n), x, b - a);
  } else if (p == 2) {
    top = bch(gen("a01"), bch(gen("a12"), -gen("a02"))) - bracket(gen("a0"), gen("a012"));
  } else {
    // ∂_{a0}(a_{0..p}) = (-1)^p (a_{0..p-1} - y) with ∂_{a0} y = ∂_{a0}(a_{0..p-1})
    // solved in the horn.
    Simplex front(p);
    for (int i = 0; i < p; ++i) front[i] = i;
    const std::string front_name = simplex_name(front);
    SimplicialComplex face = standard_simplex(p - 1);
    DgLie face_model = model(face);
    LieElement a0_face = face_model.gen("a0");
    LieElement x = face_model.d_of(front_name) + bracket(a0_face, face_model.gen(front_name));

    SimplicialComplex h = horn(p);
    DgLie horn_model = perturb(model(h), LieElement::generator(model_alphabet(h), n, "a0"), "a0");
    LieMorphism into_horn = LieMorphism::by_name(face_model.alphabet(), horn_model.alphabet(), n);
    for (const auto& [w, c] : x.terms()) {
      for (int i = 0; i < w.size(); ++i) {
        if ((*face_model.alphabet())[w[i]].name == front_name) {
          throw AlgebraError("boundary of the front face escapes the horn");
        }
      }
    }
    LieElement x_horn = into_horn.apply(x);
    LieElement y = solve_boundary_by_length(horn_model, x_horn, p - 2, "model_of_simplex");
    LieMorphism horn_into_simplex = LieMorphism::by_name(horn_model.alphabet(), alphabet, n);
    Rational sign = (p % 2 == 0) ? 1 : -1;
    Simplex all(p + 1);
    for (int i = 0; i <= p; ++i) all[i] = i;
    LieElement omega = sign * (gen(front_name) - horn_into_simplex.apply(y));
    top = omega - bracket(gen("a0"), gen(simplex_name(all)));
  }
  return tops_.emplace(p, std::move(top)).first->second;
}

DgLie ModelBuilder::model(const SimplicialComplex& X) {
  AlphabetPtr alphabet = model_alphabet(X);
  const int n = truncation_;
  std::vector<LieElement> images(alphabet->size(), LieElement(alphabet, n));
  std::map<int, std::pair<SimplicialComplex, AlphabetPtr>> simplices;
  for (const auto& sigma : X.simplices()) {
    const int p = static_cast<int>(sigma.size()) - 1;
    auto it = simplices.find(p);
    if (it == simplices.end()) {
      SimplicialComplex delta = standard_simplex(p);
      it = simplices.emplace(p, std::make_pair(delta, model_alphabet(delta))).first;
    }
    const LieElement& top = top_differential(p);
    LieMorphism relabel = face_map(it->second.second, it->second.first, sigma, alphabet, n);
    images[alphabet->index_of(simplex_name(sigma))] = relabel.apply(top);
  }
  DgLie L(alphabet, n, std::move(images));
  L.set_simplex_labels(labels_of(X));
  return L;
}

DgLie model_of_simplex(int n, int truncation) {
  ModelBuilder builder(truncation);
  return builder.model(standard_simplex(n));
}

DgLie model_of_complex(const SimplicialComplex& X, int truncation) {
  ModelBuilder builder(truncation);
  return builder.model(X);
}

LieMorphism model_of_map(const SimplicialMap& f, const SimplicialComplex& X, const DgLie& LX,
                         const SimplicialComplex& Y, const DgLie& LY) {
  if (!is_simplicial(f, X, Y)) throw AlgebraError("vertex map is not a simplicial map");
  std::map<std::string, LieElement> images;
  for (const auto& sigma : X.simplices()) {
    for (std::size_t i = 1; i < sigma.size(); ++i) {
      if (f.vertex_map[sigma[i]] < f.vertex_map[sigma[i - 1]]) {
        throw AlgebraError("simplicial map is not order preserving on " + simplex_name(sigma));
      }
    }
    if (f.injective_on(sigma)) images.emplace(simplex_name(sigma), LY.gen(simplex_name(f.image(sigma))));
  }
  LieMorphism m = LieMorphism::from_named(LX.alphabet(), LY.alphabet(), LX.truncation(), images);
  auto defects = chain_map_defects(m, LX, LY);
  if (!defects.empty()) {
    throw AlgebraError("induced morphism is not a chain map on " + defects.front().first);
  }
  return m;
}

DgLie surface_model(const SurfaceSpec& spec, int truncation) {
  std::vector<GradedGenerator> gens;
  for (const auto& g : spec.generators) gens.push_back({g, 0});
  gens.push_back({spec.cell, 1});
  AlphabetPtr alphabet = make_alphabet(gens);
  LieElement zero(alphabet, truncation);
  std::vector<LieElement> factors;
  for (const auto& [index, exponent] : spec.word) {
    if (index < 0 || index >= static_cast<int>(spec.generators.size())) {
      throw InputError("attaching word refers to generator " + std::to_string(index) + " which does not exist");
    }
    if (exponent != 1 && exponent != -1) throw InputError("attaching word exponents must be 1 or -1");
    LieElement x = LieElement::generator(alphabet, truncation, spec.generators[index]);
    factors.push_back(exponent == 1 ? x : -x);
  }
  std::map<std::string, LieElement> d;
  d.emplace(spec.cell, bch_all(factors, zero));
  return DgLie::from_named(gens, truncation, d);
}

LieMorphism compose_paths(const LieMorphism& p1, const LieMorphism& p2) {
  if (!same_alphabet(p1.source(), p2.source()) || !same_alphabet(p1.target(), p2.target())) {
    throw AlgebraError("compose_paths: paths between different algebras");
  }
  if (p1.image("b") != p2.image("a")) throw AlgebraError("compose_paths: end of the first path is not the start of the second");
  std::map<std::string, LieElement> images;
  images.emplace("a", p1.image("a"));
  images.emplace("b", p2.image("b"));
  images.emplace("x", bch(p1.image("x"), p2.image("x")));
  return LieMorphism::from_named(p1.source(), p1.target(), p1.truncation(), images);
}

}  // namespace cdgl
