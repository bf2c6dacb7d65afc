#include "cdgl/dgl.hpp"

#include <algorithm>
#include <set>

#include "cdgl/errors.hpp"
#include "cdgl/lie_basis.hpp"
#include "cdgl/linalg.hpp"

namespace cdgl {

DgLie::DgLie(AlphabetPtr alphabet, int truncation, std::vector<LieElement> differential)
    : d_(std::move(alphabet), truncation, -1, std::move(differential)) {}

DgLie::DgLie(LieDerivation differential) : d_(std::move(differential)) {
  if (d_.degree() != -1) throw AlgebraError("a differential has degree -1");
}

DgLie DgLie::from_named(const std::vector<GradedGenerator>& generators, int truncation,
                        const std::map<std::string, LieElement>& differential) {
  AlphabetPtr alphabet = make_alphabet(generators);
  std::vector<LieElement> images(alphabet->size(), LieElement(alphabet, truncation));
  for (const auto& [name, value] : differential) {
    if (value.is_zero()) continue;
    if (!same_alphabet(value.alphabet(), alphabet)) {
      throw AlgebraError("differential of '" + name + "' is over a different generator set");
    }
    images[alphabet->index_of(name)] = value;
  }
  return DgLie(alphabet, truncation, std::move(images));
}

DgLie DgLie::free(const std::vector<GradedGenerator>& generators, int truncation) {
  return from_named(generators, truncation, {});
}

LieElement DgLie::gen(const std::string& name) const { return LieElement::generator(alphabet(), truncation(), name); }

LieElement DgLie::zero() const { return LieElement(alphabet(), truncation()); }

DgLie DgLie::truncated_to(int n) const {
  std::vector<LieElement> images;
  for (const auto& img : d_.images()) images.push_back(img.truncated_to(n));
  DgLie out(alphabet(), n, std::move(images));
  out.perturbation_ = perturbation_;
  out.labels_ = labels_;
  return out;
}

ValidationReport validate(const DgLie& L) {
  ValidationReport report;
  const Alphabet& alpha = *L.alphabet();
  for (int i = 0; i < alpha.size(); ++i) {
    const LieElement& dv = L.differential().image(i);
    if (!dv.is_zero() && dv.terms().front().first.empty()) {
      report.violations.push_back("d(" + alpha[i].name + ") has a constant term");
    }
    if (!is_lie(dv)) report.violations.push_back("d(" + alpha[i].name + ") is not a Lie element");
    LieElement dd = L.d(dv);
    if (!dd.is_zero()) report.violations.push_back("d(d(" + alpha[i].name + ")) = " + dd.to_string());
  }
  report.ok = report.violations.empty();
  return report;
}

ValidationReport validate_presentation(const std::vector<GradedGenerator>& generators, int truncation,
                                       const std::map<std::string, LieElement>& differential) {
  try {
    return validate(DgLie::from_named(generators, truncation, differential));
  } catch (const AlgebraError& e) {
    return ValidationReport{false, {e.what()}};
  }
}

namespace {

void require_mc_degree(const LieElement& a) {
  if (a.is_zero()) return;
  auto d = a.degree();
  if (!d || *d != -1) throw AlgebraError("Maurer-Cartan elements have degree -1");
}

}  // namespace

LieElement mc_residual(const DgLie& L, const LieElement& a) {
  require_mc_degree(a);
  if (a.is_zero()) return L.zero();
  return L.d(a) + Rational(1, 2) * bracket(a, a);
}

bool is_mc(const DgLie& L, const LieElement& a) { return mc_residual(L, a).is_zero(); }

DgLie perturb(const DgLie& L, const LieElement& a, std::string tag) {
  if (!is_mc(L, a)) throw AlgebraError("perturbation by an element that is not Maurer-Cartan");
  std::vector<LieElement> images;
  for (int i = 0; i < L.alphabet()->size(); ++i) {
    LieElement v = LieElement::generator(L.alphabet(), L.truncation(), i);
    images.push_back(L.differential().image(i) + (a.is_zero() ? L.zero() : bracket(a, v)));
  }
  DgLie out(L.alphabet(), L.truncation(), std::move(images));
  out.set_simplex_labels(L.simplex_labels());
  if (tag.empty()) tag = a.to_string();
  out.set_perturbation(L.perturbation().empty() ? tag : L.perturbation() + "+" + tag);
  return out;
}

std::vector<std::pair<std::string, LieElement>> chain_map_defects(const LieMorphism& f, const DgLie& source,
                                                                   const DgLie& target) {
  if (!same_alphabet(f.source(), source.alphabet()) || !same_alphabet(f.target(), target.alphabet())) {
    throw AlgebraError("morphism does not match the given algebras");
  }
  std::vector<std::pair<std::string, LieElement>> out;
  for (int i = 0; i < source.alphabet()->size(); ++i) {
    LieElement defect = f.apply(source.differential().image(i)) - target.d(f.image(i));
    if (!defect.is_zero()) out.emplace_back((*source.alphabet())[i].name, std::move(defect));
  }
  return out;
}

bool is_chain_map(const LieMorphism& f, const DgLie& source, const DgLie& target) {
  return chain_map_defects(f, source, target).empty();
}

DgLie coproduct(const DgLie& a, const DgLie& b) {
  if (a.truncation() != b.truncation()) throw AlgebraError("coproduct of algebras with different truncations");
  std::vector<GradedGenerator> gens = a.alphabet()->generators();
  for (const auto& g : b.alphabet()->generators()) {
    if (a.alphabet()->find(g.name) >= 0) throw AlgebraError("generator name clash: '" + g.name + "'");
    gens.push_back(g);
  }
  AlphabetPtr alphabet = make_alphabet(gens);
  const int n = a.truncation();
  LieMorphism ia = LieMorphism::by_name(a.alphabet(), alphabet, n);
  LieMorphism ib = LieMorphism::by_name(b.alphabet(), alphabet, n);
  std::vector<LieElement> images(alphabet->size(), LieElement(alphabet, n));
  for (int i = 0; i < a.alphabet()->size(); ++i) {
    images[alphabet->index_of((*a.alphabet())[i].name)] = ia.apply(a.differential().image(i));
  }
  for (int i = 0; i < b.alphabet()->size(); ++i) {
    images[alphabet->index_of((*b.alphabet())[i].name)] = ib.apply(b.differential().image(i));
  }
  DgLie out(alphabet, n, std::move(images));
  auto labels = a.simplex_labels();
  for (const auto& [k, v] : b.simplex_labels()) labels[k] = v;
  out.set_simplex_labels(std::move(labels));
  return out;
}

Extension acyclic_extension(const DgLie& L, const std::vector<GradedGenerator>& U) {
  std::vector<GradedGenerator> gens;
  for (const auto& u : U) {
    gens.push_back(u);
    gens.push_back({"s" + u.name, u.degree + 1});
  }
  AlphabetPtr alphabet = make_alphabet(gens);
  std::vector<LieElement> images(alphabet->size(), LieElement(alphabet, L.truncation()));
  for (const auto& u : U) {
    images[alphabet->index_of("s" + u.name)] = LieElement::generator(alphabet, L.truncation(), u.name);
  }
  DgLie extension = coproduct(L, DgLie(alphabet, L.truncation(), std::move(images)));
  LieMorphism inclusion = LieMorphism::by_name(L.alphabet(), extension.alphabet(), L.truncation());
  return {std::move(extension), std::move(inclusion)};
}

bool in_generator_ideal(const LieElement& x, const std::vector<int>& letters) {
  std::vector<bool> marked(x.alphabet() ? x.alphabet()->size() : 0, false);
  for (int l : letters) marked.at(l) = true;
  for (const auto& [w, c] : x.terms()) {
    bool hit = false;
    for (int i = 0; i < w.size() && !hit; ++i) hit = marked[w[i]];
    if (!hit) return false;
  }
  return true;
}

Quotient quotient_by_generators(const DgLie& L, const std::vector<LieElement>& kill) {
  const AlphabetPtr& alphabet = L.alphabet();
  const int n = L.truncation();
  if (kill.empty()) {
    return {L, LieMorphism::identity(alphabet, n), LieMorphism::identity(alphabet, n), {}};
  }
  // One generator per killed element is replaced by it. The pivots are chosen
  // greedily, latest letter first, keeping the minor of linear parts on the
  // chosen letters invertible.
  Echelon ech;
  std::vector<int> pivots;
  std::set<int> used;
  for (std::size_t k = 0; k < kill.size(); ++k) {
    const LieElement& x = kill[k];
    if (x.is_zero() || !x.degree()) throw AlgebraError("killed elements must be nonzero and homogeneous");
    SparseVector lin;
    const LieElement linear = x.length_slice(1);
    for (const auto& [w, c] : linear.terms()) lin.emplace_back(w[0], c);
    if (ech.insert(lin, k)) throw AlgebraError("killed elements must have independent linear parts");
    int pivot = -1;
    for (auto it = lin.rbegin(); it != lin.rend(); ++it) {
      const std::size_t idx = it->first;
      if (!used.count(static_cast<int>(idx))) {
        // test invertibility of the minor on used ∪ {idx}
        std::vector<int> candidate(used.begin(), used.end());
        candidate.push_back(static_cast<int>(idx));
        SparseMatrix m(candidate.size(), k + 1);
        for (std::size_t j = 0; j <= k; ++j) {
          for (std::size_t r = 0; r < candidate.size(); ++r) {
            m.set(r, j, kill[j].coefficient(Word::letter(candidate[r])));
          }
        }
        if (rank(m) == k + 1) {
          pivot = static_cast<int>(idx);
          break;
        }
      }
    }
    if (pivot < 0) throw AlgebraError("could not choose a generator to replace by a killed element");
    used.insert(pivot);
    pivots.push_back(pivot);
  }

  std::vector<LieElement> phi_images;
  for (int i = 0; i < alphabet->size(); ++i) phi_images.push_back(LieElement::generator(alphabet, n, i));
  for (std::size_t k = 0; k < kill.size(); ++k) phi_images[pivots[k]] = kill[k];
  LieMorphism phi(alphabet, alphabet, n, std::move(phi_images));
  LieMorphism phi_inv = invert_morphism(phi);
  LieDerivation transported = conjugate(phi_inv, L.differential(), phi);

  for (int p : pivots) {
    if (!in_generator_ideal(transported.image(p), pivots)) {
      throw AlgebraError("the ideal generated by the killed elements is not closed under d (generator '" +
                         (*alphabet)[p].name + "')");
    }
  }

  std::vector<GradedGenerator> kept;
  std::vector<bool> killed(alphabet->size(), false);
  for (int p : pivots) killed[p] = true;
  for (int i = 0; i < alphabet->size(); ++i) {
    if (!killed[i]) kept.push_back((*alphabet)[i]);
  }
  AlphabetPtr q_alphabet = make_alphabet(kept);
  LieMorphism drop = LieMorphism::by_name(alphabet, q_alphabet, n);
  std::vector<LieElement> q_images;
  for (int i = 0; i < q_alphabet->size(); ++i) {
    q_images.push_back(drop.apply(transported.image(alphabet->index_of((*q_alphabet)[i].name))));
  }
  DgLie quotient(q_alphabet, n, std::move(q_images));
  std::map<std::string, std::vector<int>> labels;
  for (const auto& [name, label] : L.simplex_labels()) {
    if (q_alphabet->find(name) >= 0) labels[name] = label;
  }
  quotient.set_simplex_labels(std::move(labels));
  std::vector<std::string> names;
  for (int p : pivots) names.push_back((*alphabet)[p].name);
  return {std::move(quotient), compose(drop, phi_inv), std::move(phi), std::move(names)};
}

}  // namespace cdgl
