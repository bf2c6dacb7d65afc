#include "cdgl/transfer.hpp"

#include <algorithm>
#include <map>

#include "cdgl/errors.hpp"
#include "cdgl/lie_basis.hpp"
#include "cdgl/linalg.hpp"

namespace cdgl {

namespace {

LieElement from_sparse(const SparseVector& v, const AlphabetPtr& alphabet, int truncation) {
  ElementBuilder b(alphabet, truncation);
  for (const auto& [i, c] : v) b.add(Word::letter(static_cast<int>(i)), c);
  return b.build();
}

SparseVector linear_image(const LieElement& x) {
  SparseVector v;
  const LieElement linear = x.length_slice(1);
  for (const auto& [w, c] : linear.terms()) v.emplace_back(w[0], c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

}  // namespace

HomologyTransfer::HomologyTransfer(const DgLie& L) : truncation_(L.truncation()) {
  const AlphabetPtr& alpha = L.alphabet();
  const int n = truncation_;
  std::map<int, std::vector<int>> by_degree;
  for (int i = 0; i < alpha->size(); ++i) by_degree[alpha->degree(i)].push_back(i);

  // Split V_k = C_k ⊕ B_k ⊕ Z_k with d_1 : C_k ≅ B_{k-1}.
  struct NewLetter {
    char kind;
    int degree;
    SparseVector vector;
    int partner = -1;  // index into the list of new letters
  };
  std::vector<NewLetter> letters;
  for (const auto& [k, gens] : by_degree) {
    Echelon images;
    for (int g : gens) {
      SparseVector v = linear_image(L.d_of((*alpha)[g].name));
      if (v.empty() || images.insert(v, 0)) continue;
      letters.push_back({'c', k, {{static_cast<std::size_t>(g), Rational(1)}}});
      letters.push_back({'b', k - 1, v});
      letters[letters.size() - 1].partner = static_cast<int>(letters.size()) - 2;
    }
  }
  for (const auto& [k, gens] : by_degree) {
    Echelon span;
    for (const auto& l : letters) {
      if (l.kind == 'b' && l.degree == k) span.insert(l.vector, 0);
    }
    SparseMatrix dk(alpha->size(), gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (const auto& [r, c] : linear_image(L.d_of((*alpha)[gens[j]].name))) dk.set(r, j, c);
    }
    for (const auto& kv : kernel_basis(dk)) {
      SparseVector v;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (kv[j] != 0) v.emplace_back(gens[j], kv[j]);
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      if (!span.insert(v, 0)) letters.push_back({'z', k, v});
    }
  }
  if (static_cast<int>(letters.size()) != alpha->size()) {
    throw AlgebraError("homology transfer: the linear part is not a differential");
  }

  // Names sort as b*, c*, z*, and by creation order within a kind.
  std::vector<GradedGenerator> gens;
  std::map<char, int> counters;
  std::vector<std::string> names;
  for (const auto& l : letters) {
    std::string digits = std::to_string(counters[l.kind]++);
    names.push_back(std::string(1, l.kind) + std::string(digits.size() < 4 ? 4 - digits.size() : 0, '0') + digits);
    gens.push_back({names.back(), l.degree});
  }
  AlphabetPtr split_alpha = make_alphabet(gens);

  std::vector<LieElement> images(letters.size(), LieElement(alpha, n));
  partner_.assign(letters.size(), -1);
  is_z_.assign(letters.size(), false);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const int index = split_alpha->index_of(names[i]);
    images[index] = from_sparse(letters[i].vector, alpha, n);
    if (letters[i].kind == 'b') partner_[index] = split_alpha->index_of(names[letters[i].partner]);
    if (letters[i].kind == 'z') is_z_[index] = true;
  }
  to_original_ = LieMorphism(split_alpha, alpha, n, images);
  LieMorphism from_original = invert_morphism(to_original_);
  split_ = DgLie(conjugate(from_original, L.differential(), to_original_));

  std::vector<LieElement> linear;
  for (const auto& img : split_.differential().images()) linear.push_back(img.length_slice(1));
  split_linear_ = DgLie(split_alpha, n, std::move(linear));

  std::vector<GradedGenerator> zs;
  for (int i = 0; i < split_alpha->size(); ++i) {
    if (is_z_[i]) zs.push_back((*split_alpha)[i]);
  }
  z_alphabet_ = make_alphabet(zs);
  to_z_ = LieMorphism::by_name(split_alpha, z_alphabet_, n);
  from_z_ = LieMorphism::by_name(z_alphabet_, split_alpha, n);
}

// Tensor-trick homotopy of d_1 followed by the Dynkin projection. On a word
// only the first non-z letter can be hit, and only when it is a b letter.
LieElement HomologyTransfer::homotopy(const LieElement& x) const {
  const Alphabet& alpha = *split_.alphabet();
  std::map<int, ElementBuilder> by_length;
  for (const auto& [w, c] : x.terms()) {
    int prefix_degree = 0;
    int i = 0;
    while (i < w.size() && is_z_[w[i]]) prefix_degree += alpha.degree(w[i++]);
    if (i == w.size() || partner_[w[i]] < 0) continue;
    std::vector<int> letters(w.size());
    for (int j = 0; j < w.size(); ++j) letters[j] = w[j];
    letters[i] = partner_[w[i]];
    auto [it, fresh] = by_length.try_emplace(w.size(), split_.alphabet(), truncation_);
    it->second.add(Word::from(letters), prefix_degree % 2 == 0 ? c : Rational(-c));
  }
  LieElement out = split_.zero();
  for (auto& [k, b] : by_length) out += dynkin(b.build()) * (Rational(1) / k);
  return out;
}

LieElement HomologyTransfer::perturbation(const LieElement& x) const { return split_.d(x) - split_linear_.d(x); }

// Σ_k (-D h)^k D x; D raises word length, so this terminates.
LieElement HomologyTransfer::series(const LieElement& x) const {
  LieElement term = perturbation(x);
  LieElement sum = term;
  while (!term.is_zero()) {
    term = -perturbation(homotopy(term));
    sum += term;
  }
  return sum;
}

LieElement HomologyTransfer::differential(const LieElement& x) const {
  return to_z_.apply(series(from_z_.apply(x)));
}

LieElement HomologyTransfer::include(const LieElement& x) const {
  LieElement y = from_z_.apply(x);
  return to_original_.apply(y - homotopy(series(y)));
}

}  // namespace cdgl
