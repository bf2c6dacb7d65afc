#include "cdgl/morphism.hpp"

#include <algorithm>

#include "cdgl/errors.hpp"
#include "cdgl/linalg.hpp"

namespace cdgl {

namespace {

void check_image(const AlphabetPtr& target, int truncation, const LieElement& image, int expected_degree,
                 const std::string& generator) {
  if (image.is_zero()) return;
  if (image.truncation() != truncation || !same_alphabet(image.alphabet(), target)) {
    throw AlgebraError("image of '" + generator + "' lives in a different algebra");
  }
  auto d = image.degree();
  if (!d || *d != expected_degree) {
    throw AlgebraError("image of '" + generator + "' has the wrong degree (expected " +
                       std::to_string(expected_degree) + ")");
  }
}

LieElement normalized_zero(const AlphabetPtr& alphabet, int truncation, const LieElement& x) {
  return x.is_zero() ? LieElement(alphabet, truncation) : x;
}

bool pure_lex_less(const Term& a, const Term& b) {
  const int n = std::min(a.first.size(), b.first.size());
  for (int i = 0; i < n; ++i) {
    if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
  }
  return a.first.size() < b.first.size();
}

// Evaluates f on terms[lo, hi), all sharing their first `depth` letters, with
// the shared prefix removed; keeps words of length <= budget.
LieElement evaluate_suffixes(const LieMorphism& f, const std::vector<Term>& terms, std::size_t lo, std::size_t hi,
                             int depth, int budget) {
  ElementBuilder out(f.target(), f.truncation());
  std::size_t i = lo;
  while (i < hi && terms[i].first.size() == depth) {
    out.add(Word(), terms[i].second);
    ++i;
  }
  while (i < hi) {
    const int g = terms[i].first[depth];
    std::size_t j = i;
    while (j < hi && terms[j].first[depth] == g) ++j;
    const LieElement& img = f.image(g);
    if (!img.is_zero()) {
      const int rest = budget - img.min_length();
      if (rest >= 0) {
        LieElement tail = evaluate_suffixes(f, terms, i, j, depth + 1, rest);
        out.add_product(img, tail, 1, budget);
      }
    }
    i = j;
  }
  return out.build();
}

}  // namespace

LieMorphism::LieMorphism(AlphabetPtr source, AlphabetPtr target, int truncation, std::vector<LieElement> images)
    : source_(std::move(source)), target_(std::move(target)), truncation_(truncation), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_->size()) throw AlgebraError("morphism needs one image per generator");
  for (int i = 0; i < source_->size(); ++i) {
    check_image(target_, truncation_, images_[i], source_->degree(i), (*source_)[i].name);
    images_[i] = normalized_zero(target_, truncation_, images_[i]);
  }
}

LieMorphism LieMorphism::identity(const AlphabetPtr& alphabet, int truncation) {
  std::vector<LieElement> images;
  for (int i = 0; i < alphabet->size(); ++i) images.push_back(LieElement::generator(alphabet, truncation, i));
  return LieMorphism(alphabet, alphabet, truncation, std::move(images));
}

LieMorphism LieMorphism::from_named(const AlphabetPtr& source, const AlphabetPtr& target, int truncation,
                                    const std::map<std::string, LieElement>& images) {
  std::vector<LieElement> list(source->size(), LieElement(target, truncation));
  for (const auto& [name, value] : images) list[source->index_of(name)] = value;
  return LieMorphism(source, target, truncation, std::move(list));
}

LieMorphism LieMorphism::by_name(const AlphabetPtr& source, const AlphabetPtr& target, int truncation) {
  std::vector<LieElement> list;
  for (const auto& g : source->generators()) {
    int j = target->find(g.name);
    list.push_back(j < 0 ? LieElement(target, truncation) : LieElement::generator(target, truncation, j));
  }
  return LieMorphism(source, target, truncation, std::move(list));
}

LieElement LieMorphism::apply(const LieElement& x) const {
  if (x.is_zero()) return LieElement(target_, truncation_);
  if (!same_alphabet(x.alphabet(), source_)) throw AlgebraError("element is not over the morphism's source");
  if (x.truncation() != truncation_) throw AlgebraError("element truncation differs from the morphism's");
  std::vector<Term> terms = x.terms();
  std::sort(terms.begin(), terms.end(), pure_lex_less);
  return evaluate_suffixes(*this, terms, 0, terms.size(), 0, truncation_);
}

bool operator==(const LieMorphism& a, const LieMorphism& b) {
  return same_alphabet(a.source_, b.source_) && same_alphabet(a.target_, b.target_) &&
         a.truncation_ == b.truncation_ && a.images_ == b.images_;
}

LieMorphism compose(const LieMorphism& f, const LieMorphism& g) {
  if (!same_alphabet(g.target(), f.source())) throw AlgebraError("cannot compose: target/source mismatch");
  std::vector<LieElement> images;
  for (const auto& img : g.images()) images.push_back(f.apply(img));
  return LieMorphism(g.source(), f.target(), f.truncation(), std::move(images));
}

LieMorphism invert_morphism(const LieMorphism& f) {
  const AlphabetPtr& S = f.source();
  const AlphabetPtr& T = f.target();
  const int n = f.truncation();
  if (S->size() != T->size()) throw AlgebraError("morphism between different numbers of generators is not invertible");

  // Linear part, inverted degree by degree.
  std::map<int, std::vector<int>> src_by_degree, tgt_by_degree;
  for (int i = 0; i < S->size(); ++i) src_by_degree[S->degree(i)].push_back(i);
  for (int j = 0; j < T->size(); ++j) tgt_by_degree[T->degree(j)].push_back(j);
  std::vector<LieElement> linear_inverse(T->size(), LieElement(S, n));
  for (const auto& [deg, tgts] : tgt_by_degree) {
    auto it = src_by_degree.find(deg);
    if (it == src_by_degree.end() || it->second.size() != tgts.size()) {
      throw AlgebraError("linear part is not invertible in degree " + std::to_string(deg));
    }
    const auto& srcs = it->second;
    SparseMatrix m(tgts.size(), srcs.size());
    for (std::size_t c = 0; c < srcs.size(); ++c) {
      for (std::size_t r = 0; r < tgts.size(); ++r) {
        m.set(r, c, f.image(srcs[c]).coefficient(Word::letter(tgts[r])));
      }
    }
    if (rank(m) != tgts.size()) throw AlgebraError("linear part is not invertible in degree " + std::to_string(deg));
    for (std::size_t r = 0; r < tgts.size(); ++r) {
      std::vector<Rational> e(tgts.size());
      e[r] = 1;
      auto x = solve(m, e);
      ElementBuilder b(S, n);
      for (std::size_t c = 0; c < srcs.size(); ++c) b.add(Word::letter(srcs[c]), (*x)[c]);
      linear_inverse[tgts[r]] = b.build();
    }
  }
  LieMorphism g1(T, S, n, linear_inverse);

  std::vector<LieElement> g = linear_inverse;
  for (int iteration = 0; iteration <= n; ++iteration) {
    bool exact = true;
    std::vector<LieElement> next = g;
    for (int j = 0; j < T->size(); ++j) {
      LieElement error = f.apply(g[j]) - LieElement::generator(T, n, j);
      if (error.is_zero()) continue;
      exact = false;
      next[j] -= g1.apply(error);
    }
    if (exact) break;
    g = std::move(next);
  }
  LieMorphism inverse(T, S, n, std::move(g));
  if (!(compose(f, inverse) == LieMorphism::identity(T, n)) || !(compose(inverse, f) == LieMorphism::identity(S, n))) {
    throw SolveError("morphism inversion did not converge within the truncation");
  }
  return inverse;
}

LieDerivation::LieDerivation(AlphabetPtr alphabet, int truncation, int degree, std::vector<LieElement> images)
    : alphabet_(std::move(alphabet)), truncation_(truncation), degree_(degree), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != alphabet_->size()) {
    throw AlgebraError("derivation needs one image per generator");
  }
  for (int i = 0; i < alphabet_->size(); ++i) {
    check_image(alphabet_, truncation_, images_[i], alphabet_->degree(i) + degree_, (*alphabet_)[i].name);
    images_[i] = normalized_zero(alphabet_, truncation_, images_[i]);
  }
}

LieDerivation LieDerivation::zero(const AlphabetPtr& alphabet, int truncation, int degree) {
  return LieDerivation(alphabet, truncation, degree, std::vector<LieElement>(alphabet->size(), LieElement(alphabet, truncation)));
}

LieDerivation LieDerivation::from_named(const AlphabetPtr& alphabet, int truncation, int degree,
                                        const std::map<std::string, LieElement>& images) {
  std::vector<LieElement> list(alphabet->size(), LieElement(alphabet, truncation));
  for (const auto& [name, value] : images) list[alphabet->index_of(name)] = value;
  return LieDerivation(alphabet, truncation, degree, std::move(list));
}

LieElement LieDerivation::apply(const LieElement& x) const {
  if (x.is_zero()) return LieElement(alphabet_, truncation_);
  if (!same_alphabet(x.alphabet(), alphabet_)) throw AlgebraError("element is not over the derivation's generators");
  if (x.truncation() != truncation_) throw AlgebraError("element truncation differs from the derivation's");
  const Alphabet& alpha = *alphabet_;
  ElementBuilder out(alphabet_, truncation_);
  const bool odd = degree_ % 2 != 0;
  for (const auto& [w, c] : x.terms()) {
    int prefix_degree = 0;
    for (int i = 0; i < w.size(); ++i) {
      const LieElement& img = images_[w[i]];
      const int room = truncation_ - (w.size() - 1);
      if (!img.is_zero() && img.min_length() <= room) {
        Word prefix = w.prefix(i);
        Word suffix = w.suffix_from(i + 1);
        const Rational coeff = (odd && prefix_degree % 2 != 0) ? Rational(-c) : c;
        for (const auto& [u, a] : img.terms()) {
          if (u.size() > room) break;
          out.add(prefix.concat(u).concat(suffix), coeff * a);
        }
      }
      prefix_degree += alpha.degree(w[i]);
    }
  }
  return out.build();
}

bool operator==(const LieDerivation& a, const LieDerivation& b) {
  return same_alphabet(a.alphabet_, b.alphabet_) && a.truncation_ == b.truncation_ && a.degree_ == b.degree_ &&
         a.images_ == b.images_;
}

LieDerivation commutator(const LieDerivation& d, const LieDerivation& e) {
  if (!same_alphabet(d.alphabet(), e.alphabet()) || d.truncation() != e.truncation()) {
    throw AlgebraError("derivations over different algebras");
  }
  const bool odd_pair = (d.degree() * e.degree()) % 2 != 0;
  std::vector<LieElement> images;
  for (int i = 0; i < d.alphabet()->size(); ++i) {
    LieElement de = d.apply(e.image(i));
    LieElement ed = e.apply(d.image(i));
    images.push_back(odd_pair ? de + ed : de - ed);
  }
  return LieDerivation(d.alphabet(), d.truncation(), d.degree() + e.degree(), std::move(images));
}

LieElement exp_derivation(const LieDerivation& d, const LieElement& x) {
  if (d.degree() != 0) throw AlgebraError("exponential of a derivation of nonzero degree");
  const int cap = d.truncation() * (d.alphabet()->size() + 1) + 1;
  LieElement result = x;
  LieElement term = x;
  for (int k = 1; k <= cap; ++k) {
    term = d.apply(term) * Rational(1, k);
    if (term.is_zero()) return result;
    result += term;
  }
  throw SolveError("exponential series of the derivation does not terminate within the truncation");
}

LieMorphism exp_derivation_morphism(const LieDerivation& d) {
  std::vector<LieElement> images;
  for (int i = 0; i < d.alphabet()->size(); ++i) {
    images.push_back(exp_derivation(d, LieElement::generator(d.alphabet(), d.truncation(), i)));
  }
  return LieMorphism(d.alphabet(), d.alphabet(), d.truncation(), std::move(images));
}

LieDerivation conjugate(const LieMorphism& g, const LieDerivation& d, const LieMorphism& f) {
  std::vector<LieElement> images;
  for (const auto& img : f.images()) images.push_back(g.apply(d.apply(img)));
  return LieDerivation(f.source(), f.truncation(), d.degree(), std::move(images));
}

}  // namespace cdgl
