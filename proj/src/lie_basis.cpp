#include "cdgl/lie_basis.hpp"

#include <algorithm>

#include "cdgl/errors.hpp"
#include "cdgl/linalg.hpp"

namespace cdgl {

bool lex_less(const Word& a, const Word& b) {
  const int n = std::min(a.size(), b.size());
  for (int i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (int i = 1; i < w.size(); ++i) {
    if (!lex_less(w, w.suffix_from(i))) return false;
  }
  return true;
}

bool is_super_lyndon(const Word& w, const Alphabet& alphabet) {
  if (is_lyndon(w)) return true;
  if (w.size() % 2 != 0) return false;
  Word half = w.prefix(w.size() / 2);
  if (half != w.suffix_from(w.size() / 2)) return false;
  return is_lyndon(half) && alphabet.word_degree(half) % 2 != 0;
}

std::vector<Word> lyndon_words(int letters, int max_length) {
  std::vector<Word> out;
  if (letters <= 0 || max_length <= 0) return out;
  // Duval's generation in lexicographic order.
  std::vector<int> w{0};
  while (!w.empty()) {
    out.push_back(Word::from(w));
    const std::size_t m = w.size();
    while (w.size() < static_cast<std::size_t>(max_length)) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == letters - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::stable_sort(out.begin(), out.end());
  return out;
}

LieElement dynkin(const LieElement& x) {
  const Alphabet& alpha = *x.alphabet();
  ElementBuilder out(x.alphabet(), x.truncation());
  std::vector<std::pair<Word, int>> cur, next;
  for (const auto& [w, c] : x.terms()) {
    if (w.empty()) continue;
    cur.assign(1, {Word::letter(w[0]), 1});
    int prefix_degree = alpha.degree(w[0]);
    for (int i = 1; i < w.size(); ++i) {
      const int g = w[i];
      const int dg = alpha.degree(g);
      const int swap_sign = ((prefix_degree * dg) % 2 == 0) ? -1 : 1;
      Word letter = Word::letter(g);
      next.clear();
      for (const auto& [p, s] : cur) {
        next.emplace_back(p.concat(letter), s);
        next.emplace_back(letter.concat(p), swap_sign * s);
      }
      cur.swap(next);
      prefix_degree += dg;
    }
    for (const auto& [p, s] : cur) out.add(p, s == 1 ? c : Rational(-c));
  }
  return out.build();
}

bool is_lie(const LieElement& x) {
  if (x.is_zero()) return true;
  if (x.terms().front().first.empty()) return false;
  for (int k = 1; k <= x.truncation(); ++k) {
    if (dynkin(x.length_slice(k)) != Rational(k) * x.length_slice(k)) return false;
  }
  return true;
}

LieBasis::LieBasis(AlphabetPtr alphabet, int truncation) : alphabet_(std::move(alphabet)), truncation_(truncation) {}

void LieBasis::ensure_words() {
  if (words_ready_) return;
  words_ready_ = true;
  for (const Word& w : lyndon_words(alphabet_->size(), truncation_)) {
    const int d = alphabet_->word_degree(w);
    by_slice_[{w.size(), d}].push_back(w);
    if (d % 2 != 0 && 2 * w.size() <= truncation_) by_slice_[{2 * w.size(), 2 * d}].push_back(w.repeated_twice());
  }
  for (auto& [key, list] : by_slice_) std::sort(list.begin(), list.end());
}

const std::vector<Word>& LieBasis::words(int length, int degree) {
  ensure_words();
  static const std::vector<Word> empty;
  auto it = by_slice_.find({length, degree});
  return it == by_slice_.end() ? empty : it->second;
}

std::vector<Word> LieBasis::words_of_degree(int degree) {
  std::vector<Word> out;
  for (int k = 1; k <= truncation_; ++k) {
    const auto& ws = words(k, degree);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

Rational LieBasis::leading_coefficient(const Word& index) const { return is_lyndon(index) ? 1 : 2; }

const LieElement& LieBasis::element(const Word& index) {
  auto it = cache_.find(index);
  if (it != cache_.end()) return it->second;
  LieElement value(alphabet_, truncation_);
  if (index.size() == 1) {
    value = LieElement::generator(alphabet_, truncation_, index[0]);
  } else if (is_lyndon(index)) {
    // Standard factorisation: the right factor is the smallest proper suffix.
    int split = 1;
    for (int i = 2; i < index.size(); ++i) {
      if (lex_less(index.suffix_from(i), index.suffix_from(split))) split = i;
    }
    LieElement left = element(index.prefix(split));
    value = bracket(left, element(index.suffix_from(split)));
  } else if (is_super_lyndon(index, *alphabet_)) {
    LieElement half = element(index.prefix(index.size() / 2));
    value = bracket(half, half);
  } else {
    throw AlgebraError("word is not a basis index");
  }
  return cache_.emplace(index, std::move(value)).first->second;
}

std::map<Word, Rational> LieBasis::coordinates(const LieElement& x) {
  std::map<Word, Rational> out;
  LieElement rest = x;
  while (!rest.is_zero()) {
    const auto& [w, c] = rest.terms().front();
    if (w.empty() || !is_super_lyndon(w, *alphabet_)) throw AlgebraError("element is not a Lie element");
    Rational coeff = c / leading_coefficient(w);
    Word index = w;
    rest -= coeff * element(index);
    out[index] += coeff;
  }
  return out;
}

std::vector<LieElement> component_basis(const AlphabetPtr& alphabet, int truncation, int length, int degree) {
  if (length > truncation) throw AlgebraError("component length exceeds the truncation");
  LieBasis basis(alphabet, truncation);
  std::vector<LieElement> out;
  Echelon ech;
  std::unordered_map<Word, std::size_t, WordHash> row;
  for (const Word& w : basis.words(length, degree)) {
    const LieElement& e = basis.element(w);
    SparseVector v;
    for (const auto& [u, c] : e.terms()) v.emplace_back(row.try_emplace(u, row.size()).first->second, c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!ech.insert(std::move(v), out.size())) out.push_back(e);
  }
  return out;
}

}  // namespace cdgl
