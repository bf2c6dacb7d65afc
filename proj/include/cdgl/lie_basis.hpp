#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "cdgl/lie_element.hpp"

namespace cdgl {

/// Plain lexicographic order (a proper prefix is smaller).
bool lex_less(const Word& a, const Word& b);
bool is_lyndon(const Word& w);
/// Lyndon words, plus squares ww of Lyndon words w of odd degree. These index
/// the basis of the free graded Lie algebra used throughout.
bool is_super_lyndon(const Word& w, const Alphabet& alphabet);

/// All Lyndon words of length 1..max_length over `letters` letters, in
/// (length, lexicographic) order.
std::vector<Word> lyndon_words(int letters, int max_length);

/// Graded Dynkin left bracketing [...[[w1,w2],w3],...,wk], extended linearly.
LieElement dynkin(const LieElement& x);

/// True iff every length-k slice x_k satisfies dynkin(x_k) = k x_k (so x is a
/// Lie element). The empty word is never Lie.
bool is_lie(const LieElement& x);

/// Basis of the truncated free graded Lie algebra. For a Lyndon word w the
/// basis element is the standard bracketing P_w; for an odd-degree Lyndon word
/// w there is also [P_w, P_w]. The smallest word of P_w is w (coefficient 1),
/// that of [P_w,P_w] is ww (coefficient 2), so the basis is triangular with
/// respect to the word order. Elements are built lazily and cached; a LieBasis
/// is not safe to share between threads.
class LieBasis {
 public:
  LieBasis(AlphabetPtr alphabet, int truncation);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int truncation() const { return truncation_; }

  /// Super-Lyndon words of the given length and degree, in word order.
  const std::vector<Word>& words(int length, int degree);
  /// Super-Lyndon words of the given degree, all lengths 1..N, in word order.
  std::vector<Word> words_of_degree(int degree);

  /// The basis element indexed by a super-Lyndon word.
  const LieElement& element(const Word& index);
  /// Coefficient of the index word inside element(index): 1 or 2.
  Rational leading_coefficient(const Word& index) const;

  /// Coordinates of a Lie element in the basis, keyed by index word. Throws
  /// AlgebraError when x is not a Lie element.
  std::map<Word, Rational> coordinates(const LieElement& x);

 private:
  void ensure_words();

  AlphabetPtr alphabet_;
  int truncation_;
  bool words_ready_ = false;
  std::map<std::pair<int, int>, std::vector<Word>> by_slice_;
  std::unordered_map<Word, LieElement, WordHash> cache_;
};

/// Independent Lie elements spanning the (word length k, degree n) slice.
std::vector<LieElement> component_basis(const AlphabetPtr& alphabet, int truncation, int length, int degree);

}  // namespace cdgl
