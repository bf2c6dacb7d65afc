#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdgl/rational.hpp"
#include "cdgl/word.hpp"

namespace cdgl {

using Term = std::pair<Word, Rational>;

/// Truncated noncommutative series over an alphabet: a finite sum of words of
/// length at most N. Lie elements are the primitive ones (see is_lie). Terms
/// are sorted by word order and carry no zero coefficients.
class LieElement {
 public:
  LieElement() = default;
  LieElement(AlphabetPtr alphabet, int truncation);
  LieElement(AlphabetPtr alphabet, int truncation, std::vector<Term> sorted_terms);

  static LieElement generator(AlphabetPtr alphabet, int truncation, const std::string& name);
  static LieElement generator(AlphabetPtr alphabet, int truncation, int index);
  /// The empty word with coefficient c (used by exp/log).
  static LieElement scalar(AlphabetPtr alphabet, int truncation, const Rational& c);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int truncation() const { return truncation_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Word& w) const;
  /// Degree of the element if all terms share it; nullopt for zero or mixed.
  std::optional<int> degree() const;
  /// Smallest word length present (N+1 for zero).
  int min_length() const;
  int max_length() const;

  LieElement length_slice(int k) const;
  LieElement degree_slice(int n) const;
  /// Terms of length at most m (the truncation is kept).
  LieElement up_to_length(int m) const;
  /// Same terms viewed at a smaller truncation (longer words are dropped).
  LieElement truncated_to(int n) const;

  LieElement operator-() const;
  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const Rational& c);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }
  friend LieElement operator*(LieElement a, const Rational& c) { return a *= c; }

  friend bool operator==(const LieElement& a, const LieElement& b);

  /// Human-readable sum of words, e.g. "2 a.a - 1/2 x.b".
  std::string to_string() const;

 private:
  void check_compatible(const LieElement& other) const;

  AlphabetPtr alphabet_;
  int truncation_ = 0;
  std::vector<Term> terms_;
};

/// Accumulates terms in any order; build() sorts and drops zeros and words
/// longer than the truncation.
class ElementBuilder {
 public:
  ElementBuilder(AlphabetPtr alphabet, int truncation) : alphabet_(std::move(alphabet)), truncation_(truncation) {}

  void add(const Word& w, const Rational& c);
  void add(const LieElement& x, const Rational& c = 1);
  /// Adds c * x * y (tensor product), keeping words of length at most
  /// max_length (the truncation when negative).
  void add_product(const LieElement& x, const LieElement& y, const Rational& c = 1, int max_length = -1);
  LieElement build();

 private:
  AlphabetPtr alphabet_;
  int truncation_;
  std::unordered_map<Word, Rational, WordHash> acc_;
};

/// Associative product in the truncated tensor algebra.
LieElement product(const LieElement& x, const LieElement& y);

/// Graded commutator, extended bilinearly: [u,v] = uv - (-1)^{|u||v|} vu on words.
LieElement bracket(const LieElement& x, const LieElement& y);

/// Requires matching alphabets and truncations; throws AlgebraError otherwise.
void require_compatible(const LieElement& x, const LieElement& y);

}  // namespace cdgl
