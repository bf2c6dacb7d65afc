#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace cdgl {

inline constexpr int kMaxWordLength = 15;
inline constexpr int kMaxGenerators = 256;

/// A word in the generators, stored inline. Letters are indices into an
/// Alphabet. Words order by length first, then lexicographically.
struct Word {
  std::uint8_t len = 0;
  std::array<std::uint8_t, kMaxWordLength> letters{};

  Word() = default;
  static Word letter(int index);
  static Word from(const std::vector<int>& indices);

  int size() const { return len; }
  bool empty() const { return len == 0; }
  int operator[](int i) const { return letters[i]; }

  Word concat(const Word& other) const;
  Word prefix(int n) const;
  Word suffix_from(int start) const;
  Word repeated_twice() const { return concat(*this); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.len != b.len) return a.len <=> b.len;
    return a.letters <=> b.letters;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ w.len;
    for (int i = 0; i < w.len; ++i) {
      h ^= w.letters[i];
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

struct GradedGenerator {
  std::string name;
  int degree = 0;
  friend bool operator==(const GradedGenerator&, const GradedGenerator&) = default;
};

/// Generators of a free algebra, kept sorted by name. Letter i of a word is
/// generator i.
class Alphabet {
 public:
  explicit Alphabet(std::vector<GradedGenerator> generators);

  int size() const { return static_cast<int>(generators_.size()); }
  const GradedGenerator& operator[](int i) const { return generators_[i]; }
  const std::vector<GradedGenerator>& generators() const { return generators_; }

  /// -1 when absent.
  int find(const std::string& name) const;
  /// Throws AlgebraError when absent.
  int index_of(const std::string& name) const;
  int degree(int index) const { return generators_[index].degree; }
  int word_degree(const Word& w) const;
  std::vector<std::string> word_names(const Word& w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.generators_ == b.generators_; }

 private:
  std::vector<GradedGenerator> generators_;
  std::unordered_map<std::string, int> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<GradedGenerator> generators);
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

}  // namespace cdgl
