#include "cdgl/word.hpp"

#include <algorithm>

#include "cdgl/errors.hpp"

namespace cdgl {

Word Word::letter(int index) {
  Word w;
  w.len = 1;
  w.letters[0] = static_cast<std::uint8_t>(index);
  return w;
}

Word Word::from(const std::vector<int>& indices) {
  if (indices.size() > static_cast<std::size_t>(kMaxWordLength)) {
    throw AlgebraError("word longer than the supported maximum length");
  }
  Word w;
  w.len = static_cast<std::uint8_t>(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) w.letters[i] = static_cast<std::uint8_t>(indices[i]);
  return w;
}

Word Word::concat(const Word& other) const {
  if (len + other.len > kMaxWordLength) throw AlgebraError("word longer than the supported maximum length");
  Word w = *this;
  for (int i = 0; i < other.len; ++i) w.letters[len + i] = other.letters[i];
  w.len = static_cast<std::uint8_t>(len + other.len);
  return w;
}

Word Word::prefix(int n) const {
  Word w;
  w.len = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) w.letters[i] = letters[i];
  return w;
}

Word Word::suffix_from(int start) const {
  Word w;
  w.len = static_cast<std::uint8_t>(len - start);
  for (int i = start; i < len; ++i) w.letters[i - start] = letters[i];
  return w;
}

Alphabet::Alphabet(std::vector<GradedGenerator> generators) : generators_(std::move(generators)) {
  if (generators_.size() > static_cast<std::size_t>(kMaxGenerators)) {
    throw AlgebraError("too many generators (at most 256 are supported)");
  }
  std::sort(generators_.begin(), generators_.end(),
            [](const GradedGenerator& a, const GradedGenerator& b) { return a.name < b.name; });
  for (int i = 0; i < size(); ++i) {
    if (generators_[i].name.empty()) throw AlgebraError("generator with empty name");
    if (!index_.emplace(generators_[i].name, i).second) {
      throw AlgebraError("duplicate generator name '" + generators_[i].name + "'");
    }
  }
}

int Alphabet::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int Alphabet::index_of(const std::string& name) const {
  int i = find(name);
  if (i < 0) throw AlgebraError("unknown generator '" + name + "'");
  return i;
}

int Alphabet::word_degree(const Word& w) const {
  int d = 0;
  for (int i = 0; i < w.size(); ++i) d += generators_[w[i]].degree;
  return d;
}

std::vector<std::string> Alphabet::word_names(const Word& w) const {
  std::vector<std::string> names;
  names.reserve(w.size());
  for (int i = 0; i < w.size(); ++i) names.push_back(generators_[w[i]].name);
  return names;
}

AlphabetPtr make_alphabet(std::vector<GradedGenerator> generators) {
  return std::make_shared<const Alphabet>(std::move(generators));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace cdgl
