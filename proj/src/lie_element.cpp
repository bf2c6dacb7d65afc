#include "cdgl/lie_element.hpp"

#include <algorithm>
#include <sstream>

#include "cdgl/errors.hpp"

namespace cdgl {

namespace {

bool term_less(const Term& a, const Term& b) { return a.first < b.first; }

}  // namespace

LieElement::LieElement(AlphabetPtr alphabet, int truncation) : alphabet_(std::move(alphabet)), truncation_(truncation) {
  if (truncation_ < 1) throw AlgebraError("truncation must be at least 1");
  if (truncation_ > kMaxWordLength) {
    throw AlgebraError("truncation " + std::to_string(truncation_) + " exceeds the supported maximum " +
                       std::to_string(kMaxWordLength));
  }
}

LieElement::LieElement(AlphabetPtr alphabet, int truncation, std::vector<Term> sorted_terms)
    : LieElement(std::move(alphabet), truncation) {
  terms_ = std::move(sorted_terms);
}

LieElement LieElement::generator(AlphabetPtr alphabet, int truncation, const std::string& name) {
  int index = alphabet->index_of(name);
  return generator(std::move(alphabet), truncation, index);
}

LieElement LieElement::generator(AlphabetPtr alphabet, int truncation, int index) {
  LieElement x(std::move(alphabet), truncation);
  x.terms_.emplace_back(Word::letter(index), Rational(1));
  return x;
}

LieElement LieElement::scalar(AlphabetPtr alphabet, int truncation, const Rational& c) {
  LieElement x(std::move(alphabet), truncation);
  if (c != 0) x.terms_.emplace_back(Word(), c);
  return x;
}

Rational LieElement::coefficient(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{w, Rational(0)}, term_less);
  if (it != terms_.end() && it->first == w) return it->second;
  return 0;
}

std::optional<int> LieElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = alphabet_->word_degree(terms_.front().first);
  for (const auto& [w, c] : terms_) {
    if (alphabet_->word_degree(w) != d) return std::nullopt;
  }
  return d;
}

int LieElement::min_length() const { return terms_.empty() ? truncation_ + 1 : terms_.front().first.size(); }

int LieElement::max_length() const { return terms_.empty() ? 0 : terms_.back().first.size(); }

LieElement LieElement::length_slice(int k) const {
  LieElement out(alphabet_, truncation_);
  for (const auto& t : terms_) {
    if (t.first.size() == k) out.terms_.push_back(t);
  }
  return out;
}

LieElement LieElement::degree_slice(int n) const {
  LieElement out(alphabet_, truncation_);
  for (const auto& t : terms_) {
    if (alphabet_->word_degree(t.first) == n) out.terms_.push_back(t);
  }
  return out;
}

LieElement LieElement::up_to_length(int m) const {
  LieElement out(alphabet_, truncation_);
  for (const auto& t : terms_) {
    if (t.first.size() <= m) out.terms_.push_back(t);
  }
  return out;
}

LieElement LieElement::truncated_to(int n) const {
  LieElement out(alphabet_, n);
  for (const auto& t : terms_) {
    if (t.first.size() <= n) out.terms_.push_back(t);
  }
  return out;
}

LieElement LieElement::operator-() const {
  LieElement out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

void LieElement::check_compatible(const LieElement& other) const { require_compatible(*this, other); }

LieElement& LieElement::operator+=(const LieElement& other) {
  check_compatible(other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) { return *this += -other; }

LieElement& LieElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

bool operator==(const LieElement& a, const LieElement& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return same_alphabet(a.alphabet_, b.alphabet_) && a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
}

std::string LieElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1 && !w.empty();
    if (!unit) out << cdgl::to_string(mag) << (w.empty() ? "" : " ");
    for (int i = 0; i < w.size(); ++i) out << (i ? "." : "") << (*alphabet_)[w[i]].name;
  }
  return out.str();
}

void require_compatible(const LieElement& x, const LieElement& y) {
  if (x.truncation() != y.truncation()) {
    throw AlgebraError("mismatched truncations " + std::to_string(x.truncation()) + " and " +
                       std::to_string(y.truncation()));
  }
  if (!same_alphabet(x.alphabet(), y.alphabet())) throw AlgebraError("elements over different generator sets");
}

void ElementBuilder::add(const Word& w, const Rational& c) {
  if (c == 0 || w.size() > truncation_) return;
  auto [it, inserted] = acc_.try_emplace(w, c);
  if (!inserted) it->second += c;
}

void ElementBuilder::add(const LieElement& x, const Rational& c) {
  if (c == 0) return;
  for (const auto& [w, a] : x.terms()) {
    if (w.size() > truncation_) continue;
    auto [it, inserted] = acc_.try_emplace(w, a);
    if (inserted) {
      if (c != 1) it->second *= c;
    } else if (c == 1) {
      it->second += a;
    } else {
      it->second += a * c;
    }
  }
}

void ElementBuilder::add_product(const LieElement& x, const LieElement& y, const Rational& c, int max_length) {
  if (c == 0 || x.is_zero() || y.is_zero()) return;
  const int limit = (max_length < 0 || max_length > truncation_) ? truncation_ : max_length;
  const int ylen = y.min_length();
  Rational tmp;
  for (const auto& [u, a] : x.terms()) {
    if (u.size() + ylen > limit) break;  // terms sorted by length
    for (const auto& [v, b] : y.terms()) {
      if (u.size() + v.size() > limit) break;
      tmp = a * b;
      if (c != 1) tmp *= c;
      auto [it, inserted] = acc_.try_emplace(u.concat(v), tmp);
      if (!inserted) it->second += tmp;
    }
  }
}

LieElement ElementBuilder::build() {
  std::vector<Term> terms;
  terms.reserve(acc_.size());
  for (auto& [w, c] : acc_) {
    if (c != 0) terms.emplace_back(w, std::move(c));
  }
  acc_.clear();
  std::sort(terms.begin(), terms.end(), term_less);
  return LieElement(alphabet_, truncation_, std::move(terms));
}

LieElement product(const LieElement& x, const LieElement& y) {
  require_compatible(x, y);
  ElementBuilder b(x.alphabet(), x.truncation());
  b.add_product(x, y);
  return b.build();
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  require_compatible(x, y);
  ElementBuilder out(x.alphabet(), x.truncation());
  if (x.is_zero() || y.is_zero()) return out.build();
  const Alphabet& alpha = *x.alphabet();
  const int n = x.truncation();
  const int ylen = y.min_length();
  std::vector<int> ydeg;
  ydeg.reserve(y.size());
  for (const auto& [v, b] : y.terms()) ydeg.push_back(alpha.word_degree(v));
  Rational tmp;
  for (const auto& [u, a] : x.terms()) {
    if (u.size() + ylen > n) break;
    const int du = alpha.word_degree(u);
    for (std::size_t j = 0; j < y.size(); ++j) {
      const auto& [v, b] = y.terms()[j];
      if (u.size() + v.size() > n) break;
      tmp = a * b;
      out.add(u.concat(v), tmp);
      if ((du * ydeg[j]) % 2 == 0) {
        out.add(v.concat(u), -tmp);
      } else {
        out.add(v.concat(u), tmp);
      }
    }
  }
  return out.build();
}

}  // namespace cdgl
