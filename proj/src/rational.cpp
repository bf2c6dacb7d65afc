#include "cdgl/rational.hpp"

#include <cctype>

namespace cdgl {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_text(num)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(to_mpz(num));
  } else {
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_text(den) || den[0] == '-' || den[0] == '+') {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d = to_mpz(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q = Rational(to_mpz(num), d);
    q.canonicalize();
  }
  return q;
}

}  // namespace cdgl
