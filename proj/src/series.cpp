#include "cdgl/series.hpp"

#include "cdgl/errors.hpp"

namespace cdgl {

Rational factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

namespace {

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

void require_degree_zero(const LieElement& x, const char* what) {
  auto d = x.degree();
  if (!x.is_zero() && (!d || *d != 0)) throw AlgebraError(std::string(what) + " requires a degree 0 element");
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw AlgebraError("Bernoulli number of negative index");
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    for (int k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * b[k];
    b[m] = -s / (m + 1);
  }
  return b[n];
}

std::vector<Rational> exp_coefficients(int n) {
  std::vector<Rational> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = 1 / factorial(k);
  return c;
}

std::vector<Rational> exp_minus_one_over_z(int n) {
  std::vector<Rational> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = 1 / factorial(k + 1);
  return c;
}

std::vector<Rational> z_over_exp_minus_one(int n) {
  std::vector<Rational> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = bernoulli(k) / factorial(k);
  return c;
}

std::vector<Rational> z_over_one_minus_exp_neg(int n) { return at_negative(z_over_exp_minus_one(n)); }

std::vector<Rational> at_negative(std::vector<Rational> coefficients) {
  for (std::size_t k = 1; k < coefficients.size(); k += 2) coefficients[k] = -coefficients[k];
  return coefficients;
}

LieElement tensor_exp(const LieElement& x) {
  if (!x.is_zero() && x.terms().front().first.empty()) throw AlgebraError("exp of a series with constant term");
  const int n = x.truncation();
  LieElement result = LieElement::scalar(x.alphabet(), n, 1);
  LieElement power = result;
  for (int k = 1; k <= n; ++k) {
    power = product(power, x) * (Rational(1) / k);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

LieElement tensor_log(const LieElement& x) {
  const int n = x.truncation();
  LieElement one = LieElement::scalar(x.alphabet(), n, 1);
  if (x.coefficient(Word()) != 1) throw AlgebraError("log of a series without constant term 1");
  LieElement z = x - one;
  LieElement result(x.alphabet(), n);
  LieElement power = one;
  for (int k = 1; k <= n; ++k) {
    power = product(power, z);
    if (power.is_zero()) break;
    result += power * Rational(k % 2 == 1 ? 1 : -1, k);
  }
  return result;
}

LieElement bch(const LieElement& x, const LieElement& y) {
  require_compatible(x, y);
  require_degree_zero(x, "bch");
  require_degree_zero(y, "bch");
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  return tensor_log(product(tensor_exp(x), tensor_exp(y)));
}

LieElement bch_all(const std::vector<LieElement>& factors, const LieElement& zero) {
  LieElement acc = zero;
  for (const auto& f : factors) acc = bch(acc, f);
  return acc;
}

LieElement ad_series(const std::vector<Rational>& coefficients, const LieElement& x, const LieElement& y) {
  require_compatible(x, y);
  require_degree_zero(x, "ad_series");
  LieElement result(y.alphabet(), y.truncation());
  LieElement power = y;
  for (std::size_t n = 0; n < coefficients.size() && !power.is_zero(); ++n) {
    if (coefficients[n] != 0) result += coefficients[n] * power;
    power = bracket(x, power);
  }
  return result;
}

LieElement exp_ad(const LieElement& x, const LieElement& y) {
  return ad_series(exp_coefficients(y.truncation()), x, y);
}

}  // namespace cdgl
