#pragma once

#include <vector>

#include "cdgl/lie_element.hpp"

namespace cdgl {

/// Bernoulli numbers with B_1 = -1/2. Throws AlgebraError for n < 0.
Rational bernoulli(int n);

Rational factorial(int n);

/// Truncated exp and log in the tensor algebra. exp requires x without a
/// constant term; log requires constant term 1.
LieElement tensor_exp(const LieElement& x);
LieElement tensor_log(const LieElement& x);

/// log(exp(x) exp(y)); both arguments must have degree 0.
LieElement bch(const LieElement& x, const LieElement& y);
/// Left-to-right BCH product of a list (empty list gives zero).
LieElement bch_all(const std::vector<LieElement>& factors, const LieElement& zero);

/// sum_n c_n ad_x^n(y), for coefficients c_0, c_1, ...; x must have degree 0.
LieElement ad_series(const std::vector<Rational>& coefficients, const LieElement& x, const LieElement& y);

/// Coefficient sequences (length n + 1) of the power series used with ad.
std::vector<Rational> exp_coefficients(int n);            // e^z
std::vector<Rational> exp_minus_one_over_z(int n);        // (e^z - 1)/z
std::vector<Rational> z_over_exp_minus_one(int n);        // z/(e^z - 1) = sum B_k/k! z^k
std::vector<Rational> z_over_one_minus_exp_neg(int n);    // z/(1 - e^{-z})
/// Coefficients of f(-z) given those of f(z).
std::vector<Rational> at_negative(std::vector<Rational> coefficients);

/// e^{ad_x}(y).
LieElement exp_ad(const LieElement& x, const LieElement& y);

}  // namespace cdgl
