#pragma once

// q-analogue counting over Z[q] with exact, unbounded coefficients.

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

namespace f1 {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial in q, coefficient i multiplying q^i. Always canonical:
/// no trailing zero coefficients, so the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigInt> coeffs);
  static QPoly constant(const BigInt& c);
  static QPoly monomial(std::size_t degree, const BigInt& c = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  QPoly& operator+=(const QPoly& b) { return *this = *this + b; }
  QPoly& operator*=(const QPoly& b) { return *this = *this * b; }

  /// Human-readable form, e.g. "1 + 2q + q^2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Exact quotient. Throws DomainError when the divisor is zero or does not
/// divide the dividend over Z[q].
QPoly divide_exact(const QPoly& dividend, const QPoly& divisor);

/// Horner evaluation at an integer point.
BigInt eval(const QPoly& p, const BigInt& q0);

/// [n]_q = 1 + q + ... + q^(n-1). With q a prime power this is the number of
/// points of the projective space of an n-dimensional vector space, PG(n-1, q).
QPoly q_integer(std::size_t n);
QPoly q_factorial(std::size_t n);

/// Gaussian binomial via the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
QPoly gaussian_binomial(std::size_t n, std::size_t k);
/// Gaussian binomial as [n]! / ([k]! [n-k]!), used as a cross-check.
QPoly gaussian_binomial_by_factorials(std::size_t n, std::size_t k);

inline constexpr std::size_t kQuantumExpandBound = 16;

/// Coefficient of x^k y^(n-k) in (x + y)^n for yx = q xy, found by expanding all
/// 2^n words and rewriting each into sorted order. Throws ResourceError when
/// n exceeds the bound.
QPoly quantum_binomial_expand(std::size_t n, std::size_t k, std::size_t bound = kQuantumExpandBound);

/// N(q) with |PGL_(n+1)(q)| = (q - 1)^n N(q); obtained by exact division of
/// prod_(i=0..n) (q^(n+1) - q^i) by (q - 1)^(n+1).
QPoly pgl_order_poly(std::size_t n);

/// [n+1]_q == q^n + [n]_q: affine n-space plus the hyperplane at infinity.
bool projective_completion_identity(std::size_t n);

BigInt factorial(std::size_t n);
BigInt binomial(std::size_t n, std::size_t k);

/// JSON array of decimal strings, ascending degree.
nlohmann::json to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

}  // namespace f1
