#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "json.hpp"

namespace f1 {

/// Element of a FqField, stored as the base-p code sum c_i p^i of its
/// coefficient vector modulo the defining polynomial.
struct FqElem {
  std::uint32_t code = 0;
  friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

/// The field with q = p^e elements as F_p[x] / (f) for a monic irreducible f.
class FqField {
 public:
  /// Searches monic irreducibles of degree e in increasing code order of the
  /// lower coefficients (c_0 least significant). Throws DomainError if p is not
  /// prime or e == 0.
  FqField(unsigned p, unsigned e);
  /// Uses the supplied monic polynomial (coefficients low to high, length e+1);
  /// throws DomainError if it is not monic irreducible.
  FqField(unsigned p, std::vector<unsigned> irreducible);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  const std::vector<unsigned>& irreducible() const { return modulus_; }
  /// Smallest-code generator of the multiplicative group, verified at construction.
  FqElem primitive_root() const { return primitive_; }

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  FqElem element(std::uint32_t code) const;
  std::vector<unsigned> coefficients(FqElem a) const;
  FqElem from_coefficients(const std::vector<unsigned>& c) const;

  FqElem add(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
  FqElem mul(FqElem a, FqElem b) const;
  FqElem pow(FqElem a, std::uint64_t k) const;
  /// Throws DomainError for zero.
  FqElem inv(FqElem a) const;
  std::uint64_t multiplicative_order(FqElem a) const;

 private:
  void finish();

  unsigned p_ = 0;
  unsigned e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<unsigned> modulus_;
  FqElem primitive_{};
};

bool is_prime(unsigned n);
/// q = p^e with p prime, e >= 1; returns {p, e} or {0, 0}.
std::pair<unsigned, unsigned> prime_power(unsigned q);

nlohmann::json to_json(const FqField& f);
FqField fqfield_from_json(const nlohmann::json& j);

}  // namespace f1
