#include "f1/finite_field.hpp"

#include <string>

#include "f1/errors.hpp"

namespace f1 {

namespace {

using Poly = std::vector<unsigned>;  // low to high, over Z/p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over Z/p.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    trim(a);
  }
  return a;
}

Poly decode(std::uint32_t code, unsigned p, unsigned len) {
  Poly c(len);
  for (auto& x : c) {
    x = code % p;
    code /= p;
  }
  return c;
}

bool is_irreducible(const Poly& f, unsigned p) {
  const unsigned deg = static_cast<unsigned>(f.size()) - 1;
  if (deg == 0) return false;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::uint32_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint32_t code = 0; code < count; ++code) {
      Poly g = decode(code, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<unsigned, unsigned> prime_power(unsigned q) {
  if (q < 2) return {0, 0};
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return {0, 0};
  return {p, e};
}

FqField::FqField(unsigned p, unsigned e) : p_(p), e_(e) {
  require(is_prime(p), "field characteristic " + std::to_string(p) + " is not prime");
  require(e >= 1, "field extension degree must be positive");
  std::uint32_t count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (std::uint32_t code = 0; code < count; ++code) {
    Poly f = decode(code, p, e);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      modulus_ = std::move(f);
      break;
    }
  }
  finish();
}

FqField::FqField(unsigned p, std::vector<unsigned> irreducible) : p_(p), modulus_(std::move(irreducible)) {
  require(is_prime(p), "field characteristic " + std::to_string(p) + " is not prime");
  require(modulus_.size() >= 2 && modulus_.back() == 1, "defining polynomial must be monic of degree >= 1");
  for (auto c : modulus_) require(c < p, "defining polynomial coefficient out of range");
  require(is_irreducible(modulus_, p), "defining polynomial is reducible");
  e_ = static_cast<unsigned>(modulus_.size()) - 1;
  finish();
}

void FqField::finish() {
  q_ = 1;
  for (unsigned i = 0; i < e_; ++i) q_ *= p_;
  for (std::uint32_t code = 1; code < q_; ++code) {
    if (multiplicative_order({code}) == q_ - 1) {
      primitive_ = {code};
      break;
    }
  }
  // The powers of the primitive root must exhaust the nonzero elements.
  std::vector<char> seen(q_, 0);
  FqElem x = one();
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    if (seen[x.code]) throw VerificationError("primitive root does not generate the multiplicative group");
    seen[x.code] = 1;
    x = mul(x, primitive_);
  }
  if (x != one()) throw VerificationError("primitive root has the wrong order");
}

FqElem FqField::element(std::uint32_t code) const {
  require(code < q_, "field element code out of range");
  return {code};
}

std::vector<unsigned> FqField::coefficients(FqElem a) const { return decode(a.code, p_, e_); }

FqElem FqField::from_coefficients(const std::vector<unsigned>& c) const {
  Poly r = poly_mod(c, modulus_, p_);
  std::uint32_t code = 0;
  for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i] % p_;
  return {code};
}

FqElem FqField::add(FqElem a, FqElem b) const {
  std::uint32_t code = 0, place = 1;
  for (unsigned i = 0; i < e_; ++i) {
    code += ((a.code % p_ + b.code % p_) % p_) * place;
    a.code /= p_;
    b.code /= p_;
    place *= p_;
  }
  return {code};
}

FqElem FqField::neg(FqElem a) const {
  std::uint32_t code = 0, place = 1;
  for (unsigned i = 0; i < e_; ++i) {
    code += ((p_ - a.code % p_) % p_) * place;
    a.code /= p_;
    place *= p_;
  }
  return {code};
}

FqElem FqField::mul(FqElem a, FqElem b) const {
  const Poly x = decode(a.code, p_, e_);
  const Poly y = decode(b.code, p_, e_);
  Poly prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i)
    for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  return from_coefficients(prod);
}

FqElem FqField::pow(FqElem a, std::uint64_t k) const {
  FqElem result = one();
  while (k > 0) {
    if (k & 1) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

FqElem FqField::inv(FqElem a) const {
  require(a.code != 0, "zero has no multiplicative inverse");
  return pow(a, q_ - 2);
}

std::uint64_t FqField::multiplicative_order(FqElem a) const {
  require(a.code != 0, "zero has no multiplicative order");
  std::uint64_t k = 1;
  for (FqElem x = a; x != one(); x = mul(x, a)) ++k;
  return k;
}

nlohmann::json to_json(const FqField& f) {
  return {{"p", f.characteristic()},
          {"e", f.degree()},
          {"irreducible", f.irreducible()},
          {"primitive_root", f.coefficients(f.primitive_root())}};
}

FqField fqfield_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("p") && j.contains("irreducible"), "FqField JSON needs p and irreducible");
  FqField f(j.at("p").get<unsigned>(), j.at("irreducible").get<std::vector<unsigned>>());
  if (j.contains("e")) require(j.at("e").get<unsigned>() == f.degree(), "FqField JSON degree mismatch");
  if (j.contains("primitive_root"))
    require(f.from_coefficients(j.at("primitive_root").get<std::vector<unsigned>>()) == f.primitive_root(),
            "FqField JSON primitive root differs from the canonical one");
  return f;
}

}  // namespace f1
