#pragma once

// Linear algebra over F1^n = {0} ∪ μ_n: spaces are pointed sets with a free
// μ_n-action, automorphisms are monomial matrices. There is no addition.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f1/finite_field.hpp"
#include "f1/group.hpp"
#include "json.hpp"

namespace f1 {

/// An element of F1^n: zero, or μ^u for a fixed abstract generator μ of μ_n.
struct F1Scalar {
  std::uint32_t modulus = 1;
  std::optional<std::uint32_t> exponent;  // empty means zero

  static F1Scalar zero(std::uint32_t n) { return {n, std::nullopt}; }
  /// μ^u with u reduced mod n. Throws DomainError for n == 0.
  static F1Scalar root(std::uint32_t n, long long u);
  bool is_zero() const { return !exponent; }
  std::string to_string() const;
  friend bool operator==(const F1Scalar&, const F1Scalar&) = default;
};

/// Zero absorbs; exponents add mod n. Throws DomainError on modulus mismatch.
F1Scalar scalar_mul(const F1Scalar& a, const F1Scalar& b);

/// A vector space over F1^n: the point 0 plus a finite set X of nonzero points
/// on which μ_n acts freely. X is {0..|X|-1}; `mu_action` is the action of μ.
class F1Space {
 public:
  /// The space with d orbits; point j*n + u stands for b_j^(μ^u).
  /// Throws DomainError for n == 0 (an infinite cyclic μ, used for countably
  /// infinite dimension, is not supported).
  static F1Space standard(std::size_t dimension, std::uint32_t modulus);
  /// Validates that `mu_action` is a permutation of order dividing n acting freely.
  static F1Space from_action(std::uint32_t modulus, Permutation mu_action);

  std::uint32_t modulus() const { return modulus_; }
  /// Number of nonzero elements.
  std::size_t point_count() const { return mu_.size(); }
  /// Number of μ_n-orbits on the nonzero elements.
  std::size_t dimension() const;
  const Permutation& mu_action() const { return mu_; }
  /// Action of μ^u.
  Permutation scalar_action(std::uint32_t u) const;
  /// No nonzero point is fixed by μ^u for 0 < u < n.
  bool acts_freely() const;
  /// Orbits, each listed from its smallest point along μ.
  std::vector<std::vector<std::uint32_t>> orbits() const;

 private:
  F1Space(std::uint32_t modulus, Permutation mu) : modulus_(modulus), mu_(std::move(mu)) {}
  std::uint32_t modulus_;
  Permutation mu_;
};

/// V ∐ W with the zero points identified; W's points follow V's.
F1Space direct_sum(const F1Space& v, const F1Space& w);
/// Quotient of X_V × X_W by (x, y) ~ (x^ν, y^(ν^-1)); μ acts on the first factor.
F1Space tensor(const F1Space& v, const F1Space& w);
/// Same points viewed over the subfield F1^m, i.e. under μ^(n/m). Requires m | n.
F1Space restrict_scalars(const F1Space& v, std::uint32_t m);

/// Element of GL_d(F1^n): the automorphism b_i -> b_(perm[i])^(μ^exps[i]).
/// As a d×d array, column i holds μ^exps[i] in row perm[i] and zeros elsewhere.
class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  MonomialMatrix(std::uint32_t modulus, Permutation perm, std::vector<std::uint32_t> exps);
  static MonomialMatrix identity(std::size_t d, std::uint32_t modulus);
  /// ν·I_d for a nonzero scalar ν.
  static MonomialMatrix scalar(std::size_t d, const F1Scalar& nu);

  std::size_t size() const { return perm_.size(); }
  std::uint32_t modulus() const { return modulus_; }
  const Permutation& perm() const { return perm_; }
  const std::vector<std::uint32_t>& exps() const { return exps_; }
  F1Scalar entry(std::size_t row, std::size_t col) const;
  MonomialMatrix inverse() const;

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  std::uint32_t modulus_ = 1;
  Permutation perm_;
  std::vector<std::uint32_t> exps_;
};

/// Matrix product A·B (apply B first). Throws DomainError on size or modulus mismatch.
MonomialMatrix mm_compose(const MonomialMatrix& a, const MonomialMatrix& b);
inline MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) { return mm_compose(a, b); }

/// Product of the nonzero entries.
F1Scalar mm_det(const MonomialMatrix& a);

/// The permutation A induces on the d·n nonzero points of the standard space
/// (point j*n + u is b_j^(μ^u)).
Permutation induced_point_permutation(const MonomialMatrix& a);

/// For n = 2: whether the sign of the induced permutation on the 2d nonzero
/// points equals det(A) = ±1. Throws DomainError unless n == 2.
bool mm_sign_check(const MonomialMatrix& a);

struct MonomialHash {
  std::size_t operator()(const MonomialMatrix& m) const;
};

/// GL_d(F1^n) ≅ S_d ≀ μ_n^d by closure of generators. Throws ResourceError when
/// d!·n^d exceeds the bound.
ClosureResult<MonomialMatrix> gl_enumerate(std::size_t d, std::uint32_t n, std::size_t bound = 200000);

/// Power residue symbol a^((q-1)/n) written as μ^u with μ = g^((q-1)/n) for the
/// field's primitive root g. Throws DomainError if a == 0 or n does not divide q-1.
F1Scalar power_residue(const FqField& field, FqElem a, std::uint32_t n);

/// Multiplication by a on F_q as an F1^n-linear map. The basis is g^0, ...,
/// g^(r-1) with r = (q-1)/n, the smallest power of g in each μ_n-orbit.
MonomialMatrix mult_as_monomial(const FqField& field, FqElem a, std::uint32_t n);

/// A permutation representation as an F1-linear one: every element maps to the
/// n = 1 monomial matrix of its action, arranged so that ρ(gh) = ρ(g)ρ(h).
/// Throws DomainError if the generator images are not an action.
struct F1Representation {
  std::vector<MonomialMatrix> images;  // indexed by group element
  std::size_t image_order = 0;
  bool faithful = false;
};
F1Representation perm_rep_to_f1(const EnumeratedGroup& group, const PermutationAction& action);

nlohmann::json to_json(const MonomialMatrix& m);
MonomialMatrix monomial_from_json(const nlohmann::json& j);

}  // namespace f1
