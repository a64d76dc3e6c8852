#include <map>
#include <set>

#include "doctest.h"
#include "f1/f1linalg.hpp"

using namespace f1;

namespace {

// Oracle: dense product over F1^n, entries are exponents or -1 for zero.
// Any row/column pair meeting two nonzero terms would need addition.
using Dense = std::vector<std::vector<int>>;

Dense dense(const MonomialMatrix& m) {
  Dense d(m.size(), std::vector<int>(m.size(), -1));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) {
      auto e = m.entry(r, c);
      if (!e.is_zero()) d[r][c] = static_cast<int>(*e.exponent);
    }
  return d;
}

Dense dense_product(const Dense& a, const Dense& b, int n) {
  const std::size_t d = a.size();
  Dense c(d, std::vector<int>(d, -1));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      int terms = 0;
      for (std::size_t k = 0; k < d; ++k)
        if (a[i][k] >= 0 && b[k][j] >= 0) {
          c[i][j] = (a[i][k] + b[k][j]) % n;
          ++terms;
        }
      REQUIRE(terms <= 1);
    }
  return c;
}

// Oracle: direct modular exponentiation in Z/p.
unsigned modpow(unsigned a, unsigned e, unsigned p) {
  unsigned r = 1;
  for (unsigned i = 0; i < e; ++i) r = r * a % p;
  return r;
}

}  // namespace

TEST_CASE("scalar multiplication") {
  CHECK(scalar_mul(F1Scalar::zero(3), F1Scalar::root(3, 2)).is_zero());
  CHECK(scalar_mul(F1Scalar::root(3, 1), F1Scalar::root(3, 2)) == F1Scalar::root(3, 0));
  CHECK(scalar_mul(F1Scalar::root(1, 0), F1Scalar::root(1, 0)) == F1Scalar::root(1, 0));
  CHECK_THROWS_AS(scalar_mul(F1Scalar::root(2, 1), F1Scalar::root(3, 1)), DomainError);
  CHECK(F1Scalar::root(2, 1).to_string() == "-1");
  CHECK(F1Scalar::root(5, -1) == F1Scalar::root(5, 4));
}

TEST_CASE("spaces, direct sums and tensor products") {
  auto v = F1Space::standard(2, 2);
  auto w = F1Space::standard(3, 2);
  auto s = direct_sum(v, w);
  CHECK(s.dimension() == 5);
  CHECK(s.point_count() == 10);
  CHECK(direct_sum(v, F1Space::standard(0, 2)).mu_action() == v.mu_action());
  auto t = tensor(v, w);
  CHECK(t.dimension() == 6);
  CHECK(t.point_count() == 12);
  CHECK(tensor(F1Space::standard(1, 5), F1Space::standard(1, 5)).dimension() == 1);
  auto t3 = tensor(F1Space::standard(2, 3), F1Space::standard(2, 3));
  CHECK(t3.point_count() == 12);
  CHECK(t3.orbits().size() == 4);
  CHECK_THROWS_AS(direct_sum(v, F1Space::standard(1, 3)), DomainError);
  CHECK_THROWS_AS(tensor(v, F1Space::standard(1, 3)), DomainError);
  CHECK_THROWS_AS(F1Space::standard(2, 0), DomainError);
}

TEST_CASE("dimension theorems by counting (d, e <= 6, n <= 4)") {
  for (std::uint32_t n = 1; n <= 4; ++n)
    for (std::size_t d = 0; d <= 6; ++d)
      for (std::size_t e = 0; e <= 6; ++e) {
        auto v = F1Space::standard(d, n), w = F1Space::standard(e, n);
        auto s = direct_sum(v, w);
        auto t = tensor(v, w);
        CHECK(s.orbits().size() == d + e);
        CHECK(s.point_count() == (d + e) * n);
        CHECK(t.orbits().size() == d * e);
        CHECK(t.point_count() == d * e * n);
        CHECK(s.acts_freely());
        CHECK(t.acts_freely());
      }
}

TEST_CASE("restriction of scalars") {
  auto v = F1Space::standard(2, 4);
  CHECK(restrict_scalars(v, 2).dimension() == 4);
  CHECK(restrict_scalars(v, 2).modulus() == 2);
  CHECK(restrict_scalars(v, 4).mu_action() == v.mu_action());
  CHECK(restrict_scalars(v, 1).dimension() == 8);
  CHECK_THROWS_AS(restrict_scalars(v, 3), DomainError);
  // Transitivity along m' | m | n.
  for (std::uint32_t n : {4u, 6u, 12u})
    for (std::uint32_t m = 1; m <= n; ++m) {
      if (n % m) continue;
      for (std::uint32_t m2 = 1; m2 <= m; ++m2) {
        if (m % m2) continue;
        auto w = F1Space::standard(3, n);
        auto twice = restrict_scalars(restrict_scalars(w, m), m2);
        auto once = restrict_scalars(w, m2);
        CHECK(twice.mu_action() == once.mu_action());
        CHECK(twice.modulus() == once.modulus());
        CHECK(once.acts_freely());
      }
    }
}

TEST_CASE("monomial matrices compose like dense matrices") {
  auto gl = gl_enumerate(3, 3);
  CHECK(gl.group.order() == 162);
  for (std::size_t i = 0; i < gl.elements.size(); i += 7)
    for (std::size_t j = 0; j < gl.elements.size(); j += 5) {
      const auto& a = gl.elements[i];
      const auto& b = gl.elements[j];
      CHECK(dense(a * b) == dense_product(dense(a), dense(b), 3));
      CHECK(a * MonomialMatrix::identity(3, 3) == a);
      CHECK(a * a.inverse() == MonomialMatrix::identity(3, 3));
      CHECK((a * b) * a == a * (b * a));
    }
  MonomialMatrix swap_neg(2, Permutation{1, 0}, {1, 0});
  // [[0, 1], [-1, 0]] squared is -I.
  CHECK(swap_neg * swap_neg == MonomialMatrix::scalar(2, F1Scalar::root(2, 1)));
  CHECK(mm_det(swap_neg) == F1Scalar::root(2, 1));
  CHECK_THROWS_AS(swap_neg * MonomialMatrix::identity(3, 2), DomainError);
  CHECK_THROWS_AS(swap_neg * MonomialMatrix::identity(2, 3), DomainError);
  CHECK_THROWS_AS(MonomialMatrix(2, Permutation{0, 0}, {0, 0}), DomainError);
}

TEST_CASE("determinants") {
  CHECK(mm_det(MonomialMatrix::identity(4, 5)) == F1Scalar::root(5, 0));
  for (std::uint32_t n = 1; n <= 5; ++n)
    for (std::size_t d = 1; d <= 4; ++d)
      for (std::uint32_t u = 0; u < n; ++u)
        CHECK(mm_det(MonomialMatrix::scalar(d, F1Scalar::root(n, u))) == F1Scalar::root(n, u * d));
}

TEST_CASE("det is multiplicative on GL_d(F1^n), d, n <= 3") {
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::uint32_t n = 1; n <= 3; ++n) {
      auto gl = gl_enumerate(d, n);
      for (const auto& a : gl.elements)
        for (const auto& b : gl.elements) CHECK(mm_det(a * b) == scalar_mul(mm_det(a), mm_det(b)));
    }
}

TEST_CASE("det is conjugation invariant on GL_2(F1^3)") {
  auto gl = gl_enumerate(2, 3);
  CHECK(gl.elements.size() == 18);
  for (const auto& a : gl.elements)
    for (const auto& p : gl.elements) CHECK(mm_det(p * a * p.inverse()) == mm_det(a));
}

TEST_CASE("group orders of GL_d(F1^n)") {
  CHECK(gl_enumerate(1, 4).group.order() == 4);
  CHECK(gl_enumerate(1, 4).group.is_abelian());
  CHECK(gl_enumerate(3, 1).group.order() == 6);
  CHECK_FALSE(gl_enumerate(3, 1).group.is_abelian());
  CHECK(gl_enumerate(2, 2).group.order() == 8);
  CHECK_THROWS_AS(gl_enumerate(6, 6, 1000), ResourceError);
}

TEST_CASE("sign of the induced permutation is the determinant (n = 2)") {
  CHECK(mm_sign_check(MonomialMatrix::identity(3, 2)));
  MonomialMatrix flip(2, Permutation{0}, {1});
  CHECK(permutation_sign(induced_point_permutation(flip)) == -1);
  CHECK(mm_sign_check(flip));
  for (std::size_t d = 1; d <= 3; ++d)
    for (const auto& a : gl_enumerate(d, 2).elements) CHECK(mm_sign_check(a));
  CHECK_THROWS_AS(mm_sign_check(MonomialMatrix::identity(2, 3)), DomainError);
}

TEST_CASE("finite fields") {
  FqField f7(7, 1);
  CHECK(f7.order() == 7);
  CHECK(f7.primitive_root().code == 3);
  FqField f9(3, 2);
  CHECK(f9.irreducible() == std::vector<unsigned>{1, 0, 1});
  CHECK(f9.multiplicative_order(f9.primitive_root()) == 8);
  for (std::uint32_t c = 1; c < 9; ++c) CHECK(f9.mul(f9.element(c), f9.inv(f9.element(c))) == f9.one());
  CHECK_THROWS_AS(FqField(4, 1), DomainError);
  CHECK_THROWS_AS(FqField(2, std::vector<unsigned>{1, 0, 1}), DomainError);  // x^2 + 1 = (x + 1)^2 over F_2
  auto j = to_json(f9);
  CHECK(fqfield_from_json(j).irreducible() == f9.irreducible());
  CHECK(prime_power(9) == std::pair<unsigned, unsigned>{3, 2});
  CHECK(prime_power(12).first == 0);
}

TEST_CASE("power residue symbol") {
  FqField f7(7, 1), f13(13, 1), f5(5, 1);
  CHECK(power_residue(f7, f7.one(), 2) == F1Scalar::root(2, 0));
  CHECK(power_residue(f7, f7.element(3), 2) == F1Scalar::root(2, 1));
  CHECK(power_residue(f13, f13.element(5), 3) == F1Scalar::root(3, 0));
  CHECK_THROWS_AS(power_residue(f7, f7.zero(), 2), DomainError);
  CHECK_THROWS_AS(power_residue(f7, f7.one(), 4), DomainError);
  // Against direct modular exponentiation for prime q.
  for (unsigned q : {5u, 7u, 13u}) {
    FqField f(q, 1);
    const unsigned g = f.primitive_root().code;
    for (unsigned n = 2; n < q; ++n) {
      if ((q - 1) % n) continue;
      const unsigned mu = modpow(g, (q - 1) / n, q);
      for (unsigned a = 1; a < q; ++a) {
        const unsigned s = modpow(a, (q - 1) / n, q);
        auto r = power_residue(f, f.element(a), n);
        CHECK(modpow(mu, *r.exponent, q) == s);
      }
    }
  }
}

TEST_CASE("multiplication as a monomial matrix") {
  FqField f7(7, 1), f5(5, 1);
  auto id = mult_as_monomial(f7, f7.one(), 2);
  CHECK(id == MonomialMatrix::identity(3, 2));
  auto m = mult_as_monomial(f7, f7.element(3), 2);
  CHECK(m.size() == 3);
  CHECK(mm_det(m) == F1Scalar::root(2, 1));
  auto m5 = mult_as_monomial(f5, f5.element(2), 4);
  CHECK(m5.size() == 1);
  CHECK(mm_det(m5) == power_residue(f5, f5.element(2), 4));
  CHECK_THROWS_AS(mult_as_monomial(f7, f7.zero(), 2), DomainError);
  CHECK_THROWS_AS(mult_as_monomial(f7, f7.one(), 4), DomainError);
}

TEST_CASE("det of multiplication is the power residue symbol") {
  for (unsigned q : {5u, 7u, 9u, 13u, 16u, 25u, 27u}) {
    auto [p, e] = prime_power(q);
    FqField f(p, e);
    for (std::uint32_t n = 2; n < q; ++n) {
      if ((q - 1) % n) continue;
      for (std::uint32_t c = 1; c < q; ++c)
        CHECK(mm_det(mult_as_monomial(f, f.element(c), n)) == power_residue(f, f.element(c), n));
    }
  }
}

TEST_CASE("permutation representations are F1-linear") {
  // S_3 acting on 3 points, generated by (1 2) and (2 3).
  auto s3 = close_generators(identity_permutation(3), std::vector<Permutation>{{1, 0, 2}, {0, 2, 1}},
                             [](const Permutation& a, const Permutation& b) { return compose(a, b); }, 100,
                             VectorHash{});
  PermutationAction natural{3, {Permutation{1, 0, 2}, Permutation{0, 2, 1}}};
  auto rep = perm_rep_to_f1(s3.group, natural);
  CHECK(rep.image_order == 6);
  CHECK(rep.faithful);
  for (std::uint32_t a = 0; a < 6; ++a)
    for (std::uint32_t b = 0; b < 6; ++b)
      CHECK(rep.images[s3.group.mul(a, b)] == rep.images[a] * rep.images[b]);

  PermutationAction trivial{2, {identity_permutation(2), identity_permutation(2)}};
  auto t = perm_rep_to_f1(s3.group, trivial);
  CHECK(t.image_order == 1);
  for (const auto& m : t.images) CHECK(m == MonomialMatrix::identity(2, 1));

  // Regular action of Z_4.
  Permutation c4{1, 2, 3, 0};
  auto z4 = close_generators(identity_permutation(4), std::vector<Permutation>{c4},
                             [](const Permutation& a, const Permutation& b) { return compose(a, b); }, 100,
                             VectorHash{});
  auto r4 = perm_rep_to_f1(z4.group, PermutationAction{4, {c4}});
  CHECK(r4.image_order == 4);

  PermutationAction broken{3, {Permutation{1, 2, 0}, Permutation{0, 2, 1}}};
  CHECK_THROWS_AS(perm_rep_to_f1(s3.group, broken), DomainError);
}

TEST_CASE("MonomialMatrix JSON") {
  MonomialMatrix m(3, Permutation{2, 0, 1}, {1, 2, 0});
  auto j = to_json(m);
  CHECK(j.dump() == R"({"exps":[1,2,0],"modulus":3,"perm":[2,0,1],"size":3})");
  CHECK(monomial_from_json(j) == m);
  j["exps"][0] = 5;
  CHECK_THROWS_AS(monomial_from_json(j), DomainError);
}
