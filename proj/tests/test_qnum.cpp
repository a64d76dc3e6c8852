#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

#include "doctest.h"
#include "f1/errors.hpp"
#include "f1/qnum.hpp"

using namespace f1;

namespace {

QPoly poly(std::initializer_list<int> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return QPoly(std::move(v));
}

// Oracle: number of k-dimensional subspaces of F_2^n, enumerated as sets of
// bitmask vectors closed under XOR.
std::size_t count_f2_subspaces(unsigned n, unsigned k) {
  std::set<std::vector<std::uint32_t>> spaces;
  const std::uint32_t size = 1u << n;
  // Every subspace is spanned by some k-tuple of vectors; enumerate spans.
  std::vector<std::uint32_t> pick(k, 0);
  auto span_of = [&](const std::vector<std::uint32_t>& gens) {
    std::vector<std::uint32_t> elems{0};
    for (auto v : gens) {
      std::size_t m = elems.size();
      bool fresh = std::find(elems.begin(), elems.end(), v) == elems.end();
      if (!fresh) continue;
      for (std::size_t i = 0; i < m; ++i) elems.push_back(elems[i] ^ v);
    }
    std::sort(elems.begin(), elems.end());
    return elems;
  };
  std::function<void(unsigned, std::uint32_t)> rec = [&](unsigned depth, std::uint32_t start) {
    if (depth == k) {
      auto s = span_of(pick);
      if (s.size() == (1u << k)) spaces.insert(s);
      return;
    }
    for (std::uint32_t v = start; v < size; ++v) {
      pick[depth] = v;
      rec(depth + 1, v + 1);
    }
  };
  rec(0, 1);
  return spaces.size();
}

// Oracle: |GL_m(F_p)| by enumerating all m x m matrices and testing the
// determinant by cofactor expansion mod p.
long det_mod(const std::vector<int>& a, int m, int p) {
  if (m == 1) return ((a[0] % p) + p) % p;
  long d = 0;
  for (int c = 0; c < m; ++c) {
    std::vector<int> minor;
    for (int r = 1; r < m; ++r)
      for (int cc = 0; cc < m; ++cc)
        if (cc != c) minor.push_back(a[r * m + cc]);
    long term = a[c] * det_mod(minor, m - 1, p);
    d += (c % 2 ? -term : term);
  }
  return ((d % p) + p) % p;
}

long count_gl(int m, int p) {
  long total = 1;
  for (int i = 0; i < m * m; ++i) total *= p;
  long count = 0;
  std::vector<int> a(m * m);
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (auto& x : a) {
      x = static_cast<int>(c % p);
      c /= p;
    }
    if (det_mod(a, m, p) != 0) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("QPoly arithmetic is exact and canonical") {
  CHECK(poly({1, 2, 0, 0}).coeffs().size() == 2);
  CHECK(poly({0, 0}).is_zero());
  CHECK((poly({1, 1}) * poly({1, 1})) == poly({1, 2, 1}));
  CHECK((poly({1, 1}) - poly({1, 1})).is_zero());
  CHECK(divide_exact(poly({1, 2, 1}), poly({1, 1})) == poly({1, 1}));
  CHECK_THROWS_AS(divide_exact(poly({1, 0, 1}), poly({1, 1})), DomainError);
  CHECK_THROWS_AS(divide_exact(poly({1}), poly({0, 2})), DomainError);
  CHECK_THROWS_AS(divide_exact(poly({1, 1}), QPoly{}), DomainError);
  CHECK(poly({1, -2, 0, 1}).to_string() == "1 - 2q + q^3");
}

TEST_CASE("eval") {
  CHECK(eval(poly({1, 1, 1}), 2) == 7);
  CHECK(eval(QPoly{}, 17) == 0);
  CHECK(eval(poly({1, 1}), 1) == 2);
}

TEST_CASE("q-integers and q-factorials") {
  CHECK(q_integer(0).is_zero());
  CHECK(q_integer(1) == poly({1}));
  CHECK(q_integer(3) == poly({1, 1, 1}));
  CHECK(q_factorial(0) == poly({1}));
  CHECK(q_factorial(2) == poly({1, 1}));
  CHECK(q_factorial(3) == poly({1, 2, 2, 1}));
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(eval(q_integer(n), 1) == n);
    CHECK(eval(q_factorial(n), 1) == factorial(n));
  }
}

TEST_CASE("gaussian binomial examples") {
  for (std::size_t n = 0; n <= 6; ++n) CHECK(gaussian_binomial(n, 0) == poly({1}));
  CHECK(gaussian_binomial(2, 1) == poly({1, 1}));
  CHECK(gaussian_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
  CHECK(eval(gaussian_binomial(4, 2), 2) == 35);
  CHECK_THROWS_AS(gaussian_binomial(2, 3), DomainError);
}

TEST_CASE("gaussian binomial counts subspaces of F_2^n") {
  CHECK(count_f2_subspaces(4, 2) == 35);
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned k = 1; k <= n; ++k) CHECK(eval(gaussian_binomial(n, k), 2) == count_f2_subspaces(n, k));
}

TEST_CASE("three routes to the gaussian binomial agree (n <= 12)") {
  for (std::size_t n = 0; n <= 12; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const auto g = gaussian_binomial(n, k);
      CHECK(g == gaussian_binomial_by_factorials(n, k));
      CHECK(g == quantum_binomial_expand(n, k));
      CHECK(g == gaussian_binomial(n, n - k));
      CHECK(eval(g, 1) == binomial(n, k));
      for (const auto& c : g.coeffs()) CHECK(c >= 0);
    }
}

TEST_CASE("quantum binomial expansion") {
  CHECK(quantum_binomial_expand(1, 1) == poly({1}));
  CHECK(quantum_binomial_expand(2, 1) == poly({1, 1}));
  CHECK(quantum_binomial_expand(3, 1) == poly({1, 1, 1}));
  CHECK_THROWS_AS(quantum_binomial_expand(17, 3), ResourceError);
  CHECK_NOTHROW(quantum_binomial_expand(5, 2, 5));
}

TEST_CASE("pgl order polynomial") {
  CHECK(pgl_order_poly(0) == poly({1}));
  CHECK(pgl_order_poly(1) == poly({0, 1, 1}));
  for (std::size_t n = 0; n <= 6; ++n) CHECK(eval(pgl_order_poly(n), 1) == factorial(n + 1));
  // |PGL_(n+1)(p)| = |GL_(n+1)(p)| / (p - 1) = (p - 1)^n N(p), from brute-force matrix counts.
  struct Case { int n, p; };
  for (auto c : {Case{1, 2}, Case{2, 2}, Case{1, 3}, Case{2, 3}, Case{1, 5}}) {
    long gl = count_gl(c.n + 1, c.p);
    BigInt lhs = gl / (c.p - 1);
    BigInt rhs = eval(pgl_order_poly(c.n), c.p);
    for (int i = 0; i < c.n; ++i) rhs *= (c.p - 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("projective completion identity") {
  for (std::size_t n = 0; n <= 10; ++n) CHECK(projective_completion_identity(n));
}

TEST_CASE("QPoly JSON round trip") {
  auto p = q_factorial(12);
  auto j = to_json(p);
  CHECK(j[0] == "1");
  CHECK(qpoly_from_json(j) == p);
  CHECK(to_json(QPoly{}).dump() == "[]");
  CHECK_THROWS_AS(qpoly_from_json(nlohmann::json::parse(R"(["1","0"])")), DomainError);
  CHECK_THROWS_AS(qpoly_from_json(nlohmann::json::parse(R"([1])")), DomainError);
}
