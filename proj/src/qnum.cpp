#include "f1/qnum.hpp"

#include <sstream>

#include "f1/errors.hpp"

namespace f1 {

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const BigInt& c) { return QPoly(std::vector<BigInt>{c}); }

QPoly QPoly::monomial(std::size_t degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return QPoly(std::move(c));
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    BigInt c = coeffs_[i];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    if (c < 0) c = -c;
    if (i == 0 || c != 1) out << c;
    if (i >= 1) out << 'q';
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return out.str();
}

QPoly divide_exact(const QPoly& dividend, const QPoly& divisor) {
  require(!divisor.is_zero(), "division by the zero polynomial");
  std::vector<BigInt> rem = dividend.coeffs();
  const auto& d = divisor.coeffs();
  if (rem.size() < d.size()) {
    require(dividend.is_zero(), "polynomial division is not exact");
    return {};
  }
  std::vector<BigInt> quot(rem.size() - d.size() + 1);
  const BigInt& lead = d.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const BigInt& top = rem[i + d.size() - 1];
    if (top % lead != 0) throw DomainError("polynomial division is not exact over the integers");
    BigInt c = top / lead;
    quot[i] = c;
    if (c != 0)
      for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= c * d[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw DomainError("polynomial division leaves a remainder");
  return QPoly(std::move(quot));
}

BigInt eval(const QPoly& p, const BigInt& q0) {
  BigInt acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q0 + *it;
  return acc;
}

QPoly q_integer(std::size_t n) { return QPoly(std::vector<BigInt>(n, BigInt(1))); }

QPoly q_factorial(std::size_t n) {
  QPoly acc = QPoly::constant(1);
  for (std::size_t i = 1; i <= n; ++i) acc *= q_integer(i);
  return acc;
}

QPoly gaussian_binomial(std::size_t n, std::size_t k) {
  if (k > n) throw DomainError("gaussian_binomial: k > n");
  // Row of the q-Pascal triangle, row[j] = [m, j]_q.
  std::vector<QPoly> row{QPoly::constant(1)};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<QPoly> next(m + 1);
    next[0] = QPoly::constant(1);
    next[m] = QPoly::constant(1);
    for (std::size_t j = 1; j < m; ++j) next[j] = row[j - 1] + QPoly::monomial(j) * row[j];
    row = std::move(next);
  }
  return row[k];
}

QPoly gaussian_binomial_by_factorials(std::size_t n, std::size_t k) {
  if (k > n) throw DomainError("gaussian_binomial: k > n");
  return divide_exact(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

QPoly quantum_binomial_expand(std::size_t n, std::size_t k, std::size_t bound) {
  if (k > n) throw DomainError("quantum_binomial_expand: k > n");
  if (n > bound)
    throw ResourceError("quantum_binomial_expand: n = " + std::to_string(n) + " exceeds word bound " +
                        std::to_string(bound));
  std::vector<BigInt> acc(n * n / 4 + 1);
  std::string word(n, 'x');
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t xs = 0;
    for (std::size_t i = 0; i < n; ++i) {
      word[i] = (mask >> i) & 1 ? 'x' : 'y';
      xs += word[i] == 'x';
    }
    if (xs != k) continue;
    // Apply yx -> q xy until no y precedes an x.
    std::size_t qpower = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (word[i] == 'y' && word[i + 1] == 'x') {
          word[i] = 'x';
          word[i + 1] = 'y';
          ++qpower;
          changed = true;
        }
      }
    }
    acc[qpower] += 1;
  }
  return QPoly(std::move(acc));
}

QPoly pgl_order_poly(std::size_t n) {
  const std::size_t dim = n + 1;
  QPoly product = QPoly::constant(1);
  for (std::size_t i = 0; i <= n; ++i) product *= QPoly::monomial(dim) - QPoly::monomial(i);
  const QPoly q_minus_1 = QPoly::monomial(1) - QPoly::constant(1);
  QPoly divisor = QPoly::constant(1);
  for (std::size_t i = 0; i < dim; ++i) divisor *= q_minus_1;
  return divide_exact(product, divisor);
}

bool projective_completion_identity(std::size_t n) {
  return q_integer(n + 1) == QPoly::monomial(n) + q_integer(n);
}

BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

nlohmann::json to_json(const QPoly& p) {
  auto j = nlohmann::json::array();
  for (const auto& c : p.coeffs()) j.push_back(c.str());
  return j;
}

QPoly qpoly_from_json(const nlohmann::json& j) {
  require(j.is_array(), "QPoly JSON must be an array of decimal strings");
  std::vector<BigInt> c;
  for (const auto& e : j) {
    require(e.is_string(), "QPoly JSON coefficients must be decimal strings");
    const auto s = e.get<std::string>();
    require(!s.empty() && s.find_first_not_of("-0123456789") == std::string::npos, "bad coefficient '" + s + "'");
    c.emplace_back(s);
  }
  require(c.empty() || c.back() != 0, "QPoly JSON is not canonical (trailing zero)");
  return QPoly(std::move(c));
}

}  // namespace f1
