#include "f1/f1linalg.hpp"

#include <algorithm>
#include <set>

#include "f1/errors.hpp"

namespace f1 {

F1Scalar F1Scalar::root(std::uint32_t n, long long u) {
  require(n > 0, "μ_n needs n > 0");
  const long long m = static_cast<long long>(n);
  return {n, static_cast<std::uint32_t>(((u % m) + m) % m)};
}

std::string F1Scalar::to_string() const {
  if (!exponent) return "0";
  if (*exponent == 0) return "1";
  if (modulus == 2) return "-1";
  return "mu^" + std::to_string(*exponent);
}

F1Scalar scalar_mul(const F1Scalar& a, const F1Scalar& b) {
  require(a.modulus == b.modulus, "scalar_mul: moduli differ");
  if (a.is_zero() || b.is_zero()) return F1Scalar::zero(a.modulus);
  return F1Scalar::root(a.modulus, static_cast<long long>(*a.exponent) + *b.exponent);
}

// ---------------------------------------------------------------------------

F1Space F1Space::standard(std::size_t dimension, std::uint32_t modulus) {
  require(modulus > 0,
          "infinite cyclic scalar group (countably infinite dimension) is not supported; modulus must be positive");
  Permutation mu(dimension * modulus);
  for (std::size_t j = 0; j < dimension; ++j)
    for (std::uint32_t u = 0; u < modulus; ++u)
      mu[j * modulus + u] = static_cast<std::uint32_t>(j * modulus + (u + 1) % modulus);
  return F1Space(modulus, std::move(mu));
}

F1Space F1Space::from_action(std::uint32_t modulus, Permutation mu_action) {
  require(modulus > 0, "modulus must be positive");
  require(is_permutation(mu_action), "μ action is not a permutation");
  F1Space v(modulus, std::move(mu_action));
  const auto mu_n = v.scalar_action(modulus);
  require(mu_n == identity_permutation(v.point_count()), "μ^n does not act trivially");
  require(v.acts_freely(), "μ_n does not act freely");
  return v;
}

Permutation F1Space::scalar_action(std::uint32_t u) const {
  Permutation p = identity_permutation(mu_.size());
  for (std::uint32_t i = 0; i < u; ++i) p = compose(mu_, p);
  return p;
}

bool F1Space::acts_freely() const {
  for (std::uint32_t u = 1; u < modulus_; ++u) {
    const auto p = scalar_action(u);
    for (std::size_t x = 0; x < p.size(); ++x)
      if (p[x] == x) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> F1Space::orbits() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<char> seen(mu_.size(), 0);
  for (std::uint32_t x = 0; x < mu_.size(); ++x) {
    if (seen[x]) continue;
    std::vector<std::uint32_t> orbit;
    for (std::uint32_t y = x; !seen[y]; y = mu_[y]) {
      seen[y] = 1;
      orbit.push_back(y);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

std::size_t F1Space::dimension() const { return orbits().size(); }

F1Space direct_sum(const F1Space& v, const F1Space& w) {
  require(v.modulus() == w.modulus(), "direct_sum: moduli differ");
  Permutation mu = v.mu_action();
  const auto offset = static_cast<std::uint32_t>(v.point_count());
  for (auto y : w.mu_action()) mu.push_back(y + offset);
  return F1Space::from_action(v.modulus(), std::move(mu));
}

F1Space tensor(const F1Space& v, const F1Space& w) {
  require(v.modulus() == w.modulus(), "tensor: moduli differ");
  const std::size_t nx = v.point_count();
  const std::size_t ny = w.point_count();
  const auto& mu_v = v.mu_action();
  const auto mu_w_inv = inverse(w.mu_action());
  auto pair = [ny](std::size_t x, std::size_t y) { return x * ny + y; };

  // Classes of the anti-diagonal action (x, y) -> (x^μ, y^(μ^-1)).
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> cls(nx * ny, kUnset);
  std::uint32_t classes = 0;
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      if (cls[pair(x, y)] != kUnset) continue;
      std::size_t a = x, b = y;
      while (cls[pair(a, b)] == kUnset) {
        cls[pair(a, b)] = classes;
        a = mu_v[a];
        b = mu_w_inv[b];
      }
      ++classes;
    }

  // Residual action: (x ⊗ y)^μ = x^μ ⊗ y = x ⊗ y^μ.
  Permutation mu(classes, kUnset);
  const auto& mu_w = w.mu_action();
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      const auto c = cls[pair(x, y)];
      const auto left = cls[pair(mu_v[x], y)];
      const auto right = cls[pair(x, mu_w[y])];
      if (left != right) throw VerificationError("tensor: μ does not pass through the tensor sign");
      if (mu[c] != kUnset && mu[c] != left) throw VerificationError("tensor: residual μ action ill-defined");
      mu[c] = left;
    }
  return F1Space::from_action(v.modulus(), std::move(mu));
}

F1Space restrict_scalars(const F1Space& v, std::uint32_t m) {
  require(m > 0 && v.modulus() % m == 0,
          "restrict_scalars: " + std::to_string(m) + " does not divide " + std::to_string(v.modulus()));
  return F1Space::from_action(m, v.scalar_action(v.modulus() / m));
}

// ---------------------------------------------------------------------------

MonomialMatrix::MonomialMatrix(std::uint32_t modulus, Permutation perm, std::vector<std::uint32_t> exps)
    : modulus_(modulus), perm_(std::move(perm)), exps_(std::move(exps)) {
  require(modulus_ > 0, "monomial matrix modulus must be positive");
  require(is_permutation(perm_), "monomial matrix perm is not a permutation");
  require(exps_.size() == perm_.size(), "monomial matrix needs one exponent per column");
  for (auto e : exps_) require(e < modulus_, "monomial matrix exponent out of range");
}

MonomialMatrix MonomialMatrix::identity(std::size_t d, std::uint32_t modulus) {
  return MonomialMatrix(modulus, identity_permutation(d), std::vector<std::uint32_t>(d, 0));
}

MonomialMatrix MonomialMatrix::scalar(std::size_t d, const F1Scalar& nu) {
  require(!nu.is_zero(), "scalar matrix needs a nonzero scalar");
  return MonomialMatrix(nu.modulus, identity_permutation(d), std::vector<std::uint32_t>(d, *nu.exponent));
}

F1Scalar MonomialMatrix::entry(std::size_t row, std::size_t col) const {
  require(row < size() && col < size(), "matrix index out of range");
  if (perm_[col] != row) return F1Scalar::zero(modulus_);
  return F1Scalar::root(modulus_, exps_[col]);
}

MonomialMatrix MonomialMatrix::inverse() const {
  Permutation inv(size());
  std::vector<std::uint32_t> e(size());
  for (std::size_t i = 0; i < size(); ++i) {
    inv[perm_[i]] = static_cast<std::uint32_t>(i);
    e[perm_[i]] = (modulus_ - exps_[i]) % modulus_;
  }
  return MonomialMatrix(modulus_, std::move(inv), std::move(e));
}

MonomialMatrix mm_compose(const MonomialMatrix& a, const MonomialMatrix& b) {
  require(a.size() == b.size(), "mm_compose: sizes differ");
  require(a.modulus() == b.modulus(), "mm_compose: moduli differ");
  const std::size_t d = a.size();
  Permutation p(d);
  std::vector<std::uint32_t> e(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto mid = b.perm()[i];
    p[i] = a.perm()[mid];
    e[i] = (a.exps()[mid] + b.exps()[i]) % a.modulus();
  }
  return MonomialMatrix(a.modulus(), std::move(p), std::move(e));
}

F1Scalar mm_det(const MonomialMatrix& a) {
  F1Scalar d = F1Scalar::root(a.modulus(), 0);
  for (auto e : a.exps()) d = scalar_mul(d, F1Scalar::root(a.modulus(), e));
  return d;
}

Permutation induced_point_permutation(const MonomialMatrix& a) {
  const std::uint32_t n = a.modulus();
  Permutation p(a.size() * n);
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::uint32_t u = 0; u < n; ++u)
      p[j * n + u] = static_cast<std::uint32_t>(a.perm()[j] * n + (u + a.exps()[j]) % n);
  return p;
}

bool mm_sign_check(const MonomialMatrix& a) {
  require(a.modulus() == 2, "sign check needs modulus 2");
  const int sign = permutation_sign(induced_point_permutation(a));
  const int det = *mm_det(a).exponent == 0 ? 1 : -1;
  return sign == det;
}

std::size_t MonomialHash::operator()(const MonomialMatrix& m) const {
  std::size_t h = VectorHash{}(m.perm());
  return h * 1000003u ^ VectorHash{}(m.exps());
}

ClosureResult<MonomialMatrix> gl_enumerate(std::size_t d, std::uint32_t n, std::size_t bound) {
  require(d >= 1, "gl_enumerate: d must be positive");
  require(n >= 1, "gl_enumerate: n must be positive");
  double expected = 1;
  for (std::size_t i = 2; i <= d; ++i) expected *= static_cast<double>(i);
  for (std::size_t i = 0; i < d; ++i) expected *= n;
  if (expected > static_cast<double>(bound))
    throw ResourceError("GL_" + std::to_string(d) + "(F1^" + std::to_string(n) + ") has more than " +
                        std::to_string(bound) + " elements");

  std::vector<MonomialMatrix> gens;
  if (d >= 2) {
    Permutation swap = identity_permutation(d);
    std::swap(swap[0], swap[1]);
    gens.emplace_back(n, swap, std::vector<std::uint32_t>(d, 0));
    if (d >= 3) {
      Permutation cycle(d);
      for (std::size_t i = 0; i < d; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % d);
      gens.emplace_back(n, cycle, std::vector<std::uint32_t>(d, 0));
    }
  }
  if (n >= 2) {
    std::vector<std::uint32_t> e(d, 0);
    e[0] = 1;
    gens.emplace_back(n, identity_permutation(d), e);
  }
  return close_generators(MonomialMatrix::identity(d, n), gens,
                          [](const MonomialMatrix& a, const MonomialMatrix& b) { return a * b; }, bound + 1,
                          MonomialHash{});
}

F1Scalar power_residue(const FqField& field, FqElem a, std::uint32_t n) {
  require(a.code != 0, "power residue of zero is undefined");
  const std::uint32_t q1 = field.order() - 1;
  require(n > 0 && q1 % n == 0, "power residue needs n | q - 1");
  const FqElem symbol = field.pow(a, q1 / n);
  const FqElem mu = field.pow(field.primitive_root(), q1 / n);
  FqElem x = field.one();
  for (std::uint32_t u = 0; u < n; ++u) {
    if (x == symbol) return F1Scalar::root(n, u);
    x = field.mul(x, mu);
  }
  throw VerificationError("a^((q-1)/n) is not an n-th root of unity");
}

MonomialMatrix mult_as_monomial(const FqField& field, FqElem a, std::uint32_t n) {
  require(a.code != 0, "multiplication by zero is not invertible");
  const std::uint32_t q1 = field.order() - 1;
  require(n > 0 && q1 % n == 0, "F_q is an F1^n-space only when n | q - 1");
  const std::uint32_t r = q1 / n;
  const FqElem g = field.primitive_root();
  const FqElem mu = field.pow(g, r);

  // Locate every nonzero element as b_j^(μ^u) with b_j = g^j.
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> orbit(field.order(), kUnset), expo(field.order(), kUnset);
  FqElem b = field.one();
  for (std::uint32_t j = 0; j < r; ++j) {
    FqElem x = b;
    for (std::uint32_t u = 0; u < n; ++u) {
      if (orbit[x.code] != kUnset) throw VerificationError("μ_n-orbits of F_q^× overlap");
      orbit[x.code] = j;
      expo[x.code] = u;
      x = field.mul(x, mu);
    }
    b = field.mul(b, g);
  }
  for (std::uint32_t c = 1; c < field.order(); ++c)
    if (orbit[c] == kUnset) throw VerificationError("μ_n-orbits do not cover F_q^×");

  Permutation perm(r);
  std::vector<std::uint32_t> exps(r);
  b = field.one();
  for (std::uint32_t j = 0; j < r; ++j) {
    const FqElem image = field.mul(a, b);
    perm[j] = orbit[image.code];
    exps[j] = expo[image.code];
    b = field.mul(b, g);
  }
  return MonomialMatrix(n, std::move(perm), std::move(exps));
}

F1Representation perm_rep_to_f1(const EnumeratedGroup& group, const PermutationAction& action) {
  const auto images = action_images(group, action);
  F1Representation rep;
  rep.images.reserve(images.size());
  // x^(gh) = (x^g)^h is a right action; inverting gives a left one.
  for (const auto& p : images)
    rep.images.emplace_back(1, inverse(p), std::vector<std::uint32_t>(action.degree, 0));
  for (std::size_t a = 0; a < group.order(); ++a)
    for (auto s : group.generators()) {
      const auto x = static_cast<EnumeratedGroup::Element>(a);
      if (rep.images[group.mul(x, s)] != rep.images[a] * rep.images[s])
        throw DomainError("permutation images do not give a homomorphism");
    }
  std::set<Permutation> distinct(images.begin(), images.end());
  rep.image_order = distinct.size();
  rep.faithful = rep.image_order == group.order();
  return rep;
}

nlohmann::json to_json(const MonomialMatrix& m) {
  return {{"size", m.size()}, {"modulus", m.modulus()}, {"perm", m.perm()}, {"exps", m.exps()}};
}

MonomialMatrix monomial_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("modulus") && j.contains("perm") && j.contains("exps"),
          "MonomialMatrix JSON needs modulus, perm and exps");
  MonomialMatrix m(j.at("modulus").get<std::uint32_t>(), j.at("perm").get<Permutation>(),
                   j.at("exps").get<std::vector<std::uint32_t>>());
  if (j.contains("size")) require(j.at("size").get<std::size_t>() == m.size(), "MonomialMatrix JSON size mismatch");
  return m;
}

}  // namespace f1
