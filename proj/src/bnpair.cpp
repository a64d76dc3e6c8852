#include "f1/bnpair.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "f1/finite_field.hpp"

namespace f1 {

namespace {

using Element = EnumeratedGroup::Element;
using Tuple = ConcreteGroup::Tuple;
constexpr Element kNone = static_cast<Element>(-1);

Tuple matrix_identity(std::size_t n) {
  Tuple m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

Tuple matrix_mul(const Tuple& a, const Tuple& b, std::size_t n, unsigned p) {
  Tuple c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = static_cast<std::uint32_t>((c[i * n + j] + aik * b[k * n + j]) % p);
    }
  return c;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  for (; e; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

bool matrix_invertible(Tuple m, std::size_t n, unsigned p) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return false;
    for (std::size_t j = 0; j < n; ++j) std::swap(m[col * n + j], m[pivot * n + j]);
    const std::uint64_t inv = pow_mod(m[col * n + col], p - 2, p);
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::uint64_t f = m[r * n + col] * inv % p;
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j)
        m[r * n + j] = static_cast<std::uint32_t>((m[r * n + j] + (p - f) * m[col * n + j]) % p);
    }
  }
  return true;
}

Element conj_inv(const EnumeratedGroup& g, Element x, Element y) {  // x^-1 y x
  return g.mul(g.mul(g.inverse(x), y), x);
}

ElementSet sorted_unique(ElementSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string describe(const ConcreteGroup& g, Element x) { return g.format(x); }

// B-double coset of a seed, grown under left and right multiplication by gens.
ElementSet double_coset(const EnumeratedGroup& g, const ElementSet& gens, Element seed) {
  std::vector<char> in(g.order(), 0);
  ElementSet out{seed};
  in[seed] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Element x = out[head];
    for (auto b : gens) {
      for (Element y : {g.mul(b, x), g.mul(x, b)}) {
        if (!in[y]) {
          in[y] = 1;
          out.push_back(y);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> object_representatives(const CosetGeometry& cg) {
  std::vector<Element> rep(cg.geometry.size(), kNone);
  for (const auto& per_type : cg.object_of)
    for (std::size_t x = 0; x < per_type.size(); ++x)
      if (rep[per_type[x]] == kNone) rep[per_type[x]] = static_cast<Element>(x);
  return rep;
}

// Left translation of a building object by g.
Geometry::Object translate(const TitsSystem& ts, const CosetGeometry& cg, const std::vector<Element>& reps,
                           Element g, Geometry::Object x) {
  const auto t = cg.geometry.type(x);
  return cg.object_of[t][ts.G.group().mul(g, reps[x])];
}

}  // namespace

// ---------------------------------------------------------------------------
// ConcreteGroup

ConcreteGroup ConcreteGroup::matrices(unsigned p, std::size_t n, const std::vector<Tuple>& gens, std::size_t bound) {
  require(is_prime(p), "matrix groups need a prime modulus, got " + std::to_string(p));
  require(n >= 1, "matrix size must be positive");
  std::vector<Tuple> g = gens;
  for (const auto& m : g) {
    require(m.size() == n * n, "matrix generator has " + std::to_string(m.size()) + " entries, expected " +
                                   std::to_string(n * n));
    for (auto e : m) require(e < p, "matrix entry " + std::to_string(e) + " is not reduced mod " + std::to_string(p));
    require(matrix_invertible(m, n, p), "matrix generator is singular");
  }
  if (g.empty()) g.push_back(matrix_identity(n));
  ConcreteGroup out;
  out.kind_ = Kind::Matrix;
  out.p_ = p;
  out.degree_ = n;
  auto res = close_generators<Tuple>(
      matrix_identity(n), g, [n, p](const Tuple& a, const Tuple& b) { return matrix_mul(a, b, n, p); }, bound,
      VectorHash{});
  out.group_ = std::move(res.group);
  out.elements_ = std::move(res.elements);
  for (std::size_t i = 0; i < out.elements_.size(); ++i) out.index_.emplace(out.elements_[i], static_cast<Element>(i));
  return out;
}

ConcreteGroup ConcreteGroup::permutations(std::size_t degree, const std::vector<Tuple>& gens, std::size_t bound) {
  std::vector<Tuple> g = gens;
  for (const auto& s : g) {
    require(s.size() == degree, "permutation generator has the wrong degree");
    require(is_permutation(s), "generator is not a permutation");
  }
  if (g.empty()) g.push_back(identity_permutation(degree));
  ConcreteGroup out;
  out.kind_ = Kind::Permutation;
  out.degree_ = degree;
  auto res = close_generators<Tuple>(
      identity_permutation(degree), g, [](const Tuple& a, const Tuple& b) { return compose(a, b); }, bound,
      VectorHash{});
  out.group_ = std::move(res.group);
  out.elements_ = std::move(res.elements);
  for (std::size_t i = 0; i < out.elements_.size(); ++i) out.index_.emplace(out.elements_[i], static_cast<Element>(i));
  return out;
}

std::optional<ConcreteGroup::Element> ConcreteGroup::find(const Tuple& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ConcreteGroup::Element ConcreteGroup::id_of(const Tuple& t) const {
  auto e = find(t);
  if (!e) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << "]";
    throw DomainError("not an element of the group: " + os.str());
  }
  return *e;
}

std::string ConcreteGroup::format(Element g) const { return to_json(g).dump(); }

nlohmann::json ConcreteGroup::to_json(Element g) const {
  const auto& t = elements_.at(g);
  if (kind_ == Kind::Permutation) return t;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < degree_; ++i)
    rows.push_back(std::vector<std::uint32_t>(t.begin() + i * degree_, t.begin() + (i + 1) * degree_));
  return rows;
}

namespace {

Tuple tuple_from_json(const nlohmann::json& j) {
  require(j.is_array(), "group element must be an array");
  Tuple out;
  for (const auto& x : j) {
    if (x.is_array()) {
      for (const auto& y : x) {
        require(y.is_number_unsigned() || (y.is_number_integer() && y.get<long long>() >= 0),
                "entries must be non-negative integers");
        out.push_back(y.get<std::uint32_t>());
      }
    } else {
      require(x.is_number_unsigned() || (x.is_number_integer() && x.get<long long>() >= 0),
              "entries must be non-negative integers");
      out.push_back(x.get<std::uint32_t>());
    }
  }
  return out;
}

std::vector<Tuple> tuples_from_json(const nlohmann::json& j) {
  require(j.is_array(), "expected an array of group elements");
  std::vector<Tuple> out;
  for (const auto& x : j) out.push_back(tuple_from_json(x));
  return out;
}

}  // namespace

ConcreteGroup concrete_group_from_json(const nlohmann::json& j, std::size_t bound) {
  require(j.is_object(), "group description must be an object");
  require(j.contains("kind") && j["kind"].is_string(), "group description needs a kind");
  require(j.contains("generators"), "group description needs generators");
  const auto kind = j["kind"].get<std::string>();
  const auto gens = tuples_from_json(j["generators"]);
  if (kind == "matrix") {
    require(j.contains("p") && j.contains("n"), "matrix group needs p and n");
    return ConcreteGroup::matrices(j["p"].get<unsigned>(), j["n"].get<std::size_t>(), gens, bound);
  }
  if (kind == "permutation") {
    std::size_t degree = 0;
    if (j.contains("degree"))
      degree = j["degree"].get<std::size_t>();
    else if (!gens.empty())
      degree = gens.front().size();
    return ConcreteGroup::permutations(degree, gens, bound);
  }
  throw DomainError("unknown group kind '" + kind + "'");
}

ElementSet subgroup_generated(const ConcreteGroup& g, const std::vector<Tuple>& gens) {
  ElementSet ids;
  for (const auto& t : gens) ids.push_back(g.id_of(t));
  return subgroup_closure(g.group(), ids);
}

ElementSet subgroup_from_json(const ConcreteGroup& g, const nlohmann::json& j) {
  require(j.is_object(), "subgroup description must be an object");
  if (j.contains("generators")) return subgroup_generated(g, tuples_from_json(j["generators"]));
  require(j.contains("elements"), "subgroup description needs generators or elements");
  ElementSet ids;
  for (const auto& t : tuples_from_json(j["elements"])) ids.push_back(g.id_of(t));
  ids = sorted_unique(std::move(ids));
  require(is_subgroup(g.group(), ids), "listed elements do not form a subgroup");
  return ids;
}

// ---------------------------------------------------------------------------
// Axioms

std::variant<TitsSystem, BNFailure> verify_bn(const ConcreteGroup& cg, const ElementSet& b, const ElementSet& n) {
  const auto& g = cg.group();
  require(is_subgroup(g, b), "B is not a subgroup of G");
  require(is_subgroup(g, n), "N is not a subgroup of G");

  TitsSystem ts;
  ts.G = cg;
  ts.B = b;
  ts.N = n;
  ts.H = intersect(b, n);
  const auto gen_b = generating_set(g, b);
  const auto gen_n = generating_set(g, n);
  const auto gen_h = generating_set(g, ts.H);

  for (auto x : gen_n)
    for (auto h : gen_h) {
      const auto c = conj_inv(g, g.inverse(x), h);
      if (!contains(ts.H, c))
        return BNFailure{"BN2", "H = B ∩ N is not normal in N: conjugating " + describe(cg, h) + " by " +
                                    describe(cg, x) + " leaves H"};
    }

  // Cosets of H in N, numbered by smallest element.
  std::vector<Element> coset_of(g.order(), kNone);
  std::vector<Element> rep;
  for (auto x : n) {
    if (coset_of[x] != kNone) continue;
    const auto c = static_cast<Element>(rep.size());
    rep.push_back(x);
    for (auto h : ts.H) coset_of[g.mul(x, h)] = c;
  }
  const std::size_t w_order = rep.size();

  std::vector<ElementSet> cells(w_order);
  std::vector<std::vector<char>> in_cell(w_order);
  for (std::size_t c = 0; c < w_order; ++c) {
    cells[c] = double_coset(g, gen_b, rep[c]);
    in_cell[c].assign(g.order(), 0);
    for (auto x : cells[c]) in_cell[c][x] = 1;
  }

  std::vector<Element> s_cosets;
  for (std::size_t c = 1; c < w_order; ++c) {
    bool closed = true;
    for (auto x : b) {
      const auto y = g.mul(g.mul(rep[c], x), rep[c]);
      if (!in_cell[0][y] && !in_cell[c][y]) {
        closed = false;
        break;
      }
    }
    if (closed) s_cosets.push_back(static_cast<Element>(c));
  }

  for (auto s : s_cosets)
    if (coset_of[g.mul(rep[s], rep[s])] != 0)
      return BNFailure{"BN2", "element " + describe(cg, rep[s]) + " of S is not an involution in W"};

  {
    std::vector<char> seen(w_order, 0);
    std::vector<Element> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (auto s : s_cosets) {
        const auto c = coset_of[g.mul(rep[queue[head]], rep[s])];
        if (!seen[c]) {
          seen[c] = 1;
          queue.push_back(c);
        }
      }
    if (queue.size() != w_order)
      return BNFailure{"BN2", "S generates a subgroup of order " + std::to_string(queue.size()) + " of W, which has order " +
                                  std::to_string(w_order)};
  }

  {
    ElementSet both = gen_b;
    both.insert(both.end(), gen_n.begin(), gen_n.end());
    const auto span = subgroup_closure(g, both);
    if (span.size() != g.order())
      return BNFailure{"BN1", "B and N generate a subgroup of order " + std::to_string(span.size()) + " of G, which has order " +
                                  std::to_string(g.order())};
  }

  for (auto s : s_cosets)
    for (std::size_t c = 0; c < w_order; ++c) {
      const auto sw = coset_of[g.mul(rep[s], rep[c])];
      for (auto x : b) {
        const auto y = g.mul(g.mul(rep[s], x), rep[c]);
        if (!in_cell[c][y] && !in_cell[sw][y])
          return BNFailure{"BN3", "BsBwB leaves BwB ∪ BswB: s = " + describe(cg, rep[s]) + ", w = " +
                                      describe(cg, rep[c]) + ", b = " + describe(cg, x)};
      }
    }

  if (s_cosets.empty()) return BNFailure{"BN4", "W is trivial, so no s satisfies sBs ≠ B"};
  for (auto s : s_cosets) {
    bool moved = false;
    for (auto x : gen_b)
      if (!contains(b, conj_inv(g, g.inverse(rep[s]), x))) {
        moved = true;
        break;
      }
    if (!moved) return BNFailure{"BN4", "sBs = B for s = " + describe(cg, rep[s])};
  }

  std::vector<std::vector<Element>> columns;
  for (auto s : s_cosets) {
    std::vector<Element> col(w_order);
    for (std::size_t c = 0; c < w_order; ++c) col[c] = coset_of[g.mul(rep[c], rep[s])];
    columns.push_back(std::move(col));
  }
  ts.W = EnumeratedGroup::from_right_action(std::move(columns));
  ts.n_of_w.assign(w_order, 0);
  ts.cells.assign(w_order, {});
  for (std::size_t c = 0; c < w_order; ++c) {
    ts.n_of_w[ts.W.relabel()[c]] = rep[c];
    ts.cells[ts.W.relabel()[c]] = std::move(cells[c]);
  }
  ts.coxeter = coxeter_matrix_of(ts.W);
  return ts;
}

std::optional<BNFailure> recheck_bn(const TitsSystem& ts) {
  const auto& g = ts.G.group();
  ElementSet all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);

  ElementSet bn = ts.B;
  bn.insert(bn.end(), ts.N.begin(), ts.N.end());
  if (subgroup_closure(g, bn) != all) return BNFailure{"BN1", "⟨B, N⟩ ≠ G"};
  if (ts.H != intersect(ts.B, ts.N)) return BNFailure{"BN2", "H ≠ B ∩ N"};
  for (auto x : ts.N)
    for (auto h : ts.H)
      if (!contains(ts.H, conj_inv(g, x, h))) return BNFailure{"BN2", "H is not normal in N"};

  ElementSet h_and_s = ts.H;
  for (std::size_t k = 0; k < ts.rank(); ++k) {
    const auto ns = ts.n_of_w[ts.W.generator(k)];
    if (!contains(ts.H, g.mul(ns, ns))) return BNFailure{"BN2", "s" + std::to_string(k + 1) + " is not an involution"};
    h_and_s.push_back(ns);
  }
  if (subgroup_closure(g, h_and_s) != ts.N) return BNFailure{"BN2", "S does not generate W"};

  std::vector<ElementSet> cells(ts.W.order());
  for (std::size_t w = 0; w < cells.size(); ++w) {
    ElementSet c;
    for (auto x : ts.B)
      for (auto y : ts.B) c.push_back(g.mul(g.mul(x, ts.n_of_w[w]), y));
    cells[w] = sorted_unique(std::move(c));
    if (cells[w] != ts.cells[w]) return BNFailure{"BN3", "double coset of w" + std::to_string(w) + " differs on recomputation"};
  }

  for (std::size_t k = 0; k < ts.rank(); ++k) {
    const auto s = ts.W.generator(k);
    for (std::size_t w = 0; w < cells.size(); ++w) {
      const auto& dw = cells[w];
      const auto& dsw = cells[ts.W.mul(s, static_cast<Element>(w))];
      for (auto x : cells[s]) {
        const auto xn = g.mul(x, ts.n_of_w[w]);
        for (auto y : ts.B) {
          const auto z = g.mul(xn, y);
          if (!contains(dw, z) && !contains(dsw, z))
            return BNFailure{"BN3", "BsBwB ⊄ BwB ∪ BswB for s" + std::to_string(k + 1) + ", w" + std::to_string(w)};
        }
      }
    }
    const auto ns = ts.n_of_w[s];
    ElementSet conj;
    for (auto x : ts.B) conj.push_back(g.mul(g.mul(ns, x), ns));
    if (sorted_unique(std::move(conj)) == ts.B) return BNFailure{"BN4", "sBs = B for s" + std::to_string(k + 1)};
  }
  if (ts.rank() == 0) return BNFailure{"BN4", "S is empty"};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parabolics, Bruhat decomposition, building

ElementSet parabolic(const TitsSystem& ts, const std::vector<std::size_t>& subset) {
  const auto& g = ts.G.group();
  auto gens = generating_set(g, ts.B);
  for (auto i : subset) {
    require(i < ts.rank(), "parabolic: index " + std::to_string(i) + " is not in S");
    gens.push_back(ts.n_of_w[ts.W.generator(i)]);
  }
  return subgroup_closure(g, gens);
}

BruhatDecomposition bruhat(const TitsSystem& ts) {
  const auto& g = ts.G.group();
  BruhatDecomposition out;
  out.cells = ts.cells;
  out.cell_of.assign(g.order(), kNone);
  for (std::size_t w = 0; w < out.cells.size(); ++w)
    for (auto x : out.cells[w]) {
      if (out.cell_of[x] != kNone)
        throw VerificationError("Bruhat cells of w" + std::to_string(out.cell_of[x]) + " and w" + std::to_string(w) +
                                " share " + ts.G.format(x));
      out.cell_of[x] = static_cast<Element>(w);
    }
  for (std::size_t x = 0; x < g.order(); ++x)
    if (out.cell_of[x] == kNone) throw VerificationError("element " + ts.G.format(static_cast<Element>(x)) + " lies in no Bruhat cell");
  if (out.cells[0] != ts.B) throw VerificationError("the identity cell is not B");

  const std::size_t r = ts.rank();
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    std::vector<std::size_t> subset;
    std::vector<Element> w_gens;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) {
        subset.push_back(i);
        w_gens.push_back(ts.W.generator(i));
      }
    ElementSet cells_union;
    for (auto w : subgroup_closure(ts.W, w_gens))
      cells_union.insert(cells_union.end(), out.cells[w].begin(), out.cells[w].end());
    std::sort(cells_union.begin(), cells_union.end());
    if (cells_union != parabolic(ts, subset))
      throw VerificationError("P_I is not the union of the Bruhat cells of W_I for I of mask " + std::to_string(mask));
  }
  return out;
}

CosetGeometry coset_geometry(const TitsSystem& ts) {
  std::vector<ElementSet> subgroups;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ts.rank(); ++i) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < ts.rank(); ++j)
      if (j != i) others.push_back(j);
    subgroups.push_back(parabolic(ts, others));
    names.push_back("s" + std::to_string(i + 1));
  }
  return coset_geometry(ts.G.group(), subgroups, std::move(names));
}

KernelReport kernel_saturation(const TitsSystem& ts) {
  const auto& g = ts.G.group();
  std::size_t count = 0;
  const auto index = left_coset_index(g, ts.B, &count);
  std::vector<Element> reps(count, kNone);
  for (std::size_t x = 0; x < index.size(); ++x)
    if (reps[index[x]] == kNone) reps[index[x]] = static_cast<Element>(x);

  KernelReport out;
  for (auto b : ts.B) {
    if (std::all_of(reps.begin(), reps.end(), [&](Element r) { return contains(ts.B, conj_inv(g, r, b)); }))
      out.K.push_back(b);
    if (std::all_of(ts.n_of_w.begin(), ts.n_of_w.end(), [&](Element r) { return contains(ts.B, conj_inv(g, r, b)); }))
      out.E.push_back(b);
  }
  ElementSet ne;
  for (auto x : ts.N)
    for (auto e : out.E) ne.push_back(g.mul(x, e));
  out.effective = out.K.size() == 1;
  out.saturated = sorted_unique(std::move(ne)) == ts.N;
  return out;
}

bool chamber_transitivity(const TitsSystem& ts) {
  const auto& g = ts.G.group();
  const auto cg = coset_geometry(ts);
  const auto reps = object_representatives(cg);
  Flag standard;
  for (const auto& per_type : cg.object_of) standard.push_back(per_type[0]);
  std::sort(standard.begin(), standard.end());

  std::set<Flag> orbit{standard};
  std::vector<Flag> queue{standard};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (auto s : g.generators()) {
      Flag f;
      for (auto x : queue[head]) f.push_back(translate(ts, cg, reps, s, x));
      std::sort(f.begin(), f.end());
      if (orbit.insert(f).second) queue.push_back(std::move(f));
    }
  const auto all = chambers(cg.geometry);
  if (orbit != std::set<Flag>(all.begin(), all.end())) return false;

  ElementSet stabilizer;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool fixes = true;
    for (const auto& per_type : cg.object_of)
      if (per_type[x] != per_type[0]) fixes = false;
    if (fixes) stabilizer.push_back(static_cast<Element>(x));
  }
  return stabilizer == ts.B;
}

ApartmentEmbedding apartment_embedding(const TitsSystem& ts) {
  const auto& g = ts.G.group();
  const auto cc = coxeter_complex_cosets(ts.W);
  const auto cg = coset_geometry(ts);
  const auto reps = object_representatives(cg);

  ApartmentEmbedding out;
  out.complex = cc.geometry;
  out.image.assign(cc.geometry.size(), kNone);
  for (std::size_t t = 0; t < cc.object_of.size(); ++t)
    for (std::size_t w = 0; w < ts.W.order(); ++w) {
      const auto y = cc.object_of[t][w];
      const auto x = cg.object_of[t][ts.n_of_w[w]];
      if (out.image[y] == kNone)
        out.image[y] = x;
      else if (out.image[y] != x)
        throw VerificationError("apartment map is not well defined on complex object " + std::to_string(y));
    }
  std::vector<Geometry::Object> seen(cg.geometry.size(), kNone);
  for (std::size_t y = 0; y < out.image.size(); ++y) {
    if (seen[out.image[y]] != kNone)
      throw VerificationError("complex objects " + std::to_string(seen[out.image[y]]) + " and " + std::to_string(y) +
                              " have the same image");
    seen[out.image[y]] = static_cast<Geometry::Object>(y);
  }
  for (std::size_t a = 0; a < out.image.size(); ++a)
    for (std::size_t b = a + 1; b < out.image.size(); ++b)
      if (cc.geometry.incident(static_cast<Geometry::Object>(a), static_cast<Geometry::Object>(b)) !=
          cg.geometry.incident(out.image[a], out.image[b]))
        throw VerificationError("apartment map does not preserve incidence of complex objects " + std::to_string(a) +
                                " and " + std::to_string(b));

  out.apartment = cg.geometry.induced(out.image);
  if (!is_thin(out.apartment)) throw VerificationError("apartment image is not thin");
  if (!isomorphic(out.complex, out.apartment)) throw VerificationError("apartment image is not isomorphic to the Coxeter complex");

  auto stabilizers = generating_set(g, ts.N);
  const auto kernel = kernel_saturation(ts);
  stabilizers.insert(stabilizers.end(), kernel.E.begin(), kernel.E.end());
  for (auto s : stabilizers)
    for (auto x : out.image)
      if (seen[translate(ts, cg, reps, s, x)] == kNone)
        throw VerificationError(ts.G.format(s) + " moves building object " + std::to_string(x) + " off the apartment");
  return out;
}

bool sharply_transitive_check(const EnumeratedGroup& g, const PermutationAction& action) {
  action_images(g, action);
  if (g.order() != action.degree || action.degree == 0) return false;
  std::vector<char> seen(action.degree, 0);
  std::vector<std::uint32_t> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& p : action.generator_images)
      if (!seen[p[queue[head]]]) {
        seen[p[queue[head]]] = 1;
        queue.push_back(p[queue[head]]);
      }
  return queue.size() == action.degree;
}

GLInstance builtin_gl(std::size_t n, unsigned p, std::size_t bound) {
  require(n >= 1, "GL_n needs n >= 1");
  require(is_prime(p), "GL_n(F_p) needs a prime p, got " + std::to_string(p));
  const auto omega = FqField(p, 1).primitive_root().code;
  auto elementary = [n](std::size_t i, std::size_t j) {
    auto m = matrix_identity(n);
    m[i * n + j] = 1;
    return m;
  };
  auto diagonal = [n, omega](std::size_t i) {
    auto m = matrix_identity(n);
    m[i * n + i] = omega;
    return m;
  };
  auto swap = [n](std::size_t i) {
    auto m = matrix_identity(n);
    m[i * n + i] = m[(i + 1) * n + i + 1] = 0;
    m[i * n + i + 1] = m[(i + 1) * n + i] = 1;
    return m;
  };

  std::vector<Tuple> g_gens, b_gens, n_gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) g_gens.push_back(elementary(i, j));
  for (std::size_t i = 0; i + 1 < n; ++i) n_gens.push_back(swap(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b_gens.push_back(elementary(i, j));
  if (p > 2) {
    g_gens.push_back(diagonal(0));
    for (std::size_t i = 0; i < n; ++i) {
      b_gens.push_back(diagonal(i));
      n_gens.push_back(diagonal(i));
    }
  }
  GLInstance out;
  out.G = ConcreteGroup::matrices(p, n, g_gens, bound);
  out.B = subgroup_generated(out.G, b_gens);
  out.N = subgroup_generated(out.G, n_gens);
  return out;
}

nlohmann::json report_json(const TitsSystem& ts) {
  const auto br = bruhat(ts);
  const auto ks = kernel_saturation(ts);
  nlohmann::json cells = nlohmann::json::array();
  std::vector<std::size_t> sizes;
  for (std::size_t w = 0; w < br.cells.size(); ++w) {
    cells.push_back({{"w", ts.W.word(static_cast<Element>(w))}, {"size", br.cells[w].size()}});
    sizes.push_back(br.cells[w].size());
  }
  nlohmann::json j;
  j["order_G"] = ts.G.order();
  j["order_K"] = ks.K.size();
  j["order_G_mod_K"] = ts.G.order() / ks.K.size();
  j["order_B"] = ts.B.size();
  j["order_N"] = ts.N.size();
  j["order_H"] = ts.H.size();
  j["order_E"] = ks.E.size();
  j["W_order"] = ts.W.order();
  j["S_size"] = ts.rank();
  j["coxeter_matrix"] = ts.coxeter.entries();
  j["axioms"] = {{"BN1", true}, {"BN2", true}, {"BN3", true}, {"BN4", true}};
  j["cells"] = cells;
  j["cell_sizes"] = sizes;
  j["effective"] = ks.effective;
  j["saturated"] = ks.saturated;
  return j;
}

BuildingClaim building_claim(const TitsSystem& ts) { return BuildingClaim{coset_geometry(ts).geometry, ts.W}; }

}  // namespace f1
