#include "f1/incidence.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <set>

#include "f1/qnum.hpp"

namespace f1 {

using Object = Geometry::Object;
using Pairs = std::vector<std::pair<Object, Object>>;

std::string subspace_type_name(std::size_t dimension) {
  static const char* names[] = {"point", "line", "plane", "solid"};
  return dimension < 4 ? names[dimension] : "dim" + std::to_string(dimension);
}

namespace {

void require_rank2(const Geometry& g, const char* what) {
  require(g.rank() == 2, std::string(what) + " needs a rank-2 geometry");
}

// Cycle construction shared by ordinary_ngon and the 2-gon image.
Geometry polygon(std::uint32_t m) {
  std::vector<std::uint32_t> types(2 * m, 0);
  std::fill(types.begin() + m, types.end(), 1u);
  Pairs inc;
  for (std::uint32_t i = 0; i < m; ++i) {
    inc.emplace_back(i, m + i);
    inc.emplace_back((i + 1) % m, m + i);
  }
  return Geometry({"point", "line"}, types, inc);
}

}  // namespace

std::optional<GPReport> gp_recognize(const Geometry& g) {
  require_rank2(g, "gp_recognize");
  const std::size_t n = g.size();
  if (n == 0) return std::nullopt;
  for (Object x = 0; x < n; ++x)
    if (g.neighbors(x).size() < 2) return std::nullopt;
  for (auto [x, y] : g.incidences())
    if (g.type(x) == g.type(y)) return std::nullopt;

  std::size_t girth = SIZE_MAX, diameter = 0;
  std::vector<std::size_t> dist(n), parent(n);
  for (Object src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[src] = 0;
    parent[src] = src;
    std::queue<Object> queue;
    queue.push(src);
    std::size_t reached = 1;
    while (!queue.empty()) {
      const Object x = queue.front();
      queue.pop();
      diameter = std::max(diameter, dist[x]);
      for (auto y : g.neighbors(x)) {
        if (dist[y] == SIZE_MAX) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          ++reached;
          queue.push(y);
        } else if (parent[x] != y) {
          girth = std::min(girth, dist[x] + dist[y] + 1);
        }
      }
    }
    if (reached != n) return std::nullopt;
  }
  if (girth == SIZE_MAX || girth != 2 * diameter) return std::nullopt;

  std::optional<std::size_t> lines_per_point, points_per_line;
  for (Object x = 0; x < n; ++x) {
    auto& slot = g.type(x) == 0 ? lines_per_point : points_per_line;
    const std::size_t deg = g.neighbors(x).size();
    if (slot && *slot != deg) return std::nullopt;
    slot = deg;
  }
  if (!lines_per_point || !points_per_line) return std::nullopt;
  GPReport r;
  r.n = static_cast<std::uint32_t>(diameter);
  r.s = *points_per_line - 1;
  r.t = *lines_per_point - 1;
  r.thin = r.s == 1 || r.t == 1;
  r.thick = r.s >= 2 && r.t >= 2;
  return r;
}

Geometry dualize(const Geometry& g) {
  require_rank2(g, "dualize");
  std::vector<std::uint32_t> types;
  for (auto t : g.types()) types.push_back(1 - t);
  return Geometry({g.type_names()[1], g.type_names()[0]}, types, g.incidences());
}

Geometry ordinary_ngon(std::uint32_t m) {
  require(m >= 3, "an ordinary m-gon needs m >= 3");
  return polygon(m);
}

Geometry gq22_model() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) pairs.emplace_back(a, b);
  auto pair_id = [&](int a, int b) {
    return static_cast<Object>(std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin());
  };
  // Partitions {0,a}{b,c}{d,e} with b < d.
  std::vector<std::array<Object, 3>> lines;
  for (int a = 1; a < 6; ++a) {
    std::vector<int> rest;
    for (int x = 1; x < 6; ++x)
      if (x != a) rest.push_back(x);
    for (int k = 1; k < 4; ++k) {
      std::vector<int> other;
      for (int i = 1; i < 4; ++i)
        if (i != k) other.push_back(rest[i]);
      lines.push_back({pair_id(0, a), pair_id(rest[0], rest[k]), pair_id(other[0], other[1])});
    }
  }
  std::vector<std::uint32_t> types(15, 0);
  types.resize(30, 1);
  Pairs inc;
  for (std::size_t l = 0; l < lines.size(); ++l)
    for (auto p : lines[l]) inc.emplace_back(p, static_cast<Object>(15 + l));
  return Geometry({"point", "line"}, types, inc);
}

std::string Rank2Label::name() const {
  switch (kind) {
    case Kind::Di2:
      return "Di_2";
    case Kind::A2:
      return "A_2";
    case Kind::B2:
      return "B_2";
    case Kind::I2:
      return "I_2(" + std::to_string(m) + ")";
    case Kind::Af:
      return "Af";
    case Kind::U:
      return "U";
    default:
      return "Unclassified";
  }
}

Rank2Label rank2_f1_classify(const Geometry& g) {
  using K = Rank2Label::Kind;
  require_rank2(g, "rank2_f1_classify");
  for (Object x = 0; x < g.size(); ++x)
    require(g.neighbors(x).size() <= 2, "rank-2 F1 catalog needs every object incident with at most two others");
  if (!validate(g).valid || !is_connected(g)) return {K::Unclassified, 0};
  std::size_t leaves = 0;
  for (Object x = 0; x < g.size(); ++x) leaves += g.neighbors(x).size() <= 1;
  if (leaves == 0) {
    const auto m = static_cast<std::uint32_t>(g.size() / 2);
    if (m == 2) return {K::Di2, 0};
    if (m == 3) return {K::A2, 0};
    if (m == 4) return {K::B2, 0};
    return {K::I2, m};
  }
  if (g.size() == 3 && g.objects_of_type(0).size() == 1) return {K::Af, 0};
  return {K::U, 0};
}

// ---------------------------------------------------------------------------

Geometry pg_f1(int n, std::size_t max_objects) {
  require(n >= -1, "pg_f1 needs n >= -1");
  if (n == -1) return Geometry({}, {}, {});
  if (n == 0) return Geometry({"point"}, {0}, {});
  require(n < 20, "pg_f1 dimension too large");
  const std::uint32_t full = (1u << (n + 1)) - 1;
  if (static_cast<std::size_t>(full) - 1 > max_objects)
    throw ResourceError("pg_f1(" + std::to_string(n) + ") exceeds the object bound " + std::to_string(max_objects));
  // Proper nonempty subsets ordered by size, then by the sorted element list.
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask < full; ++mask) masks.push_back(mask);
  auto elements = [](std::uint32_t mask) {
    std::vector<int> e;
    for (int i = 0; mask; ++i, mask >>= 1)
      if (mask & 1) e.push_back(i);
    return e;
  };
  std::sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return elements(a) < elements(b);
  });
  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) names.push_back(subspace_type_name(k));
  std::vector<std::uint32_t> types;
  for (auto m : masks) types.push_back(static_cast<std::uint32_t>(__builtin_popcount(m) - 1));
  Pairs inc;
  for (std::size_t a = 0; a < masks.size(); ++a)
    for (std::size_t b = a + 1; b < masks.size(); ++b)
      if (masks[a] != masks[b] && (masks[a] & masks[b]) == masks[a])
        inc.emplace_back(static_cast<Object>(a), static_cast<Object>(b));
  return Geometry(names, types, inc);
}

Quadric quadric_f1(std::uint32_t n, bool even_dimension, std::size_t max_objects) {
  require(n < 15, "quadric_f1 dimension too large");
  std::size_t total = 1;
  for (std::uint32_t i = 0; i <= n; ++i) total *= 3;
  if (total - 1 > max_objects)
    throw ResourceError("quadric_f1(" + std::to_string(n) + ") exceeds the object bound " + std::to_string(max_objects));
  // Each pair contributes nothing, x_i or y_i: base-3 digits.
  Quadric q;
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<std::uint32_t> s;
    std::size_t c = code;
    for (std::uint32_t i = 0; i <= n; ++i, c /= 3)
      if (c % 3) s.push_back(2 * i + static_cast<std::uint32_t>(c % 3 - 1));
    q.subsets.push_back(std::move(s));
  }
  std::sort(q.subsets.begin(), q.subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<std::string> names;
  for (std::uint32_t k = 0; k <= n; ++k) names.push_back("dim" + std::to_string(k));
  if (even_dimension) {
    names.back() = "dim" + std::to_string(n) + "+even";
    names.push_back("dim" + std::to_string(n) + "+odd");
  }
  std::vector<std::uint32_t> types;
  for (const auto& s : q.subsets) {
    auto t = static_cast<std::uint32_t>(s.size() - 1);
    if (even_dimension && t == n) {
      const auto xs = std::count_if(s.begin(), s.end(), [](std::uint32_t p) { return p % 2 == 0; });
      if (xs % 2) t = n + 1;
    }
    types.push_back(t);
  }
  Pairs inc;
  for (std::size_t a = 0; a < q.subsets.size(); ++a)
    for (std::size_t b = a + 1; b < q.subsets.size(); ++b)
      if (q.subsets[a].size() < q.subsets[b].size() &&
          std::includes(q.subsets[b].begin(), q.subsets[b].end(), q.subsets[a].begin(), q.subsets[a].end()))
        inc.emplace_back(static_cast<Object>(a), static_cast<Object>(b));
  q.geometry = Geometry(std::move(names), std::move(types), inc);
  return q;
}

// ---------------------------------------------------------------------------

namespace {

// Vectors of F_q^d encoded as base-q integers of field element codes.
struct VectorSpace {
  std::size_t d;
  unsigned q;
  FqField field;
  std::uint32_t size = 1;
  std::vector<std::uint32_t> add_table, mul_table;  // on field codes

  VectorSpace(std::size_t dim, unsigned order, unsigned p, unsigned e) : d(dim), q(order), field(p, e) {
    for (std::size_t i = 0; i < d; ++i) size *= q;
    add_table.resize(q * q);
    mul_table.resize(q * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        add_table[a * q + b] = field.add({a}, {b}).code;
        mul_table[a * q + b] = field.mul({a}, {b}).code;
      }
  }
  std::vector<std::uint32_t> decode(std::uint32_t v) const {
    std::vector<std::uint32_t> c(d);
    for (auto& x : c) {
      x = v % q;
      v /= q;
    }
    return c;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& c) const {
    std::uint32_t v = 0;
    for (std::size_t i = d; i-- > 0;) v = v * q + c[i];
    return v;
  }
  std::uint32_t add(std::uint32_t u, std::uint32_t v) const {
    auto a = decode(u), b = decode(v);
    for (std::size_t i = 0; i < d; ++i) a[i] = add_table[a[i] * q + b[i]];
    return encode(a);
  }
  std::uint32_t scale(std::uint32_t c, std::uint32_t v) const {
    auto a = decode(v);
    for (auto& x : a) x = mul_table[c * q + x];
    return encode(a);
  }
  std::uint32_t normalize(std::uint32_t v) const {
    auto a = decode(v);
    for (auto x : a)
      if (x != 0) return scale(field.inv({x}).code, v);
    return 0;
  }
  // Span of a subspace (all vectors, sorted) and one more vector.
  std::vector<std::uint32_t> span(const std::vector<std::uint32_t>& sub, std::uint32_t v) const {
    std::set<std::uint32_t> out;
    for (auto s : sub)
      for (std::uint32_t c = 0; c < q; ++c) out.insert(add(s, scale(c, v)));
    return {out.begin(), out.end()};
  }
};

}  // namespace

ProjectiveGeometry pg_fq(int n, unsigned q, std::size_t max_objects) {
  require(n >= -1, "pg_fq needs n >= -1");
  const auto [p, e] = prime_power(q);
  require(p != 0, "pg_fq needs a prime power q, got " + std::to_string(q));
  ProjectiveGeometry pg;
  pg.n = n;
  pg.q = q;
  if (n == -1) {
    pg.geometry = Geometry({}, {}, {});
    return pg;
  }
  {
    BigInt count = 0;
    for (int k = 0; k < std::max(n, 1); ++k)
      count += eval(gaussian_binomial(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(k + 1)), q);
    if (count > max_objects)
      throw ResourceError("PG(" + std::to_string(n) + "," + std::to_string(q) + ") has " + count.str() +
                          " subspaces, above the bound " + std::to_string(max_objects));
  }
  VectorSpace vs(static_cast<std::size_t>(n + 1), q, p, e);
  std::vector<std::uint32_t> point_of(vs.size, static_cast<std::uint32_t>(-1));
  for (std::uint32_t v = 1; v < vs.size; ++v)
    if (vs.normalize(v) == v) {
      point_of[v] = static_cast<std::uint32_t>(pg.points.size());
      pg.points.push_back(vs.decode(v));
    }
  auto points_in = [&](const std::vector<std::uint32_t>& sub) {
    std::vector<std::uint32_t> pts;
    for (auto v : sub)
      if (v != 0 && point_of[v] != static_cast<std::uint32_t>(-1)) pts.push_back(point_of[v]);
    std::sort(pts.begin(), pts.end());
    return pts;
  };

  // Subspaces of each projective dimension, grown one vector at a time.
  const int top = std::max(n - 1, 0);
  std::vector<std::set<std::vector<std::uint32_t>>> layers(static_cast<std::size_t>(top + 1));
  for (std::uint32_t v = 1; v < vs.size; ++v)
    if (point_of[v] != static_cast<std::uint32_t>(-1)) layers[0].insert(vs.span({0}, v));
  for (int k = 1; k <= top; ++k)
    for (const auto& sub : layers[k - 1])
      for (std::uint32_t v = 1; v < vs.size; ++v)
        if (point_of[v] != static_cast<std::uint32_t>(-1) && !std::binary_search(sub.begin(), sub.end(), v))
          layers[k].insert(vs.span(sub, v));

  std::vector<std::string> names;
  std::vector<std::uint32_t> types;
  for (int k = 0; k <= top; ++k) {
    names.push_back(subspace_type_name(static_cast<std::size_t>(k)));
    std::vector<std::vector<std::uint32_t>> sets;
    for (const auto& sub : layers[k]) sets.push_back(points_in(sub));
    std::sort(sets.begin(), sets.end());
    for (auto& s : sets) {
      pg.point_sets.push_back(std::move(s));
      types.push_back(static_cast<std::uint32_t>(k));
    }
  }
  Pairs inc;
  for (std::size_t a = 0; a < pg.point_sets.size(); ++a)
    for (std::size_t b = a + 1; b < pg.point_sets.size(); ++b)
      if (types[a] < types[b] && std::includes(pg.point_sets[b].begin(), pg.point_sets[b].end(),
                                               pg.point_sets[a].begin(), pg.point_sets[a].end()))
        inc.emplace_back(static_cast<Object>(a), static_cast<Object>(b));
  pg.geometry = Geometry(std::move(names), std::move(types), inc);
  return pg;
}

Geometry apartment_of(const ProjectiveGeometry& pg, const std::vector<std::vector<std::uint32_t>>& frame_in) {
  require(pg.n >= 0, "the empty projective space has no apartment");
  const auto d = static_cast<std::size_t>(pg.n + 1);
  const auto [p, e] = prime_power(pg.q);
  VectorSpace vs(d, pg.q, p, e);
  std::vector<std::vector<std::uint32_t>> frame = frame_in;
  if (frame.empty())
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<std::uint32_t> v(d, 0);
      v[i] = 1;
      frame.push_back(v);
    }
  require(frame.size() == d, "a frame of PG(n,q) has n+1 vectors");
  std::vector<std::uint32_t> codes;
  for (const auto& v : frame) {
    require(v.size() == d, "frame vector has the wrong length");
    for (auto c : v) require(c < pg.q, "frame coordinate is not a field element code");
    codes.push_back(vs.encode(v));
  }
  std::map<std::vector<std::uint32_t>, Object> object_of;
  for (Object x = 0; x < pg.point_sets.size(); ++x) object_of.emplace(pg.point_sets[x], x);
  std::vector<std::uint32_t> point_of(vs.size, static_cast<std::uint32_t>(-1));
  for (std::uint32_t i = 0; i < pg.points.size(); ++i) point_of[vs.encode(pg.points[i])] = i;

  std::vector<std::uint32_t> whole{0};
  for (auto c : codes) whole = vs.span(whole, c);
  require(whole.size() == vs.size, "frame vectors do not form a basis");

  std::vector<Object> objects;
  const std::uint32_t full = (1u << d) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (mask == full && d > 1) continue;
    std::vector<std::uint32_t> sub{0};
    for (std::size_t i = 0; i < d; ++i)
      if (mask >> i & 1) sub = vs.span(sub, codes[i]);
    std::vector<std::uint32_t> pts;
    for (auto v : sub)
      if (v != 0 && point_of[v] != static_cast<std::uint32_t>(-1)) pts.push_back(point_of[v]);
    std::sort(pts.begin(), pts.end());
    auto it = object_of.find(pts);
    if (it == object_of.end()) throw VerificationError("spanned subspace missing from the projective space");
    objects.push_back(it->second);
  }
  std::sort(objects.begin(), objects.end());
  return pg.geometry.induced(objects);
}

// ---------------------------------------------------------------------------

BTDiagram path_diagram(std::size_t rank) {
  BTDiagram d;
  d.rank = rank;
  for (std::uint32_t i = 0; i + 1 < rank; ++i) d.labels[{i, i + 1}] = "A_2";
  return d;
}

BTDiagram bt_diagram_of(const CoxeterMatrix& m) {
  BTDiagram d;
  d.rank = m.size();
  for (std::uint32_t i = 0; i < m.size(); ++i)
    for (std::uint32_t j = i + 1; j < m.size(); ++j) {
      const auto v = m(i, j);
      require(v != CoxeterMatrix::kInfinity, "no diagram label for an infinite Coxeter entry");
      d.labels[{i, j}] = v == 2 ? "Di" : v == 3 ? "A_2" : v == 4 ? "B_2" : "I_2(" + std::to_string(v) + ")";
    }
  return d;
}

namespace {

// Lines as point sets; type 0 is points.
std::vector<std::vector<Object>> lines_as_sets(const Geometry& g) {
  std::vector<std::vector<Object>> lines;
  for (auto l : g.objects_of_type(1)) lines.push_back(g.neighbors(l));
  return lines;
}

bool is_complete_graph(const Geometry& g) {
  const auto points = g.objects_of_type(0);
  if (points.size() < 3) return false;
  std::set<std::pair<Object, Object>> edges;
  for (const auto& l : lines_as_sets(g)) {
    if (l.size() != 2) return false;
    if (!edges.emplace(l[0], l[1]).second) return false;
  }
  return edges.size() == points.size() * (points.size() - 1) / 2;
}

bool is_affine_plane(const Geometry& g) {
  const auto points = g.objects_of_type(0);
  const auto lines = lines_as_sets(g);
  std::map<std::pair<Object, Object>, int> joins;
  for (const auto& l : lines)
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = a + 1; b < l.size(); ++b) ++joins[{l[a], l[b]}];
  if (joins.size() != points.size() * (points.size() - 1) / 2) return false;
  for (const auto& [pair, count] : joins)
    if (count != 1) return false;
  // Playfair: one parallel through every point off a line.
  for (const auto& l : lines)
    for (auto p : points) {
      if (std::binary_search(l.begin(), l.end(), p)) continue;
      int parallels = 0;
      for (const auto& m : lines) {
        if (!std::binary_search(m.begin(), m.end(), p)) continue;
        std::vector<Object> common;
        std::set_intersection(l.begin(), l.end(), m.begin(), m.end(), std::back_inserter(common));
        parallels += common.empty();
      }
      if (parallels != 1) return false;
    }
  // Three points not on one line.
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      for (std::size_t c = b + 1; c < points.size(); ++c) {
        bool collinear = false;
        for (const auto& l : lines)
          if (std::binary_search(l.begin(), l.end(), points[a]) && std::binary_search(l.begin(), l.end(), points[b]) &&
              std::binary_search(l.begin(), l.end(), points[c]))
            collinear = true;
        if (!collinear) return true;
      }
  return false;
}

std::optional<std::uint32_t> parse_gonality(const std::string& label) {
  if (label == "A_2" || label == "A2") return 3;
  if (label == "B_2" || label == "B2" || label == "C_2" || label == "C2") return 4;
  for (const std::string prefix : {"I_2(", "I2("})
    if (label.rfind(prefix, 0) == 0 && label.back() == ')') {
      const auto body = label.substr(prefix.size(), label.size() - prefix.size() - 1);
      require(!body.empty() && body.size() < 6 && std::all_of(body.begin(), body.end(), ::isdigit),
              "bad label " + label);
      return static_cast<std::uint32_t>(std::stoul(body));
    }
  return std::nullopt;
}

void check_label(const std::string& label) {
  require(label == "Di" || label == "C" || label == "Af" || parse_gonality(label).has_value(),
          "unknown diagram label '" + label + "'");
}

}  // namespace

bool matches_label(const Geometry& g, const std::string& label) {
  require_rank2(g, "matches_label");
  check_label(label);
  if (label == "Di") {
    const auto a = g.objects_of_type(0), b = g.objects_of_type(1);
    if (a.empty() || b.empty()) return false;
    for (auto x : a)
      for (auto y : b)
        if (!g.incident(x, y)) return false;
    return true;
  }
  if (label == "C") return is_complete_graph(g);
  if (label == "Af") return is_affine_plane(g);
  const auto report = gp_recognize(g);
  return report && report->n == *parse_gonality(label);
}

DiagramReport diagram_check(const Geometry& g, const BTDiagram& d) {
  require(d.rank == g.rank(), "diagram rank differs from the geometry's rank");
  for (const auto& [key, label] : d.labels) {
    require(key.first < d.rank && key.second < d.rank && key.first != key.second, "diagram label on a bad type pair");
    check_label(label);
  }
  DiagramReport report;
  if (g.rank() < 2) return report;
  for (const auto& flag : flags_of_size(g, g.rank() - 2)) {
    std::vector<char> used(g.rank(), 0);
    for (auto x : flag) used[g.type(x)] = 1;
    std::vector<std::uint32_t> free;
    for (std::uint32_t t = 0; t < g.rank(); ++t)
      if (!used[t]) free.push_back(t);
    const std::uint32_t i = free[0], j = free[1];
    auto res = residue(g, flag);  // types i, j in that order
    std::string label = "Di";
    if (auto it = d.labels.find({i, j}); it != d.labels.end()) {
      label = it->second;
    } else if (auto jt = d.labels.find({j, i}); jt != d.labels.end()) {
      label = jt->second;
      res = dualize(res);
    }
    DiagramReport::Entry e{flag, i, j, label, matches_label(res, label)};
    report.pass = report.pass && e.pass;
    report.entries.push_back(std::move(e));
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

void claim(bool ok, const std::string& what) {
  if (!ok) throw VerificationError("weyl_image: " + what);
}

Geometry image_of(const ProjectiveSpaceClaim& c) {
  const auto& g = c.geometry;
  require(c.n >= -1, "projective dimension must be >= -1");
  auto target = pg_f1(c.n);
  if (c.q == 1) {
    claim(isomorphic(g, target), "geometry is not PG(" + std::to_string(c.n) + ", F1)");
    return target;
  }
  require(prime_power(c.q).first != 0, "projective space order must be 1 or a prime power");
  claim(validate(g).valid, "geometry is not a valid incidence geometry");
  claim(g.rank() == target.rank(), "rank differs from that of PG(n,q)");
  for (std::size_t k = 0; k < g.rank(); ++k) {
    const BigInt expected =
        c.n == 0 ? BigInt(1) : eval(gaussian_binomial(static_cast<std::size_t>(c.n + 1), k + 1), c.q);
    claim(BigInt(g.objects_of_type(static_cast<std::uint32_t>(k)).size()) == expected,
          "type " + std::to_string(k) + " count is not the Gaussian binomial");
  }
  claim(diagram_check(g, path_diagram(g.rank())).pass, "residues do not follow the A_n diagram");
  claim(g.rank() < 2 || residually_connected(g), "geometry is not residually connected");
  return target;
}

Geometry image_of(const PolygonClaim& c) {
  require(c.geometry.rank() == 2, "a generalized polygon has rank 2");
  auto report = gp_recognize(c.geometry);
  claim(report.has_value(), "geometry is not a generalized polygon");
  return polygon(report->n);
}

Geometry image_of(const BuildingClaim& c) {
  const auto& w = c.weyl;
  const std::size_t r = w.generator_count();
  claim(c.geometry.rank() == r, "building rank differs from the number of Weyl generators");
  claim(validate(c.geometry).valid, "building is not a valid incidence geometry");
  for (std::size_t i = 0; i < r; ++i)
    claim(w.element_order(w.generator(i)) == 2, "Weyl generator is not an involution");
  const CoxeterMatrix cm = coxeter_matrix_of(w);
  if (r >= 1)
    for (const auto& f : flags_of_size(c.geometry, r - 1))
      claim(residue_objects(c.geometry, f).size() >= 2, "a panel lies in fewer than two chambers");
  claim(diagram_check(c.geometry, bt_diagram_of(cm)).pass, "building residues do not follow the Coxeter diagram");
  claim(r < 2 || residually_connected(c.geometry), "building is not residually connected");
  return coxeter_complex(w, cm);
}

Geometry image_of(const ThinClaim& c) {
  const auto& g = c.geometry;
  claim(validate(g).valid, "geometry is not a valid incidence geometry");
  if (is_thin(g)) return g;
  bool catalog = false;
  if (g.rank() == 2) {
    bool small = true;
    for (Object x = 0; x < g.size(); ++x) small = small && g.neighbors(x).size() <= 2;
    if (small) {
      const auto k = rank2_f1_classify(g).kind;
      catalog = k == Rank2Label::Kind::Af || k == Rank2Label::Kind::U;
    }
  }
  claim(catalog, "geometry is neither thin nor an F1 catalog member");
  return g;
}

}  // namespace

Geometry weyl_image(const WeylInput& input) {
  return std::visit([](const auto& c) { return image_of(c); }, input);
}

}  // namespace f1
