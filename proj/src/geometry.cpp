#include "f1/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "f1/errors.hpp"

namespace f1 {

Geometry::Geometry(std::vector<std::string> type_names, std::vector<std::uint32_t> types,
                   const std::vector<std::pair<Object, Object>>& incidences)
    : type_names_(std::move(type_names)), types_(std::move(types)), adj_(types_.size()) {
  for (auto t : types_) require(t < type_names_.size(), "object type index out of range");
  for (auto [x, y] : incidences) {
    require(x < size() && y < size(), "incidence refers to an unknown object");
    if (x == y) {
      ++self_loops_;
      continue;
    }
    adj_[x].push_back(y);
    adj_[y].push_back(x);
  }
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
}

bool Geometry::incident(Object x, Object y) const {
  return std::binary_search(adj_[x].begin(), adj_[x].end(), y);
}

std::vector<std::pair<Geometry::Object, Geometry::Object>> Geometry::incidences() const {
  std::vector<std::pair<Object, Object>> out;
  for (Object x = 0; x < size(); ++x)
    for (auto y : adj_[x])
      if (x < y) out.emplace_back(x, y);
  return out;
}

std::vector<Geometry::Object> Geometry::objects_of_type(std::uint32_t t) const {
  std::vector<Object> out;
  for (Object x = 0; x < size(); ++x)
    if (types_[x] == t) out.push_back(x);
  return out;
}

Geometry Geometry::induced(const std::vector<Object>& objects) const {
  std::vector<Object> local(size(), static_cast<Object>(-1));
  std::vector<std::uint32_t> types;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    local[objects[i]] = static_cast<Object>(i);
    types.push_back(types_[objects[i]]);
  }
  std::vector<std::pair<Object, Object>> inc;
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (auto y : adj_[objects[i]])
      if (local[y] != static_cast<Object>(-1) && local[y] > i) inc.emplace_back(static_cast<Object>(i), local[y]);
  return Geometry(type_names_, std::move(types), inc);
}

// ---------------------------------------------------------------------------

namespace {

bool connected_on(const Geometry& g, const std::vector<Geometry::Object>& objects) {
  if (objects.empty()) return false;
  std::vector<char> member(g.size(), 0), seen(g.size(), 0);
  for (auto x : objects) member[x] = 1;
  std::vector<Geometry::Object> stack{objects.front()};
  seen[objects.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (auto y : g.neighbors(x))
      if (member[y] && !seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == objects.size();
}

void extend_flags(const Geometry& g, Flag& current, Geometry::Object start, std::size_t target,
                  const std::function<void(const Flag&)>& emit) {
  if (current.size() == target) {
    emit(current);
    return;
  }
  for (Geometry::Object y = start; y < g.size(); ++y) {
    bool ok = true;
    for (auto x : current)
      if (!g.incident(x, y)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    current.push_back(y);
    extend_flags(g, current, y + 1, target, emit);
    current.pop_back();
  }
}

}  // namespace

ValidationReport validate(const Geometry& g) {
  ValidationReport r;
  std::vector<char> used(g.rank(), 0);
  for (auto t : g.types()) used[t] = 1;
  for (std::size_t t = 0; t < g.rank(); ++t)
    if (!used[t]) r.violations.push_back("type map not surjective: no object of type '" + g.type_names()[t] + "'");
  if (g.self_incidences() > 0) r.violations.push_back("incidence is not irreflexive");
  for (auto [x, y] : g.incidences())
    if (g.type(x) == g.type(y)) {
      r.violations.push_back("objects " + std::to_string(x) + " and " + std::to_string(y) +
                             " share a type but are incident (two objects of the same type are never incident)");
      break;
    }
  r.valid = r.violations.empty();
  r.connected = is_connected(g);
  return r;
}

void require_valid(const Geometry& g) {
  auto r = validate(g);
  if (!r.valid) throw DomainError("invalid geometry: " + r.violations.front());
}

bool is_connected(const Geometry& g) {
  std::vector<Geometry::Object> all(g.size());
  std::iota(all.begin(), all.end(), 0u);
  return connected_on(g, all);
}

bool is_flag(const Geometry& g, const Flag& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] >= g.size()) return false;
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (f[i] == f[j] || !g.incident(f[i], f[j])) return false;
  }
  return true;
}

std::vector<Flag> flags_of_size(const Geometry& g, std::size_t k) {
  std::vector<Flag> out;
  Flag current;
  extend_flags(g, current, 0, k, [&](const Flag& f) { out.push_back(f); });
  return out;
}

std::vector<Flag> all_flags(const Geometry& g) {
  std::vector<Flag> out;
  for (std::size_t k = 0; k <= g.rank(); ++k) {
    auto fk = flags_of_size(g, k);
    out.insert(out.end(), fk.begin(), fk.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Flag> chambers(const Geometry& g) { return flags_of_size(g, g.rank()); }

std::vector<Geometry::Object> residue_objects(const Geometry& g, const Flag& f) {
  require(is_flag(g, f), "residue: the given objects do not form a flag");
  std::vector<Geometry::Object> out;
  for (Geometry::Object y = 0; y < g.size(); ++y) {
    if (std::find(f.begin(), f.end(), y) != f.end()) continue;
    bool ok = true;
    for (auto x : f)
      if (!g.incident(x, y)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(y);
  }
  return out;
}

Geometry residue(const Geometry& g, const Flag& f) {
  const auto objs = residue_objects(g, f);
  std::vector<char> used(g.rank(), 0);
  for (auto x : f) used[g.type(x)] = 1;
  std::vector<std::uint32_t> new_type(g.rank(), 0);
  std::vector<std::string> names;
  for (std::size_t t = 0; t < g.rank(); ++t)
    if (!used[t]) {
      new_type[t] = static_cast<std::uint32_t>(names.size());
      names.push_back(g.type_names()[t]);
    }
  std::vector<Geometry::Object> local(g.size(), static_cast<Geometry::Object>(-1));
  std::vector<std::uint32_t> types;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    local[objs[i]] = static_cast<Geometry::Object>(i);
    types.push_back(new_type[g.type(objs[i])]);
  }
  std::vector<std::pair<Geometry::Object, Geometry::Object>> inc;
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (auto y : g.neighbors(objs[i]))
      if (local[y] != static_cast<Geometry::Object>(-1) && local[y] > i)
        inc.emplace_back(static_cast<Geometry::Object>(i), local[y]);
  return Geometry(std::move(names), std::move(types), inc);
}

bool residually_connected(const Geometry& g) {
  for (const auto& f : all_flags(g)) {
    const std::size_t r = g.rank() - f.size();
    if (r == 0) continue;
    const auto objs = residue_objects(g, f);
    if (r == 1 && objs.empty()) return false;
    if (r >= 2 && !connected_on(g, objs)) return false;
  }
  return true;
}

namespace {

template <class Pred>
bool corank_one_counts(const Geometry& g, Pred pred) {
  if (g.rank() == 0) return true;
  for (const auto& f : flags_of_size(g, g.rank() - 1))
    if (!pred(residue_objects(g, f).size())) return false;
  return true;
}

}  // namespace

bool is_thin(const Geometry& g) {
  return corank_one_counts(g, [](std::size_t n) { return n == 2; });
}

bool is_thick(const Geometry& g) {
  return corank_one_counts(g, [](std::size_t n) { return n >= 3; });
}

// ---------------------------------------------------------------------------
// Individualization-refinement search over vertex-colored graphs.

namespace {

using Colors = std::vector<std::uint32_t>;

struct Search {
  const Geometry& a;
  const Geometry& b;
  bool count_all;
  std::uint64_t found = 0;
  std::vector<Geometry::Object> first;

  // Refines both colorings jointly to the coarsest equitable partition;
  // false as soon as the color histograms differ.
  bool refine(Colors& ca, Colors& cb) const {
    std::size_t classes = 0;
    {
      Colors all(ca);
      all.insert(all.end(), cb.begin(), cb.end());
      std::sort(all.begin(), all.end());
      classes = static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
    }
    for (;;) {
      std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
      auto signature = [](const Geometry& g, const Colors& c, Geometry::Object x) {
        std::vector<std::uint32_t> s{c[x]};
        for (auto y : g.neighbors(x)) s.push_back(c[y]);
        std::sort(s.begin() + 1, s.end());
        return s;
      };
      std::vector<std::vector<std::uint32_t>> sa(a.size()), sb(b.size());
      for (Geometry::Object x = 0; x < a.size(); ++x) ids.emplace(sa[x] = signature(a, ca, x), 0);
      for (Geometry::Object x = 0; x < b.size(); ++x) ids.emplace(sb[x] = signature(b, cb, x), 0);
      std::uint32_t next = 0;
      for (auto& [sig, id] : ids) id = next++;
      std::vector<std::size_t> ha(next, 0), hb(next, 0);
      for (Geometry::Object x = 0; x < a.size(); ++x) ++ha[ca[x] = ids[sa[x]]];
      for (Geometry::Object x = 0; x < b.size(); ++x) ++hb[cb[x] = ids[sb[x]]];
      if (ha != hb) return false;
      if (next == classes) return true;
      classes = next;
    }
  }

  void run(Colors ca, Colors cb) {
    if (!count_all && found > 0) return;
    if (!refine(ca, cb)) return;
    const std::uint32_t colors = ca.empty() ? 0 : *std::max_element(ca.begin(), ca.end()) + 1;
    std::vector<std::size_t> cell(colors, 0);
    for (auto c : ca) ++cell[c];
    std::uint32_t target = colors;
    for (std::uint32_t c = 0; c < colors; ++c)
      if (cell[c] > 1 && (target == colors || cell[c] < cell[target])) target = c;
    if (target == colors) {
      std::vector<Geometry::Object> where(colors);
      for (Geometry::Object y = 0; y < b.size(); ++y) where[cb[y]] = y;
      std::vector<Geometry::Object> map(a.size());
      for (Geometry::Object x = 0; x < a.size(); ++x) map[x] = where[ca[x]];
      for (Geometry::Object x = 0; x < a.size(); ++x)
        for (auto y : a.neighbors(x))
          if (!b.incident(map[x], map[y])) return;
      if (found++ == 0) first = std::move(map);
      return;
    }
    Geometry::Object v = 0;
    while (ca[v] != target) ++v;
    for (Geometry::Object u = 0; u < b.size(); ++u) {
      if (cb[u] != target) continue;
      Colors na = ca, nb = cb;
      na[v] = colors;
      nb[u] = colors;
      run(std::move(na), std::move(nb));
      if (!count_all && found > 0) return;
    }
  }
};

bool same_shape(const Geometry& a, const Geometry& b) {
  return a.size() == b.size() && a.rank() == b.rank() && a.incidences().size() == b.incidences().size();
}

}  // namespace

std::optional<std::vector<Geometry::Object>> find_isomorphism(const Geometry& a, const Geometry& b,
                                                              TypeMatching m) {
  if (!same_shape(a, b)) return std::nullopt;
  const std::size_t r = a.rank();
  std::vector<std::uint32_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    // Type i of a corresponds to type perm[i] of b.
    std::vector<std::uint32_t> back(r);
    for (std::uint32_t i = 0; i < r; ++i) back[perm[i]] = i;
    Colors cb(b.size());
    for (Geometry::Object x = 0; x < b.size(); ++x) cb[x] = back[b.type(x)];
    Search s{a, b, false, 0, {}};
    s.run(a.types(), cb);
    if (s.found > 0) return s.first;
    if (m == TypeMatching::Exact) break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool isomorphic(const Geometry& a, const Geometry& b, TypeMatching m) { return find_isomorphism(a, b, m).has_value(); }

std::uint64_t count_automorphisms(const Geometry& g, bool preserve_types) {
  Search s{g, g, true, 0, {}};
  Colors c = preserve_types ? g.types() : Colors(g.size(), 0);
  s.run(c, c);
  return s.found;
}

// ---------------------------------------------------------------------------

CosetGeometry coset_geometry(const EnumeratedGroup& group, const std::vector<ElementSet>& subgroups,
                             std::vector<std::string> type_names) {
  require(type_names.size() == subgroups.size(), "coset geometry needs one name per subgroup");
  CosetGeometry out;
  std::vector<std::uint32_t> types;
  Geometry::Object offset = 0;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    std::size_t count = 0;
    auto idx = left_coset_index(group, subgroups[i], &count);
    for (auto& v : idx) v += offset;
    out.object_of.push_back(std::move(idx));
    types.insert(types.end(), count, static_cast<std::uint32_t>(i));
    offset += static_cast<Geometry::Object>(count);
  }
  std::vector<std::pair<Geometry::Object, Geometry::Object>> inc;
  for (std::size_t x = 0; x < group.order(); ++x)
    for (std::size_t i = 0; i < subgroups.size(); ++i)
      for (std::size_t j = i + 1; j < subgroups.size(); ++j)
        inc.emplace_back(out.object_of[i][x], out.object_of[j][x]);
  std::sort(inc.begin(), inc.end());
  inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
  out.geometry = Geometry(std::move(type_names), std::move(types), inc);
  return out;
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const Geometry& g) {
  nlohmann::json objects = nlohmann::json::array();
  for (Geometry::Object x = 0; x < g.size(); ++x)
    objects.push_back({{"id", x}, {"type", g.type_names()[g.type(x)]}});
  nlohmann::json inc = nlohmann::json::array();
  for (auto [x, y] : g.incidences()) inc.push_back({x, y});
  return {{"types", g.type_names()}, {"objects", objects}, {"incidences", inc}};
}

Geometry geometry_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("types") && j.contains("objects") && j.contains("incidences"),
          "geometry JSON needs types, objects and incidences");
  require(j.at("types").is_array(), "geometry JSON 'types' must be an array");
  std::vector<std::string> names;
  for (const auto& t : j.at("types")) {
    require(t.is_string(), "type names must be strings");
    names.push_back(t.get<std::string>());
  }
  std::map<std::string, std::uint32_t> type_index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    require(type_index.emplace(names[i], static_cast<std::uint32_t>(i)).second, "duplicate type name " + names[i]);
  }
  auto key = [](const nlohmann::json& id) {
    require(id.is_string() || id.is_number_integer(), "object ids must be strings or integers");
    return id.is_string() ? "s:" + id.get<std::string>() : "i:" + std::to_string(id.get<long long>());
  };
  std::map<std::string, Geometry::Object> ids;
  std::vector<std::uint32_t> types;
  require(j.at("objects").is_array(), "geometry JSON 'objects' must be an array");
  for (const auto& o : j.at("objects")) {
    require(o.is_object() && o.contains("id") && o.contains("type"), "each object needs id and type");
    require(ids.emplace(key(o.at("id")), static_cast<Geometry::Object>(types.size())).second, "duplicate object id");
    const auto& t = o.at("type");
    if (t.is_string()) {
      auto it = type_index.find(t.get<std::string>());
      require(it != type_index.end(), "unknown type " + t.get<std::string>());
      types.push_back(it->second);
    } else {
      require(t.is_number_unsigned() && t.get<std::size_t>() < names.size(), "type index out of range");
      types.push_back(t.get<std::uint32_t>());
    }
  }
  std::vector<std::pair<Geometry::Object, Geometry::Object>> inc;
  require(j.at("incidences").is_array(), "geometry JSON 'incidences' must be an array");
  for (const auto& e : j.at("incidences")) {
    require(e.is_array() && e.size() == 2, "each incidence is a pair of ids");
    auto a = ids.find(key(e[0]));
    auto b = ids.find(key(e[1]));
    require(a != ids.end() && b != ids.end(), "incidence refers to an unknown object");
    inc.emplace_back(a->second, b->second);
  }
  return Geometry(std::move(names), std::move(types), inc);
}

std::string to_dot(const Geometry& g) {
  static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "cyan", "magenta"};
  std::ostringstream out;
  out << "graph geometry {\n";
  for (Geometry::Object x = 0; x < g.size(); ++x)
    out << "  " << x << " [type=\"" << g.type_names()[g.type(x)] << "\", color=" << palette[g.type(x) % 8] << "];\n";
  for (auto [x, y] : g.incidences()) out << "  " << x << " -- " << y << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace f1
