#include "f1/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace f1 {

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<std::uint32_t>> entries) : m_(std::move(entries)) {
  const std::size_t n = m_.size();
  for (std::size_t i = 0; i < n; ++i) {
    require(m_[i].size() == n, "Coxeter matrix must be square");
    require(m_[i][i] == 1, "Coxeter matrix must have 1 on the diagonal");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      require(m_[i][j] == m_[j][i], "Coxeter matrix must be symmetric");
      require(m_[i][j] == kInfinity || m_[i][j] >= 2, "off-diagonal Coxeter entries must be >= 2 or infinite");
    }
}

CoxeterDiagram diagram_of(const CoxeterMatrix& m) {
  CoxeterDiagram d;
  d.vertices = m.size();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m(i, j) != 2) d.edges.push_back({i, j, m(i, j)});
  return d;
}

CoxeterMatrix matrix_of(const CoxeterDiagram& d) {
  std::vector<std::vector<std::uint32_t>> m(d.vertices, std::vector<std::uint32_t>(d.vertices, 2));
  for (std::size_t i = 0; i < d.vertices; ++i) m[i][i] = 1;
  std::vector<std::vector<char>> seen(d.vertices, std::vector<char>(d.vertices, 0));
  for (const auto& e : d.edges) {
    require(e.i < d.vertices && e.j < d.vertices, "diagram edge refers to an unknown vertex");
    require(e.i != e.j, "diagram edge is a loop");
    require(!seen[e.i][e.j], "diagram edge repeated");
    require(e.label == CoxeterMatrix::kInfinity || e.label >= 2, "diagram edge label must be >= 2 or inf");
    seen[e.i][e.j] = seen[e.j][e.i] = 1;
    m[e.i][e.j] = m[e.j][e.i] = e.label;
  }
  return CoxeterMatrix(std::move(m));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<std::uint32_t>> path_matrix(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n, 2));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
  return m;
}

void set(std::vector<std::vector<std::uint32_t>>& m, std::size_t i, std::size_t j, std::uint32_t v) {
  m[i][j] = m[j][i] = v;
}

std::uint32_t parse_label(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "inf" || s == "infinity" || s == "∞" || s == "oo") return CoxeterMatrix::kInfinity;
  require(!s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }),
          "bad Coxeter label '" + s + "'");
  require(s.size() < 9, "Coxeter label too large");
  return static_cast<std::uint32_t>(std::stoul(s));
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

CoxeterMatrix parse_coxeter_type(const std::string& raw) {
  std::string s = trim(raw);
  require(!s.empty(), "empty Coxeter type name");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::string rest = s.substr(1);
  if (!rest.empty() && rest[0] == '_') rest = rest.substr(1);
  if (letter == 'I') {
    auto open = rest.find('(');
    require(open != std::string::npos && rest.back() == ')' && rest.substr(0, open) == "2",
            "dihedral type must be written I2(m)");
    const auto m = parse_label(rest.substr(open + 1, rest.size() - open - 2));
    require(m == CoxeterMatrix::kInfinity || m >= 2, "I2(m) needs m >= 2");
    auto mat = path_matrix(2);
    set(mat, 0, 1, m);
    return CoxeterMatrix(mat);
  }
  require(!rest.empty() && rest.size() < 4 &&
              std::all_of(rest.begin(), rest.end(), [](unsigned char c) { return std::isdigit(c); }),
          "unknown Coxeter type '" + s + "'");
  const std::size_t n = std::stoul(rest);
  auto mat = path_matrix(n);
  switch (letter) {
    case 'A':
      require(n >= 1, "A_n needs n >= 1");
      break;
    case 'B':
    case 'C':
      require(n >= 2, "B_n needs n >= 2");
      set(mat, n - 2, n - 1, 4);
      break;
    case 'D':
      require(n >= 4, "D_n needs n >= 4");
      set(mat, n - 2, n - 1, 2);
      set(mat, n - 3, n - 1, 3);
      break;
    case 'E':
      require(n >= 6 && n <= 8, "E_n needs n in 6..8");
      set(mat, n - 2, n - 1, 2);
      set(mat, 2, n - 1, 3);
      break;
    case 'F':
      require(n == 4, "only F_4 exists");
      set(mat, 1, 2, 4);
      break;
    case 'G':
      require(n == 2, "only G_2 exists");
      set(mat, 0, 1, 6);
      break;
    case 'H':
      require(n == 3 || n == 4, "only H_3 and H_4 exist");
      set(mat, 0, 1, 5);
      break;
    default:
      throw DomainError("unknown Coxeter type '" + s + "'");
  }
  return CoxeterMatrix(mat);
}

CoxeterDiagram parse_dot_diagram(const std::string& dot) {
  auto open = dot.find('{');
  auto close = dot.rfind('}');
  require(open != std::string::npos && close != std::string::npos && open < close, "DOT diagram needs a { } body");
  const std::string head = trim(dot.substr(0, open));
  require(head.rfind("graph", 0) == 0 || head.rfind("strict graph", 0) == 0, "DOT diagram must be an undirected graph");
  std::string body = dot.substr(open + 1, close - open - 1);
  std::replace(body.begin(), body.end(), '\n', ';');

  std::map<std::string, std::size_t> ids;
  auto vertex = [&](std::string name) {
    name = trim(name);
    if (name.size() >= 2 && name.front() == '"' && name.back() == '"') name = name.substr(1, name.size() - 2);
    require(!name.empty(), "empty vertex name in DOT diagram");
    return ids.emplace(name, ids.size()).first->second;
  };
  CoxeterDiagram d;
  std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> edges;
  std::stringstream ss(body);
  std::string stmt;
  while (std::getline(ss, stmt, ';')) {
    stmt = trim(stmt);
    if (stmt.empty() || stmt.rfind("//", 0) == 0 || stmt.rfind("#", 0) == 0) continue;
    std::string attrs;
    if (auto lb = stmt.find('['); lb != std::string::npos) {
      auto rb = stmt.find(']', lb);
      require(rb != std::string::npos, "unterminated attribute list in DOT diagram");
      attrs = stmt.substr(lb + 1, rb - lb - 1);
      stmt = trim(stmt.substr(0, lb));
    }
    if (stmt.find('=') != std::string::npos || stmt.rfind("node", 0) == 0 || stmt.rfind("edge", 0) == 0 ||
        stmt.rfind("graph", 0) == 0)
      continue;  // graph-level attributes
    auto arrow = stmt.find("--");
    if (arrow == std::string::npos) {
      vertex(stmt);
      continue;
    }
    require(stmt.find("--", arrow + 2) == std::string::npos, "edge chains are not supported in DOT diagrams");
    const auto a = vertex(stmt.substr(0, arrow));
    const auto b = vertex(stmt.substr(arrow + 2));
    std::uint32_t label = 3;
    std::stringstream as(attrs);
    std::string kv;
    while (std::getline(as, kv, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) continue;
      if (trim(kv.substr(0, eq)) != "label") continue;
      std::string v = trim(kv.substr(eq + 1));
      if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
      label = parse_label(v);
    }
    require(a != b, "loop in DOT diagram");
    const auto key = std::minmax(a, b);
    require(edges.emplace(key, label).second, "edge repeated in DOT diagram");
  }
  d.vertices = ids.size();
  for (auto [key, label] : edges)
    if (label != 2) d.edges.push_back({key.first, key.second, label});
  matrix_of(d);
  return d;
}

CoxeterMatrix parse_diagram(const std::string& text) {
  if (text.find('{') != std::string::npos) return matrix_of(parse_dot_diagram(text));
  return parse_coxeter_type(text);
}

std::string to_dot(const CoxeterDiagram& d) {
  std::ostringstream out;
  out << "graph coxeter {\n";
  for (std::size_t v = 0; v < d.vertices; ++v) out << "  s" << v + 1 << ";\n";
  for (const auto& e : d.edges) {
    out << "  s" << e.i + 1 << " -- s" << e.j + 1;
    if (e.label == CoxeterMatrix::kInfinity)
      out << " [label=inf]";
    else if (e.label != 3)
      out << " [label=" << e.label << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------

std::string SphericalType::name() const {
  switch (kind) {
    case Kind::NotIrreducible:
      return "NotIrreducible";
    case Kind::NotSpherical:
      return "NotSpherical";
    case Kind::I:
      return "I_2(" + std::to_string(m) + ")";
    default:
      break;
  }
  static const char letters[] = "ABDEFH";
  const int idx = static_cast<int>(kind) - static_cast<int>(Kind::A);
  return std::string(1, letters[idx]) + "_" + std::to_string(rank);
}

std::optional<std::uint64_t> SphericalType::group_order() const {
  auto fact = [](std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (kind) {
    case Kind::A:
      return fact(rank + 1);
    case Kind::B:
      return (std::uint64_t{1} << rank) * fact(rank);
    case Kind::D:
      return (std::uint64_t{1} << (rank - 1)) * fact(rank);
    case Kind::E:
      return rank == 6 ? 51840ull : rank == 7 ? 2903040ull : 696729600ull;
    case Kind::F:
      return 1152;
    case Kind::H:
      return rank == 3 ? 120 : 14400;
    case Kind::I:
      return 2ull * m;
    default:
      return std::nullopt;
  }
}

SphericalType classify_spherical(const CoxeterMatrix& m) { return classify_spherical(diagram_of(m)); }

SphericalType classify_spherical(const CoxeterDiagram& d) {
  using K = SphericalType::Kind;
  matrix_of(d);
  const std::size_t n = d.vertices;
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> adj(n);
  for (const auto& e : d.edges) {
    adj[e.i].push_back({e.j, e.label});
    adj[e.j].push_back({e.i, e.label});
  }
  // Connectivity.
  if (n == 0) return {K::NotIrreducible, 0, 0};
  {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto [u, l] : adj[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    if (reached != n) return {K::NotIrreducible, static_cast<std::uint32_t>(n), 0};
  }
  const auto rank = static_cast<std::uint32_t>(n);
  const SphericalType no{K::NotSpherical, rank, 0};
  if (n == 1) return {K::A, 1, 0};
  if (d.edges.size() != n - 1) return no;  // contains a cycle
  for (const auto& e : d.edges)
    if (e.label == CoxeterMatrix::kInfinity) return no;
  if (n == 2) {
    const auto l = d.edges.front().label;
    if (l == 3) return {K::A, 2, 0};
    if (l == 4) return {K::B, 2, 0};
    return {K::I, 2, l};
  }

  std::vector<const CoxeterDiagram::Edge*> heavy;
  for (const auto& e : d.edges)
    if (e.label != 3) heavy.push_back(&e);
  std::size_t branch = n, max_degree = 0;
  for (std::size_t v = 0; v < n; ++v) {
    max_degree = std::max(max_degree, adj[v].size());
    if (adj[v].size() >= 3) branch = v;
  }
  if (heavy.size() > 1 || max_degree > 3) return no;

  if (heavy.size() == 1) {
    if (max_degree > 2) return no;
    const auto& e = *heavy.front();
    const bool at_end = adj[e.i].size() == 1 || adj[e.j].size() == 1;
    if (e.label == 4) {
      if (at_end) return {K::B, rank, 0};
      if (n == 4) return {K::F, 4, 0};
      return no;
    }
    if (e.label == 5 && at_end && (n == 3 || n == 4)) return {K::H, rank, 0};
    return no;
  }

  if (max_degree <= 2) return {K::A, rank, 0};
  // One vertex of degree 3; measure its three arms.
  std::size_t degree3 = 0;
  for (std::size_t v = 0; v < n; ++v) degree3 += adj[v].size() == 3;
  if (degree3 != 1) return no;
  std::vector<std::size_t> arms;
  for (auto [start, l] : adj[branch]) {
    std::size_t len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      const auto next = adj[cur][0].first == prev ? adj[cur][1].first : adj[cur][0].first;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {K::D, rank, 0};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {K::E, rank, 0};
  return no;
}

// ---------------------------------------------------------------------------

Presentation presentation_of(const CoxeterMatrix& m) {
  Presentation p;
  p.generators = m.size();
  for (std::size_t i = 0; i < m.size(); ++i) {
    const int a = static_cast<int>(i) + 1;
    p.relators.push_back({a, a});
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m(i, j) == CoxeterMatrix::kInfinity) continue;
      Word w;
      for (std::uint32_t r = 0; r < m(i, j); ++r) {
        w.push_back(static_cast<int>(i) + 1);
        w.push_back(static_cast<int>(j) + 1);
      }
      p.relators.push_back(std::move(w));
    }
  return p;
}

void check_presentation(const Presentation& p) {
  const int g = static_cast<int>(p.generators);
  for (const auto& r : p.relators) {
    require(!r.empty(), "relators must be nonempty words");
    for (int x : r) require(x != 0 && x >= -g && x <= g, "relator letter " + std::to_string(x) + " out of range");
  }
}

nlohmann::json to_json(const Presentation& p) { return {{"generators", p.generators}, {"relators", p.relators}}; }

Presentation presentation_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("generators") && j.contains("relators"),
          "presentation JSON needs generators and relators");
  require(j.at("generators").is_number_unsigned(), "presentation 'generators' must be a non-negative integer");
  Presentation p;
  p.generators = j.at("generators").get<std::size_t>();
  try {
    p.relators = j.at("relators").get<std::vector<Word>>();
  } catch (const nlohmann::json::exception&) {
    throw DomainError("presentation 'relators' must be a list of integer lists");
  }
  check_presentation(p);
  return p;
}

// ---------------------------------------------------------------------------
// HLT coset enumeration with union-find coincidence handling.

namespace {

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t cap) : cols_(2 * p.generators), cap_(cap) {
    table_.reserve(std::min<std::size_t>(cap, 4096) * cols_);
    new_row();
  }

  static std::size_t column(int letter) {
    return letter > 0 ? 2 * static_cast<std::size_t>(letter - 1) : 2 * static_cast<std::size_t>(-letter - 1) + 1;
  }

  bool overflowed() const { return overflow_; }
  std::size_t defined() const { return parent_.size(); }
  bool live(std::size_t c) const { return parent_[c] == c; }

  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) != kNone) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[j] ^ 1) != kNone) b = at(b, w[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[i], b);
        set(b, w[i] ^ 1, f);
        return;
      }
      if (!define(f, w[i])) return;
    }
  }

  bool define(std::size_t c, std::size_t x) {
    if (parent_.size() >= cap_) {
      overflow_ = true;
      return false;
    }
    const std::size_t d = new_row();
    set(c, x, d);
    set(d, x ^ 1, c);
    return true;
  }

  std::size_t at(std::size_t c, std::size_t x) const { return table_[c * cols_ + x]; }
  std::size_t columns() const { return cols_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t new_row() {
    table_.insert(table_.end(), cols_, kNone);
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  void set(std::size_t c, std::size_t x, std::size_t d) { table_[c * cols_ + x] = d; }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const std::size_t g = queue[k];
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::size_t d = at(g, x);
        if (d == kNone) continue;
        if (at(d, x ^ 1) == g) set(d, x ^ 1, kNone);
        const std::size_t mu = rep(g), nu = rep(d);
        if (at(mu, x) != kNone)
          merge(nu, at(mu, x), queue);
        else if (at(nu, x ^ 1) != kNone)
          merge(mu, at(nu, x ^ 1), queue);
        else {
          set(mu, x, nu);
          set(nu, x ^ 1, mu);
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t cap_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> parent_;
  bool overflow_ = false;
};

std::vector<std::size_t> to_columns(const Word& w, std::size_t generators) {
  std::vector<std::size_t> out;
  const int g = static_cast<int>(generators);
  for (int x : w) {
    require(x != 0 && x >= -g && x <= g, "word letter " + std::to_string(x) + " out of range");
    out.push_back(Enumerator::column(x));
  }
  return out;
}

}  // namespace

std::variant<CosetTable, Overflow> todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                                                std::size_t max_cosets) {
  check_presentation(p);
  require(max_cosets >= 1, "coset cap must be positive");
  std::vector<std::vector<std::size_t>> rels, subs;
  for (const auto& r : p.relators) rels.push_back(to_columns(r, p.generators));
  for (const auto& w : subgroup) subs.push_back(to_columns(w, p.generators));

  Enumerator e(p, max_cosets);
  for (const auto& w : subs) {
    e.scan_and_fill(0, w);
    if (e.overflowed()) return Overflow{max_cosets, e.defined()};
  }
  for (std::size_t c = 0; c < e.defined(); ++c) {
    for (const auto& r : rels) {
      if (!e.live(c)) break;
      e.scan_and_fill(c, r);
      if (e.overflowed()) return Overflow{max_cosets, e.defined()};
    }
    if (!e.live(c)) continue;
    for (std::size_t x = 0; x < e.columns(); ++x)
      if (e.at(c, x) == static_cast<std::size_t>(-1) && !e.define(c, x)) return Overflow{max_cosets, e.defined()};
  }

  // Standardize: breadth-first from coset 0 along generator columns.
  std::vector<std::uint32_t> number(e.defined(), static_cast<std::uint32_t>(-1));
  std::vector<std::size_t> order{0};
  number[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t x = 0; x < e.columns(); ++x) {
      const std::size_t d = e.at(order[k], x);
      if (number[d] == static_cast<std::uint32_t>(-1)) {
        number[d] = static_cast<std::uint32_t>(order.size());
        order.push_back(d);
      }
    }
  CosetTable t;
  t.index = order.size();
  t.columns.assign(p.generators, std::vector<std::uint32_t>(t.index));
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t g = 0; g < p.generators; ++g) t.columns[g][k] = number[e.at(order[k], 2 * g)];
  return t;
}

std::variant<EnumeratedGroup, Overflow> enumerate_presentation(const Presentation& p, std::size_t max_cosets) {
  auto r = todd_coxeter(p, {}, max_cosets);
  if (auto* o = std::get_if<Overflow>(&r)) return *o;
  auto& t = std::get<CosetTable>(r);
  auto g = EnumeratedGroup::from_right_action(std::move(t.columns));
  g.verify();
  return g;
}

std::variant<EnumeratedGroup, Overflow> coxeter_group(const CoxeterMatrix& m, std::size_t max_cosets) {
  return enumerate_presentation(presentation_of(m), max_cosets);
}

CoxeterMatrix coxeter_matrix_of(const EnumeratedGroup& w) {
  const std::size_t r = w.generator_count();
  std::vector<std::vector<std::uint32_t>> m(r, std::vector<std::uint32_t>(r, 1));
  for (std::size_t i = 0; i < r; ++i) {
    require(w.element_order(w.generator(i)) == 2, "generator " + std::to_string(i + 1) + " is not an involution");
    for (std::size_t j = i + 1; j < r; ++j)
      m[i][j] = m[j][i] = static_cast<std::uint32_t>(w.element_order(w.mul(w.generator(i), w.generator(j))));
  }
  return CoxeterMatrix(std::move(m));
}

bool satisfies_coxeter_relations(const EnumeratedGroup& w, const CoxeterMatrix& m) {
  if (w.generator_count() != m.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j) {
      const auto prod = w.mul(w.generator(i), w.generator(j));
      const std::size_t expected = i == j ? 1 : m(i, j);
      if (expected == CoxeterMatrix::kInfinity) return false;  // W is finite here
      if (w.element_order(prod) != expected) return false;
    }
  return true;
}

CosetGeometry coxeter_complex_cosets(const EnumeratedGroup& w) {
  const std::size_t r = w.generator_count();
  std::vector<ElementSet> subgroups;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<EnumeratedGroup::Element> gens;
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) gens.push_back(w.generator(j));
    subgroups.push_back(subgroup_closure(w, gens));
    names.push_back("s" + std::to_string(i + 1));
  }
  return coset_geometry(w, subgroups, names);
}

Geometry coxeter_complex(const EnumeratedGroup& w, const CoxeterMatrix& m) {
  require(w.generator_count() == m.size(), "group and Coxeter matrix have different ranks");
  return coxeter_complex_cosets(w).geometry;
}

Geometry coxeter_complex(const CoxeterMatrix& m, std::size_t max_cosets) {
  auto r = coxeter_group(m, max_cosets);
  if (auto* o = std::get_if<Overflow>(&r))
    throw ResourceError("Coxeter group enumeration overflowed at " + std::to_string(o->limit) + " cosets");
  return coxeter_complex(std::get<EnumeratedGroup>(r), m);
}

bool word_eq(const EnumeratedGroup& g, const Word& a, const Word& b) { return g.evaluate(a) == g.evaluate(b); }

}  // namespace f1
