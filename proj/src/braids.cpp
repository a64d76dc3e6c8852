#include "f1/braids.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>

namespace f1 {

BraidWord make_braid(std::size_t strands, Word letters) {
  require(strands >= 1, "a braid needs at least one strand");
  for (int x : letters)
    require(x != 0 && static_cast<std::size_t>(std::abs(x)) < strands,
            "braid letter " + std::to_string(x) + " out of range for " + std::to_string(strands) + " strands");
  return BraidWord{strands, std::move(letters)};
}

BraidWord parse_braid(const std::string& text, std::size_t strands) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  Word letters;
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    if (tok[0] == 's' || tok[0] == 'S') pos = 1;
    auto caret = tok.find('^');
    const std::string base = tok.substr(pos, caret == std::string::npos ? std::string::npos : caret - pos);
    long long power = 1;
    auto parse_int = [&](const std::string& s) {
      require(!s.empty(), "bad braid token '" + tok + "'");
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(s, &used);
      } catch (const std::exception&) {
        throw DomainError("bad braid token '" + tok + "'");
      }
      require(used == s.size(), "bad braid token '" + tok + "'");
      return v;
    };
    const long long index = parse_int(base);
    if (caret != std::string::npos) power = parse_int(tok.substr(caret + 1));
    require(index != 0 && power != 0, "bad braid token '" + tok + "'");
    require(std::llabs(index) < (1 << 20) && std::llabs(power) < (1 << 20), "braid token too large: '" + tok + "'");
    const int letter = static_cast<int>(power < 0 ? -index : index);
    for (long long k = 0; k < std::llabs(power); ++k) letters.push_back(letter);
  }
  if (strands == 0) {
    strands = 1;
    for (int x : letters) strands = std::max<std::size_t>(strands, static_cast<std::size_t>(std::abs(x)) + 1);
  }
  return make_braid(strands, std::move(letters));
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (int x : w.letters) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(std::abs(x));
    if (x < 0) out += "^-1";
  }
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  Word out;
  for (int x : w.letters) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return BraidWord{w.strands, std::move(out)};
}

Permutation gamma(const BraidWord& w) {
  Permutation p = identity_permutation(w.strands);
  for (int x : w.letters) {
    const auto a = static_cast<std::size_t>(std::abs(x)) - 1;
    require(a + 1 < w.strands, "braid letter out of range");
    Permutation t = identity_permutation(w.strands);
    std::swap(t[a], t[a + 1]);
    p = compose(p, t);
  }
  return p;
}

bool is_pure(const BraidWord& w) { return gamma(w) == identity_permutation(w.strands); }

MonomialMatrix rho(int letter, std::size_t strands) {
  require(letter != 0 && static_cast<std::size_t>(std::abs(letter)) < strands,
          "rho: generator index " + std::to_string(letter) + " out of range for " + std::to_string(strands) + " strands");
  const auto n = static_cast<std::uint32_t>(strands);
  const auto a = static_cast<std::size_t>(std::abs(letter)) - 1;
  Permutation perm = identity_permutation(strands);
  std::swap(perm[a], perm[a + 1]);
  std::vector<std::uint32_t> exps(strands, 0);
  exps[a] = (n - 1) % n;
  exps[a + 1] = 1 % n;
  MonomialMatrix m(n, std::move(perm), std::move(exps));
  return letter > 0 ? m : m.inverse();
}

MonomialMatrix rho(const BraidWord& w) {
  const auto n = static_cast<std::uint32_t>(w.strands);
  MonomialMatrix m = MonomialMatrix::identity(w.strands, n);
  for (int x : w.letters) m = m * rho(x, w.strands);
  return m;
}

RhoImage rho_image(std::size_t strands, std::size_t bound) {
  require(strands >= 1, "rho_image needs at least one strand");
  const auto n = static_cast<std::uint32_t>(strands);
  std::vector<MonomialMatrix> gens;
  for (std::size_t i = 1; i < strands; ++i) gens.push_back(rho(static_cast<int>(i), strands));
  const auto id = MonomialMatrix::identity(strands, n);
  if (gens.empty()) gens.push_back(id);

  RhoImage out;
  out.closure = close_generators<MonomialMatrix>(
      id, gens, [](const MonomialMatrix& a, const MonomialMatrix& b) { return a * b; }, bound, MonomialHash{});
  std::size_t expected = 1;
  for (std::size_t k = 2; k <= strands; ++k) expected *= k;
  if (out.closure.group.order() != expected)
    throw VerificationError("rho image has order " + std::to_string(out.closure.group.order()) + ", expected " +
                            std::to_string(expected));

  out.nonabelian = !out.closure.group.is_abelian();
  out.involutions = true;
  out.braid_relations = true;
  for (std::size_t i = 1; i < strands; ++i) {
    const auto si = rho(static_cast<int>(i), strands);
    if (!(si * si == id)) out.involutions = false;
    for (std::size_t j = i + 1; j < strands; ++j) {
      const auto sj = rho(static_cast<int>(j), strands);
      if (j == i + 1 ? !(si * sj * si == sj * si * sj) : !(si * sj == sj * si)) out.braid_relations = false;
    }
  }
  if (strands >= 2) {
    const BraidWord sq{strands, {1, 1}};
    out.not_faithful = !free_reduce(sq).letters.empty() && rho(sq) == id;
  }
  return out;
}

bool SimpleGraph::adjacent(std::size_t a, std::size_t b) const {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
  });
}

void check_graph(const SimpleGraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [a, b] : g.edges) {
    require(a < g.vertices && b < g.vertices, "graph edge uses a missing vertex");
    require(a != b, "graph has a loop at vertex " + std::to_string(a));
    require(seen.insert(std::minmax(a, b)).second, "graph repeats the edge " + std::to_string(a) + "-" + std::to_string(b));
  }
}

SimpleGraph path_graph(std::size_t k) {
  SimpleGraph g{k, {}};
  for (std::size_t i = 0; i + 1 < k; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

Presentation artin_group(const SimpleGraph& g) {
  check_graph(g);
  Presentation p;
  p.generators = g.vertices;
  for (std::size_t a = 0; a < g.vertices; ++a)
    for (std::size_t b = a + 1; b < g.vertices; ++b) {
      const int x = static_cast<int>(a) + 1, y = static_cast<int>(b) + 1;
      if (g.adjacent(a, b))
        p.relators.push_back({x, y, x, -y, -x, -y});
      else
        p.relators.push_back({x, y, -x, -y});
    }
  return p;
}

CoxeterMatrix graph_coxeter_matrix(const SimpleGraph& g) {
  check_graph(g);
  std::vector<std::vector<std::uint32_t>> m(g.vertices, std::vector<std::uint32_t>(g.vertices, 2));
  for (std::size_t i = 0; i < g.vertices; ++i) m[i][i] = 1;
  for (auto [a, b] : g.edges) m[a][b] = m[b][a] = 3;
  return CoxeterMatrix(std::move(m));
}

std::variant<EnumeratedGroup, Overflow> shephard_group(const SimpleGraph& g, unsigned d, std::size_t max_cosets) {
  require(d >= 1, "Shephard exponent must be positive");
  require(g.vertices >= 1, "Shephard group of the empty graph");
  Presentation p = artin_group(g);
  for (std::size_t v = 0; v < g.vertices; ++v) p.relators.push_back(Word(d, static_cast<int>(v) + 1));
  return enumerate_presentation(p, max_cosets);
}

}  // namespace f1
