#include "f1/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace f1 {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

bool is_permutation(std::span<const std::uint32_t> p) {
  std::vector<char> seen(p.size(), 0);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require(p.size() == q.size(), "compose: permutation degrees differ");
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

int permutation_sign(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::string cycle_notation(const Permutation& p) {
  std::ostringstream out;
  std::vector<char> seen(p.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    any = true;
    out << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      if (!first) out << ' ';
      out << j + 1;
      first = false;
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

// ---------------------------------------------------------------------------

EnumeratedGroup EnumeratedGroup::from_right_action(std::vector<std::vector<Element>> columns) {
  const std::size_t n = columns.empty() ? 1 : columns.front().size();
  require(n > 0, "group action on an empty set");
  for (const auto& c : columns) {
    require(c.size() == n, "generator columns of unequal length");
    require(is_permutation(c), "generator column is not a permutation");
  }

  // Breadth-first renumbering from the identity.
  std::vector<Element> relabel(n, static_cast<Element>(-1));
  std::vector<Element> order_seen{0};
  relabel[0] = 0;
  for (std::size_t head = 0; head < order_seen.size(); ++head) {
    for (const auto& c : columns) {
      Element y = c[order_seen[head]];
      if (relabel[y] == static_cast<Element>(-1)) {
        relabel[y] = static_cast<Element>(order_seen.size());
        order_seen.push_back(y);
      }
    }
  }
  require(order_seen.size() == n, "generators do not act transitively; not a regular action");

  EnumeratedGroup g;
  g.order_ = n;
  g.relabel_ = std::move(relabel);
  g.columns_.resize(columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k) {
    g.columns_[k].resize(n);
    for (std::size_t x = 0; x < n; ++x) g.columns_[k][g.relabel_[x]] = g.relabel_[columns[k][x]];
  }
  g.build();
  return g;
}

EnumeratedGroup EnumeratedGroup::from_table(std::size_t order, const std::vector<Element>& table,
                                            const std::vector<Element>& generators) {
  require(order > 0 && table.size() == order * order, "Cayley table has the wrong size");
  for (auto x : table) require(x < order, "Cayley table entry out of range");
  std::vector<std::vector<Element>> columns;
  for (auto s : generators) {
    require(s < order, "generator out of range");
    std::vector<Element> col(order);
    for (std::size_t x = 0; x < order; ++x) col[x] = table[x * order + s];
    columns.push_back(std::move(col));
  }
  EnumeratedGroup g = from_right_action(std::move(columns));
  if (order <= kVerifyLimit) {
    const auto& r = g.relabel_;
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        if (g.mul(r[a], r[b]) != r[table[a * order + b]])
          throw DomainError("Cayley table is not the group generated by the given generators");
  }
  return g;
}

void EnumeratedGroup::build() {
  const std::size_t n = order_;
  const std::size_t k = columns_.size();
  generators_.resize(k);
  inverse_columns_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    generators_[i] = columns_[i][0];
    inverse_columns_[i] = f1::inverse(columns_[i]);
  }

  // Shortest words and BFS parents; ids are already in BFS order.
  words_.assign(n, {});
  std::vector<Element> parent(n, 0);
  std::vector<std::uint32_t> via(n, 0);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::vector<Element> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element x = queue[head];
    for (std::size_t i = 0; i < k; ++i) {
      Element y = columns_[i][x];
      if (seen[y]) continue;
      seen[y] = 1;
      parent[y] = x;
      via[y] = static_cast<std::uint32_t>(i);
      words_[y] = words_[x];
      words_[y].push_back(static_cast<int>(i) + 1);
      queue.push_back(y);
    }
  }

  table_.clear();
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      Element* row = table_.data() + a * n;
      row[0] = static_cast<Element>(a);
      for (std::size_t idx = 1; idx < n; ++idx) {
        Element b = queue[idx];
        row[b] = columns_[via[b]][row[parent[b]]];
      }
    }
  }

  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    Element x = 0;
    const Word& w = words_[a];
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = inverse_columns_[*it - 1][x];
    inverse_[a] = x;
  }
  verify();
}

EnumeratedGroup::Element EnumeratedGroup::mul(Element a, Element b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
  Element x = a;
  for (int letter : words_[b]) x = columns_[letter - 1][x];
  return x;
}

EnumeratedGroup::Element EnumeratedGroup::power(Element a, long long e) const {
  if (e < 0) {
    a = inverse(a);
    e = -e;
  }
  Element result = 0;
  Element base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t EnumeratedGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

EnumeratedGroup::Element EnumeratedGroup::evaluate(std::span<const int> word) const {
  Element x = 0;
  for (int letter : word) {
    const std::size_t k = static_cast<std::size_t>(letter < 0 ? -letter : letter);
    require(letter != 0 && k <= columns_.size(), "word letter " + std::to_string(letter) + " out of range");
    x = letter > 0 ? columns_[k - 1][x] : inverse_columns_[k - 1][x];
  }
  return x;
}

bool EnumeratedGroup::is_abelian() const {
  for (auto a : generators_)
    for (auto b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

void EnumeratedGroup::verify() const {
  const std::size_t n = order_;
  for (std::size_t a = 0; a < n; ++a) {
    const auto x = static_cast<Element>(a);
    if (mul(0, x) != x || mul(x, 0) != x) throw VerificationError("identity law fails");
    if (mul(x, inverse_[a]) != 0 || mul(inverse_[a], x) != 0) throw VerificationError("inverse law fails");
  }
  if (n > kVerifyLimit) return;
  // Light's associativity test: (a*b)*s == a*(b*s) for every generator s.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = mul(static_cast<Element>(a), static_cast<Element>(b));
      for (const auto& col : columns_)
        if (col[ab] != mul(static_cast<Element>(a), col[b])) throw VerificationError("associativity fails");
    }
}

// ---------------------------------------------------------------------------

ElementSet subgroup_closure(const EnumeratedGroup& g, std::span<const EnumeratedGroup::Element> gens) {
  std::vector<char> in(g.order(), 0);
  ElementSet members{0};
  in[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto s : gens) {
      auto y = g.mul(members[head], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

ElementSet generating_set(const EnumeratedGroup& g, const ElementSet& subgroup) {
  ElementSet gens;
  ElementSet current{0};
  for (auto x : subgroup) {
    if (contains(current, x)) continue;
    gens.push_back(x);
    current = subgroup_closure(g, gens);
  }
  return gens;
}

bool is_subgroup(const EnumeratedGroup& g, const ElementSet& sorted_elements) {
  if (sorted_elements.empty() || sorted_elements.front() != 0) return false;
  if (!std::is_sorted(sorted_elements.begin(), sorted_elements.end())) return false;
  for (auto x : sorted_elements)
    if (x >= g.order()) return false;
  return subgroup_closure(g, generating_set(g, sorted_elements)) == sorted_elements;
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const ElementSet& sorted, EnumeratedGroup::Element x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<std::uint32_t> left_coset_index(const EnumeratedGroup& g, const ElementSet& subgroup,
                                            std::size_t* coset_count) {
  const auto gens = generating_set(g, subgroup);
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> index(g.order(), kUnset);
  std::uint32_t next = 0;
  std::vector<EnumeratedGroup::Element> stack;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (index[x] != kUnset) continue;
    index[x] = next;
    stack.assign(1, static_cast<EnumeratedGroup::Element>(x));
    while (!stack.empty()) {
      auto y = stack.back();
      stack.pop_back();
      for (auto h : gens) {
        auto z = g.mul(y, h);
        if (index[z] == kUnset) {
          index[z] = next;
          stack.push_back(z);
        }
      }
    }
    ++next;
  }
  if (coset_count) *coset_count = next;
  return index;
}

std::vector<Permutation> action_images(const EnumeratedGroup& g, const PermutationAction& action) {
  require(action.generator_images.size() == g.generator_count(),
          "action needs one permutation per group generator");
  for (const auto& p : action.generator_images)
    require(p.size() == action.degree && is_permutation(p), "action image is not a permutation of the point set");

  std::vector<Permutation> images(g.order());
  images[0] = identity_permutation(action.degree);
  for (std::size_t a = 0; a < g.order(); ++a) {
    // Ids are in BFS order, so every element's prefix is already known.
    const auto x = static_cast<EnumeratedGroup::Element>(a);
    const Word& w = g.word(x);
    if (w.empty()) continue;
    Word prefix(w.begin(), w.end() - 1);
    const auto p = g.evaluate(prefix);
    images[a] = compose(action.generator_images[w.back() - 1], images[p]);
  }
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t k = 0; k < g.generator_count(); ++k) {
      const auto y = g.right_mul_generator(static_cast<EnumeratedGroup::Element>(a), k);
      if (images[y] != compose(action.generator_images[k], images[a]))
        throw DomainError("generator images do not define a group action");
    }
  return images;
}

}  // namespace f1
