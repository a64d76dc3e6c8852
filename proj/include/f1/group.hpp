#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "f1/errors.hpp"

namespace f1 {

/// Image list of a bijection on {0, ..., n-1}.
using Permutation = std::vector<std::uint32_t>;

/// Letters are 1-based generator indices; a negative letter is the inverse.
using Word = std::vector<int>;

Permutation identity_permutation(std::size_t n);
bool is_permutation(std::span<const std::uint32_t> p);
/// (p * q)(i) = p(q(i)): apply q first.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// +1 or -1.
int permutation_sign(const Permutation& p);
/// Cycle notation on 1-based points, e.g. "(1 2)(3 4 5)"; identity prints "()".
std::string cycle_notation(const Permutation& p);

/// A finite group materialized over identifiers 0..order-1 with 0 the identity.
///
/// The group is held as the right regular action of a generator list
/// (column k maps g to g * gen_k). Every element carries a shortest word in the
/// generators, found breadth-first, so element ids are in shortlex order of
/// those words. Products use a full table up to kTableLimit elements and walk
/// the word of the right factor above it.
class EnumeratedGroup {
 public:
  using Element = std::uint32_t;
  static constexpr std::size_t kTableLimit = 2048;
  static constexpr std::size_t kVerifyLimit = 5000;

  EnumeratedGroup() = default;

  /// Columns must be permutations of a common size whose generated group acts
  /// regularly with 0 as identity. Element ids are renumbered breadth-first.
  /// Throws DomainError if the action is not a regular group action.
  static EnumeratedGroup from_right_action(std::vector<std::vector<Element>> columns);

  /// Full Cayley table (row-major) plus generator element ids.
  static EnumeratedGroup from_table(std::size_t order, const std::vector<Element>& table,
                                    const std::vector<Element>& generators);

  std::size_t order() const { return order_; }
  std::size_t generator_count() const { return columns_.size(); }
  Element generator(std::size_t k) const { return generators_.at(k); }
  const std::vector<Element>& generators() const { return generators_; }
  Element identity() const { return 0; }

  Element mul(Element a, Element b) const;
  Element inverse(Element a) const { return inverse_[a]; }
  Element right_mul_generator(Element a, std::size_t k) const { return columns_[k][a]; }
  Element power(Element a, long long e) const;
  std::size_t element_order(Element a) const;

  /// Shortest word (1-based positive letters) representing the element.
  const Word& word(Element a) const { return words_[a]; }
  /// Evaluates a signed 1-based word; throws DomainError on a bad letter.
  Element evaluate(std::span<const int> word) const;

  bool is_abelian() const;

  /// Identity, inverse and (Light's test) associativity checks. Exhaustive for
  /// order <= kVerifyLimit, skipped above. Throws VerificationError.
  void verify() const;

  /// Mapping from the original ids handed to the factory to the renumbered ids.
  const std::vector<Element>& relabel() const { return relabel_; }

 private:
  void build();

  std::size_t order_ = 0;
  std::vector<std::vector<Element>> columns_;
  std::vector<std::vector<Element>> inverse_columns_;
  std::vector<Element> generators_;
  std::vector<Element> inverse_;
  std::vector<Word> words_;
  std::vector<Element> table_;
  std::vector<Element> relabel_;
};

using ElementSet = std::vector<EnumeratedGroup::Element>;

/// Closure of a generator set under multiplication; sorted element ids.
ElementSet subgroup_closure(const EnumeratedGroup& g, std::span<const EnumeratedGroup::Element> gens);
bool is_subgroup(const EnumeratedGroup& g, const ElementSet& sorted_elements);
/// Small generating set of a subgroup, chosen greedily in id order.
ElementSet generating_set(const EnumeratedGroup& g, const ElementSet& subgroup);
ElementSet intersect(const ElementSet& a, const ElementSet& b);
bool contains(const ElementSet& sorted, EnumeratedGroup::Element x);
/// Left cosets x*H as a coset index per element, numbered by first appearance.
std::vector<std::uint32_t> left_coset_index(const EnumeratedGroup& g, const ElementSet& subgroup,
                                            std::size_t* coset_count = nullptr);

/// A right action of a group on {0..degree-1}, one image per generator:
/// x^(g*h) = (x^g)^h, the same side as the right regular representation.
struct PermutationAction {
  std::size_t degree = 0;
  std::vector<Permutation> generator_images;
};

/// Image of every element under the action (walking shortest words).
/// Throws DomainError if the generator images do not define an action.
std::vector<Permutation> action_images(const EnumeratedGroup& g, const PermutationAction& action);

/// Generic closure of concrete generators. Elem needs operator== and the
/// supplied hash; mul(a, b) is the group law. Throws ResourceError above bound.
template <class Elem>
struct ClosureResult {
  EnumeratedGroup group;
  std::vector<Elem> elements;  // indexed by EnumeratedGroup element id
};

template <class Elem, class Mul, class Hash = std::hash<Elem>>
ClosureResult<Elem> close_generators(const Elem& identity, const std::vector<Elem>& gens, Mul mul,
                                                std::size_t bound, Hash hash = Hash{}) {
  std::vector<Elem> elements{identity};
  std::unordered_map<Elem, EnumeratedGroup::Element, Hash> index(16, hash);
  index.emplace(identity, 0);
  std::vector<std::vector<EnumeratedGroup::Element>> columns(gens.size());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Elem next = mul(elements[head], gens[k]);
      auto [it, inserted] = index.emplace(next, static_cast<EnumeratedGroup::Element>(elements.size()));
      if (inserted) {
        if (elements.size() >= bound)
          throw ResourceError("group closure exceeded bound of " + std::to_string(bound) + " elements");
        elements.push_back(std::move(next));
      }
      columns[k].push_back(it->second);
    }
  }
  ClosureResult<Elem> out;
  out.group = EnumeratedGroup::from_right_action(std::move(columns));
  out.elements.resize(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) out.elements[out.group.relabel()[i]] = std::move(elements[i]);
  return out;
}

/// Hash for vector-like keys of small integers.
struct VectorHash {
  template <class V>
  std::size_t operator()(const V& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace f1
