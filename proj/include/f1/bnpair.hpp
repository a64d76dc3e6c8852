#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "f1/coxeter.hpp"
#include "f1/geometry.hpp"
#include "f1/group.hpp"
#include "f1/incidence.hpp"
#include "json.hpp"

namespace f1 {

/// A group of invertible matrices over Z/pZ or of permutations, enumerated by
/// closure. Matrices are row-major coefficient tuples; permutations are image
/// tuples. Element ids are those of `group`.
class ConcreteGroup {
 public:
  enum class Kind { Matrix, Permutation };
  using Element = EnumeratedGroup::Element;
  using Tuple = std::vector<std::uint32_t>;

  ConcreteGroup() = default;

  /// n×n matrices over F_p. Throws DomainError on a non-prime p, a wrong
  /// entry count or a singular matrix; ResourceError above bound.
  static ConcreteGroup matrices(unsigned p, std::size_t n, const std::vector<Tuple>& gens,
                                std::size_t bound = 500000);
  /// Permutations of {0..degree-1}.
  static ConcreteGroup permutations(std::size_t degree, const std::vector<Tuple>& gens,
                                    std::size_t bound = 500000);

  Kind kind() const { return kind_; }
  unsigned p() const { return p_; }
  std::size_t degree() const { return degree_; }
  const EnumeratedGroup& group() const { return group_; }
  std::size_t order() const { return group_.order(); }
  const Tuple& element(Element g) const { return elements_[g]; }
  std::optional<Element> find(const Tuple& t) const;
  /// Throws DomainError if t is not an element.
  Element id_of(const Tuple& t) const;
  /// "[[1,0],[0,1]]" or "[0,2,1]".
  std::string format(Element g) const;
  nlohmann::json to_json(Element g) const;

 private:
  Kind kind_ = Kind::Permutation;
  unsigned p_ = 0;
  std::size_t degree_ = 0;
  EnumeratedGroup group_;
  std::vector<Tuple> elements_;
  std::unordered_map<Tuple, Element, VectorHash> index_;
};

/// {"kind": "matrix", "p": 2, "n": 3, "generators": [[...], ...]} with each
/// matrix flat row-major or as rows, or {"kind": "permutation", "degree": d,
/// "generators": [[...]]}.
ConcreteGroup concrete_group_from_json(const nlohmann::json& j, std::size_t bound = 500000);
/// {"generators": [...]} (closed) or {"elements": [...]} (checked).
/// Throws DomainError on elements outside G or a non-subgroup list.
ElementSet subgroup_from_json(const ConcreteGroup& g, const nlohmann::json& j);
ElementSet subgroup_generated(const ConcreteGroup& g, const std::vector<ConcreteGroup::Tuple>& gens);

/// A verified Tits system. W = N/H is generated by S, which is generator list
/// of W in the order the cosets were found; W element w has representative
/// n_of_w[w] in N and double coset cells[w] = B n_w B.
struct TitsSystem {
  ConcreteGroup G;
  ElementSet B, N, H;
  EnumeratedGroup W;
  std::vector<EnumeratedGroup::Element> n_of_w;
  std::vector<ElementSet> cells;
  CoxeterMatrix coxeter;
  std::size_t rank() const { return W.generator_count(); }
};

struct BNFailure {
  std::string axiom;  // "BN1" .. "BN4"
  std::string message;
};

/// Computes H = B ∩ N, checks H ⊴ N, builds W = N/H, takes S as the
/// nontrivial w for which B ∪ BwB is a subgroup, checks that S consists of
/// involutions generating W, then (BN1), (BN3) for every pair (s, w), and
/// (BN4). A trivial W (S empty) fails (BN4). Throws DomainError if B or N is
/// not a subgroup of G.
std::variant<TitsSystem, BNFailure> verify_bn(const ConcreteGroup& g, const ElementSet& b, const ElementSet& n);

/// The four axioms recomputed from scratch by brute force over products:
/// double cosets as {b n_w b'}, BsBwB as BsB·n_w·B, sBs as a conjugate set.
/// Returns the first failure, if any.
std::optional<BNFailure> recheck_bn(const TitsSystem& ts);

struct BruhatDecomposition {
  std::vector<ElementSet> cells;                    // indexed by W element
  std::vector<EnumeratedGroup::Element> cell_of;    // W element per G element
};
/// Checks that the cells partition G and that P_I is the union of the cells
/// of W_I for every I ⊆ S. Throws VerificationError otherwise.
BruhatDecomposition bruhat(const TitsSystem& ts);

/// P_I = ⟨B, n_s : s ∈ I⟩, I given as 0-based indices into S.
ElementSet parabolic(const TitsSystem& ts, const std::vector<std::size_t>& subset);

/// Type s_i objects are the left cosets of P_{S∖{s_i}}; names "s1", "s2", ...
CosetGeometry coset_geometry(const TitsSystem& ts);

struct KernelReport {
  ElementSet K;  // intersection of all conjugates of B
  ElementSet E;  // intersection of the n_w B n_w^-1
  bool effective = false;
  bool saturated = false;
};
KernelReport kernel_saturation(const TitsSystem& ts);

/// G is transitive on the chambers of the coset geometry and the stabilizer
/// of the standard chamber is B.
bool chamber_transitivity(const TitsSystem& ts);

/// The Coxeter complex of W mapped into the building by w·W_J ↦ n_w·P_J.
struct ApartmentEmbedding {
  Geometry complex;
  std::vector<Geometry::Object> image;  // building object per complex object
  Geometry apartment;                   // induced on the image
};
/// Checks the map is well defined, injective and incidence preserving both
/// ways, that the image is thin and isomorphic to the complex, and that N and
/// E stabilize it. Throws VerificationError naming the offending objects.
ApartmentEmbedding apartment_embedding(const TitsSystem& ts);

/// Transitive and |G| = |X|. Throws DomainError if the images are not an action.
bool sharply_transitive_check(const EnumeratedGroup& g, const PermutationAction& action);

struct GLInstance {
  ConcreteGroup G;
  ElementSet B;  // upper triangular
  ElementSet N;  // monomial
};
/// GL_n(F_p) by closure of transvections and a diagonal generator.
GLInstance builtin_gl(std::size_t n, unsigned p, std::size_t bound = 500000);

/// {order_G, order_K, order_G_mod_K, order_B, order_N, order_H, order_E,
/// W_order, S_size, coxeter_matrix, axioms, cells, cell_sizes, effective,
/// saturated}.
nlohmann::json report_json(const TitsSystem& ts);

/// The building of a Tits system as input for weyl_image.
BuildingClaim building_claim(const TitsSystem& ts);

}  // namespace f1
