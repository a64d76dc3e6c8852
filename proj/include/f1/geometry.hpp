#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f1/group.hpp"
#include "json.hpp"

namespace f1 {

/// A typed incidence structure Γ = (X, *, I, t). Objects are 0..size-1.
///
/// Construction only checks that indices are in range; the incidence axioms
/// (surjective type map, irreflexivity, no same-type incidence) are reported
/// by validate() rather than enforced, so malformed input can be diagnosed.
class Geometry {
 public:
  using Object = std::uint32_t;
  using Flag = std::vector<Object>;

  Geometry() = default;
  Geometry(std::vector<std::string> type_names, std::vector<std::uint32_t> types,
           const std::vector<std::pair<Object, Object>>& incidences);

  std::size_t size() const { return types_.size(); }
  std::size_t rank() const { return type_names_.size(); }
  std::uint32_t type(Object x) const { return types_[x]; }
  const std::vector<std::uint32_t>& types() const { return types_; }
  const std::vector<std::string>& type_names() const { return type_names_; }
  const std::vector<Object>& neighbors(Object x) const { return adj_[x]; }
  bool incident(Object x, Object y) const;
  /// Incident pairs with x < y, sorted.
  std::vector<std::pair<Object, Object>> incidences() const;
  std::vector<Object> objects_of_type(std::uint32_t t) const;
  std::size_t self_incidences() const { return self_loops_; }

  /// Subgeometry on the given objects with the same type set.
  Geometry induced(const std::vector<Object>& objects) const;

 private:
  std::vector<std::string> type_names_;
  std::vector<std::uint32_t> types_;
  std::vector<std::vector<Object>> adj_;
  std::size_t self_loops_ = 0;
};

using Flag = Geometry::Flag;

struct ValidationReport {
  bool valid = true;
  bool connected = false;
  std::vector<std::string> violations;
};

/// Surjectivity of the type map, irreflexivity, and that objects of one type
/// are never incident; plus connectivity of the incidence graph (the graph
/// without vertices has no component, so the empty geometry is not connected).
ValidationReport validate(const Geometry& g);
/// Throws DomainError listing the first violation.
void require_valid(const Geometry& g);

bool is_connected(const Geometry& g);
bool is_flag(const Geometry& g, const Flag& f);
/// All flags including the empty one, each sorted, in lexicographic order.
std::vector<Flag> all_flags(const Geometry& g);
/// Flags of a given size.
std::vector<Flag> flags_of_size(const Geometry& g, std::size_t k);
/// Maximal flags meeting every type.
std::vector<Flag> chambers(const Geometry& g);

/// Objects outside F incident with every member of F.
std::vector<Geometry::Object> residue_objects(const Geometry& g, const Flag& f);
/// Residue with type set I \ t(F) (names kept, order kept). Throws DomainError
/// if F is not a flag.
Geometry residue(const Geometry& g, const Flag& f);

/// Every residue of rank >= 2 connected and every residue of rank 1 nonempty.
bool residually_connected(const Geometry& g);

/// Every corank-1 flag lies in exactly two chambers.
bool is_thin(const Geometry& g);
/// Every corank-1 flag lies in at least three chambers.
bool is_thick(const Geometry& g);

enum class TypeMatching { Exact, Permuted };

/// Isomorphism as a map from a's objects to b's. With TypeMatching::Exact type
/// i goes to type i; Permuted allows any bijection of the type sets.
std::optional<std::vector<Geometry::Object>> find_isomorphism(const Geometry& a, const Geometry& b,
                                                              TypeMatching m = TypeMatching::Exact);
bool isomorphic(const Geometry& a, const Geometry& b, TypeMatching m = TypeMatching::Exact);

/// Order of the automorphism group; with preserve_types = false, automorphisms
/// of the bare incidence graph.
std::uint64_t count_automorphisms(const Geometry& g, bool preserve_types = true);

/// Type-i objects are the left cosets x*H_i; cosets are incident when they
/// intersect. `object_of[i][x]` is the object holding the coset of element x.
struct CosetGeometry {
  Geometry geometry;
  std::vector<std::vector<Geometry::Object>> object_of;
};
CosetGeometry coset_geometry(const EnumeratedGroup& group, const std::vector<ElementSet>& subgroups,
                             std::vector<std::string> type_names);

/// {types: [names], objects: [{id, type}], incidences: [[id, id]]}.
nlohmann::json to_json(const Geometry& g);
/// Accepts integer or string ids, and type names or indices.
Geometry geometry_from_json(const nlohmann::json& j);
/// Undirected DOT with vertices colored by type.
std::string to_dot(const Geometry& g);

}  // namespace f1
