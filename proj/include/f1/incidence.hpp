#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "f1/coxeter.hpp"
#include "f1/finite_field.hpp"
#include "f1/geometry.hpp"

namespace f1 {

/// "point", "line", "plane", "solid", then "dim4", "dim5", ...
std::string subspace_type_name(std::size_t dimension);

// ---------------------------------------------------------------------------
// Rank 2

/// Generalized n-gon data for a rank-2 geometry whose type 0 is the points.
struct GPReport {
  std::uint32_t n = 0;
  std::size_t s = 0;  // points per line minus one
  std::size_t t = 0;  // lines per point minus one
  bool thick = false;
  bool thin = false;
  friend bool operator==(const GPReport&, const GPReport&) = default;
};

/// Girth and diameter of the incidence graph by breadth-first search from
/// every vertex; a report iff girth = 2·diameter and s, t are constant.
/// Throws DomainError unless rank 2.
std::optional<GPReport> gp_recognize(const Geometry& g);

/// Swaps the two types (and their names). Throws DomainError unless rank 2.
Geometry dualize(const Geometry& g);

/// m points and m lines, line i on points i and i+1 mod m. Requires m >= 3.
Geometry ordinary_ngon(std::uint32_t m);

/// Points are the 2-subsets of a 6-set, lines the partitions of the 6-set
/// into three 2-subsets; GQ(2,2).
Geometry gq22_model();

struct Rank2Label {
  enum class Kind { Di2, A2, B2, I2, Af, U, Unclassified };
  Kind kind = Kind::Unclassified;
  std::uint32_t m = 0;  // only for I2
  std::string name() const;
  friend bool operator==(const Rank2Label&, const Rank2Label&) = default;
};

/// Catalog of rank-2 geometries over F1. Requires every object on at most two
/// others (DomainError otherwise). A 2m-cycle is Di_2, A_2, B_2 or I_2(m);
/// one point on two lines is Af; every other finite path is U.
Rank2Label rank2_f1_classify(const Geometry& g);

// ---------------------------------------------------------------------------
// Projective spaces and quadrics

/// Subsets of an (n+1)-set of size 1..n, typed by size - 1, incidence by
/// strict containment. pg_f1(0) is one point and pg_f1(-1) is empty.
/// Throws ResourceError when the object count exceeds max_objects.
Geometry pg_f1(int n, std::size_t max_objects = 1u << 20);

/// Pair-free nonempty subsets of {x_0, y_0, ..., x_n, y_n} typed by size - 1.
/// With even_dimension the maximal ones are split into two types by the
/// parity of their intersection with {x_0, ..., x_n} (names "dimN+even",
/// "dimN+odd"). Point 2i is x_i, 2i+1 is y_i.
struct Quadric {
  Geometry geometry;
  std::vector<std::vector<std::uint32_t>> subsets;  // per object, sorted points
};
Quadric quadric_f1(std::uint32_t n, bool even_dimension, std::size_t max_objects = 1u << 20);

/// PG(n, q): nonzero proper subspaces of F_q^(n+1), typed by projective
/// dimension, incidence by containment.
struct ProjectiveGeometry {
  Geometry geometry;
  int n = 0;
  unsigned q = 0;
  /// Normalized representative (first nonzero coordinate 1) of every point,
  /// as field element codes; point ids are the projective points.
  std::vector<std::vector<std::uint32_t>> points;
  /// Per object, the sorted ids of the projective points it contains.
  std::vector<std::vector<std::uint32_t>> point_sets;
};
/// Throws DomainError unless q is a prime power and n >= -1, ResourceError
/// when the subspace count exceeds max_objects.
ProjectiveGeometry pg_fq(int n, unsigned q, std::size_t max_objects = 2000);

/// Subgeometry of the subspaces spanned by subsets of a basis (the standard
/// basis when `frame` is empty). Vectors are field element codes.
/// Throws DomainError if the frame is not a basis.
Geometry apartment_of(const ProjectiveGeometry& pg, const std::vector<std::vector<std::uint32_t>>& frame = {});

// ---------------------------------------------------------------------------
// Buekenhout–Tits diagrams

/// Labels on pairs of types: "Di", "A_2", "B_2", "I_2(m)", "C", "Af". A pair
/// without a label is Di. For C and Af the first type of the pair is points.
struct BTDiagram {
  std::size_t rank = 0;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::string> labels;
};

/// A_2 on consecutive types: the diagram of an n-dimensional projective space.
BTDiagram path_diagram(std::size_t rank);
/// Di, A_2, B_2 or I_2(m) from m_ij. Throws DomainError on ∞.
BTDiagram bt_diagram_of(const CoxeterMatrix& m);

struct DiagramReport {
  struct Entry {
    Flag flag;
    std::uint32_t i = 0, j = 0;
    std::string label;
    bool pass = false;
  };
  bool pass = true;
  std::vector<Entry> entries;
};

/// Classifies the residue of every corank-2 flag against its label.
/// Throws DomainError on an unknown label or a rank mismatch.
DiagramReport diagram_check(const Geometry& g, const BTDiagram& d);
/// Whether a rank-2 geometry (type 0 = points) lies in the class of a label.
bool matches_label(const Geometry& rank2, const std::string& label);

// ---------------------------------------------------------------------------
// Weyl functor

/// PG(n, q) claimed for `geometry`; q = 1 claims PG(n, F1).
struct ProjectiveSpaceClaim {
  int n = 0;
  unsigned q = 0;
  Geometry geometry;
};
struct PolygonClaim {
  Geometry geometry;
};
/// A building whose type k corresponds to generator k of the Weyl group.
struct BuildingClaim {
  Geometry geometry;
  EnumeratedGroup weyl;
};
/// A thin geometry, or a rank-2 catalog member (Af and U are not thin).
struct ThinClaim {
  Geometry geometry;
};
using WeylInput = std::variant<ProjectiveSpaceClaim, PolygonClaim, BuildingClaim, ThinClaim>;

/// pg_f1(n) for a projective space, ordinary_ngon(n) for a generalized n-gon,
/// the Coxeter complex of W for a building, the input for a thin geometry.
/// The claim is verified first; VerificationError if it does not hold.
Geometry weyl_image(const WeylInput& input);

}  // namespace f1
