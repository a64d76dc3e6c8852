#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "f1/errors.hpp"
#include "f1/geometry.hpp"
#include "f1/group.hpp"
#include "json.hpp"

namespace f1 {

/// Symmetric matrix over {1, 2, 3, ...} ∪ {∞}; ∞ is stored as kInfinity (0).
class CoxeterMatrix {
 public:
  static constexpr std::uint32_t kInfinity = 0;

  CoxeterMatrix() = default;
  /// Throws DomainError unless square, symmetric, 1 on the diagonal and >= 2
  /// (or ∞) elsewhere.
  explicit CoxeterMatrix(std::vector<std::vector<std::uint32_t>> entries);

  std::size_t size() const { return m_.size(); }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  const std::vector<std::vector<std::uint32_t>>& entries() const { return m_; }
  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::vector<std::vector<std::uint32_t>> m_;
};

/// Vertices are the generators; an edge {i, j} carries m_ij >= 3 or ∞.
struct CoxeterDiagram {
  struct Edge {
    std::size_t i = 0, j = 0;
    std::uint32_t label = 3;  // CoxeterMatrix::kInfinity for ∞
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  std::size_t vertices = 0;
  std::vector<Edge> edges;  // i < j, sorted
  friend bool operator==(const CoxeterDiagram&, const CoxeterDiagram&) = default;
};

CoxeterDiagram diagram_of(const CoxeterMatrix& m);
/// Throws DomainError on a bad vertex, a loop, a repeated edge or a label < 2.
CoxeterMatrix matrix_of(const CoxeterDiagram& d);

/// Catalog matrices: "A3", "B4" (= "C4"), "D4", "E6", "F4", "H3", "I2(7)",
/// "I2(inf)"; an underscore after the letter is accepted ("I_2(5)").
CoxeterMatrix parse_coxeter_type(const std::string& name);
/// DOT text: `a -- b [label=m]`, an edge without label meaning 3 and
/// label=inf meaning ∞. Vertices are numbered in order of first appearance.
CoxeterDiagram parse_dot_diagram(const std::string& dot);
/// Terse name or DOT, whichever the text looks like.
CoxeterMatrix parse_diagram(const std::string& text);
/// Edges with m = 3 are unlabeled.
std::string to_dot(const CoxeterDiagram& d);

struct SphericalType {
  enum class Kind { NotIrreducible, NotSpherical, A, B, D, E, F, H, I };
  Kind kind = Kind::NotSpherical;
  std::uint32_t rank = 0;
  std::uint32_t m = 0;  // only for I_2(m)

  bool spherical() const { return kind != Kind::NotIrreducible && kind != Kind::NotSpherical; }
  /// "A_3", "I_2(5)", "NotSpherical", ...
  std::string name() const;
  /// |W| from the closed formulas; empty unless spherical.
  std::optional<std::uint64_t> group_order() const;
  friend bool operator==(const SphericalType&, const SphericalType&) = default;
};

/// Irreducible spherical type of a diagram, decided from vertex-labelling
/// invariant data (tree shape, branch arm lengths, position of the labels).
SphericalType classify_spherical(const CoxeterDiagram& d);
SphericalType classify_spherical(const CoxeterMatrix& m);

/// Group presentation; relators are signed 1-based words.
struct Presentation {
  std::size_t generators = 0;
  std::vector<Word> relators;
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// s_i^2 and (s_i s_j)^m_ij for i < j, m_ij finite.
Presentation presentation_of(const CoxeterMatrix& m);
nlohmann::json to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);
/// Throws DomainError on an empty relator or a letter out of range.
void check_presentation(const Presentation& p);

/// Action of the generators on the cosets of the subgroup, coset 0 being the
/// subgroup itself; columns[k][c] is c·s_k. Cosets are numbered breadth-first.
struct CosetTable {
  std::size_t index = 0;
  std::vector<std::vector<std::uint32_t>> columns;
};

/// Todd–Coxeter enumeration, HLT strategy. Overflow when more than max_cosets
/// cosets would be defined; enumeration is deterministic, so a rerun with a
/// larger cap continues where this one stopped.
std::variant<CosetTable, Overflow> todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                                                std::size_t max_cosets = 200000);

/// The group itself (trivial subgroup) with generator k the image of s_(k+1).
std::variant<EnumeratedGroup, Overflow> enumerate_presentation(const Presentation& p,
                                                               std::size_t max_cosets = 200000);

std::variant<EnumeratedGroup, Overflow> coxeter_group(const CoxeterMatrix& m, std::size_t max_cosets = 200000);

/// m_ij as the order of s_i s_j in a finite group generated by involutions.
/// Throws DomainError if a generator is not an involution.
CoxeterMatrix coxeter_matrix_of(const EnumeratedGroup& w);

/// Every generator is an involution and s_i s_j has order exactly m_ij.
bool satisfies_coxeter_relations(const EnumeratedGroup& w, const CoxeterMatrix& m);

/// Type-i objects are the cosets w·W_{S∖{s_i}}, incident when they meet.
/// Type names are "s1", "s2", ...
Geometry coxeter_complex(const EnumeratedGroup& w, const CoxeterMatrix& m);
/// The same complex with object_of[i][w], the type-i coset containing w.
CosetGeometry coxeter_complex_cosets(const EnumeratedGroup& w);
/// Enumerates W first; throws ResourceError if that overflows.
Geometry coxeter_complex(const CoxeterMatrix& m, std::size_t max_cosets = 200000);

bool word_eq(const EnumeratedGroup& g, const Word& a, const Word& b);

}  // namespace f1
