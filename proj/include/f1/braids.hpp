#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "f1/coxeter.hpp"
#include "f1/f1linalg.hpp"
#include "f1/group.hpp"

namespace f1 {

/// A word in σ_1^{±1}, ..., σ_{n-1}^{±1}; letter i > 0 is σ_i, -i its inverse.
struct BraidWord {
  std::size_t strands = 1;
  Word letters;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Validates letters against the strand count. Throws DomainError.
BraidWord make_braid(std::size_t strands, Word letters);
/// "s1 s2^-1 s1", "1 -2 1" or a mix; commas count as spaces and "s2^3"
/// repeats a letter. strands = 0 takes the smallest count that fits.
BraidWord parse_braid(const std::string& text, std::size_t strands = 0);
std::string to_string(const BraidWord& w);

/// Cancels adjacent σ_i σ_i^-1 until none remain.
BraidWord free_reduce(const BraidWord& w);

/// Product of the transpositions (i i+1), one per letter, left to right.
Permutation gamma(const BraidWord& w);
bool is_pure(const BraidWord& w);

/// ρ(σ_i) in GL_n(F1^n): the identity except for the block [[0, μ], [μ^-1, 0]]
/// on rows and columns i, i+1. A negative letter gives the inverse matrix.
/// Throws DomainError if |letter| is not in 1..n-1.
MonomialMatrix rho(int letter, std::size_t strands);
MonomialMatrix rho(const BraidWord& w);

/// The subgroup of GL_n(F1^n) generated by the ρ(σ_i).
struct RhoImage {
  ClosureResult<MonomialMatrix> closure;
  bool nonabelian = false;
  bool involutions = false;      // every ρ(σ_i)^2 = 1
  bool braid_relations = false;  // both Artin relations hold exactly
  bool not_faithful = false;     // ρ(σ_1^2) = 1 although σ_1^2 is a reduced nonempty word
};
/// Throws VerificationError unless the order is n!, ResourceError above bound.
RhoImage rho_image(std::size_t strands, std::size_t bound = 200000);

/// Finite simple graph on vertices 0..vertices-1.
struct SimpleGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool adjacent(std::size_t a, std::size_t b) const;
};
/// Throws DomainError on loops, repeated edges or bad vertices.
void check_graph(const SimpleGraph& g);
/// k vertices, i joined to i+1.
SimpleGraph path_graph(std::size_t k);

/// xyx(yxy)^-1 for adjacent x, y and the commutator for non-adjacent ones,
/// one relator per pair of vertices.
Presentation artin_group(const SimpleGraph& g);
/// m_xy = 3 on edges and 2 elsewhere.
CoxeterMatrix graph_coxeter_matrix(const SimpleGraph& g);

/// A(Γ) with v^d added for every vertex, enumerated by Todd–Coxeter.
std::variant<EnumeratedGroup, Overflow> shephard_group(const SimpleGraph& g, unsigned d,
                                                       std::size_t max_cosets = 200000);

}  // namespace f1
