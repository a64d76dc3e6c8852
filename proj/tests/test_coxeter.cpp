#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "f1/coxeter.hpp"

using namespace f1;

namespace {

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

EnumeratedGroup group_of(const CoxeterMatrix& m) {
  auto r = coxeter_group(m);
  REQUIRE(std::holds_alternative<EnumeratedGroup>(r));
  return std::get<EnumeratedGroup>(r);
}

CoxeterDiagram relabel(const CoxeterDiagram& d, const std::vector<std::size_t>& perm) {
  CoxeterDiagram out;
  out.vertices = d.vertices;
  for (auto e : d.edges) {
    auto [i, j] = std::minmax(perm[e.i], perm[e.j]);
    out.edges.push_back({i, j, e.label});
  }
  std::sort(out.edges.begin(), out.edges.end(),
            [](const auto& a, const auto& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
  return out;
}

}  // namespace

TEST_CASE("Coxeter matrices and diagrams") {
  CHECK_THROWS_AS(CoxeterMatrix({{1, 3}, {2, 1}}), DomainError);
  CHECK_THROWS_AS(CoxeterMatrix({{1, 1}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(CoxeterMatrix(std::vector<std::vector<std::uint32_t>>{{2}}), DomainError);
  auto f4 = parse_coxeter_type("F4");
  CHECK(matrix_of(diagram_of(f4)) == f4);
  CHECK(parse_coxeter_type("C3") == parse_coxeter_type("B_3"));
  CHECK(parse_coxeter_type("I2(inf)")(0, 1) == CoxeterMatrix::kInfinity);
  CHECK_THROWS_AS(parse_coxeter_type("D3"), DomainError);
  CHECK_THROWS_AS(parse_coxeter_type("X5"), DomainError);

  auto dot = to_dot(diagram_of(parse_coxeter_type("B3")));
  CHECK(dot == "graph coxeter {\n  s1;\n  s2;\n  s3;\n  s1 -- s2;\n  s2 -- s3 [label=4];\n}\n");
  CHECK(parse_diagram(dot) == parse_coxeter_type("B3"));
  auto tri = parse_dot_diagram("graph { a -- b; b -- c; c -- a }");
  CHECK(tri.vertices == 3);
  CHECK(tri.edges.size() == 3);
  auto inf = parse_dot_diagram("graph g {\n x -- y [label=\"inf\"];\n}");
  CHECK(matrix_of(inf)(0, 1) == CoxeterMatrix::kInfinity);
  CHECK_THROWS_AS(parse_dot_diagram("digraph { a -> b }"), DomainError);
  CHECK_THROWS_AS(parse_dot_diagram("graph { a -- a }"), DomainError);
}

TEST_CASE("spherical classification") {
  CHECK(classify_spherical(parse_coxeter_type("A3")).name() == "A_3");
  CHECK(classify_spherical(parse_coxeter_type("I2(5)")).name() == "I_2(5)");
  CHECK(classify_spherical(parse_coxeter_type("I2(3)")).name() == "A_2");
  CHECK(classify_spherical(parse_coxeter_type("I2(4)")).name() == "B_2");
  CHECK(classify_spherical(parse_coxeter_type("I2(inf)")).name() == "NotSpherical");
  CHECK(classify_spherical(parse_coxeter_type("I2(2)")).name() == "NotIrreducible");
  CHECK(classify_spherical(parse_dot_diagram("graph { a -- b; b -- c; c -- a }")).name() == "NotSpherical");
  CHECK(classify_spherical(parse_dot_diagram("graph { a -- b [label=4]; b -- c; c -- d [label=4] }")).name() ==
        "NotSpherical");
  CHECK(classify_spherical(parse_dot_diagram("graph { a -- b; b -- c [label=5]; c -- d }")).name() ==
        "NotSpherical");
  CHECK(classify_spherical(parse_dot_diagram("graph { a -- b; b -- c; b -- d; b -- e }")).name() == "NotSpherical");
  CHECK(classify_spherical(parse_coxeter_type("H3")).group_order() == 120u);

  // Every catalog diagram with at most 6 vertices, under every relabelling.
  for (std::string name : {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "D4", "D5", "D6", "E6",
                           "F4", "H3", "H4", "I2(5)", "I2(6)", "I2(12)"}) {
    auto d = diagram_of(parse_coxeter_type(name));
    const auto expected = classify_spherical(d);
    CHECK(expected.spherical());
    std::vector<std::size_t> perm(d.vertices);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      CHECK(classify_spherical(relabel(d, perm)) == expected);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  CHECK(classify_spherical(parse_coxeter_type("E7")).name() == "E_7");
  CHECK(classify_spherical(parse_coxeter_type("E8")).name() == "E_8");
  CHECK(classify_spherical(parse_coxeter_type("D8")).name() == "D_8");
  CHECK(classify_spherical(parse_coxeter_type("B2")).name() == "B_2");
}

TEST_CASE("presentations") {
  auto p = presentation_of(CoxeterMatrix(std::vector<std::vector<std::uint32_t>>{{1}}));
  CHECK(p.relators == std::vector<Word>{{1, 1}});
  auto a2 = presentation_of(parse_coxeter_type("A2"));
  CHECK(a2.relators == std::vector<Word>{{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}});
  CHECK(presentation_of(parse_coxeter_type("I2(inf)")).relators.size() == 2);
  auto j = to_json(a2);
  CHECK(j.dump() == R"({"generators":2,"relators":[[1,1],[2,2],[1,2,1,2,1,2]]})");
  CHECK(presentation_from_json(j) == a2);
  CHECK_THROWS_AS(presentation_from_json(nlohmann::json::parse(R"({"generators":1,"relators":[[2]]})")),
                  DomainError);
  CHECK_THROWS_AS(presentation_from_json(nlohmann::json::parse(R"({"generators":1,"relators":[[]]})")),
                  DomainError);
}

TEST_CASE("Todd-Coxeter") {
  Presentation z2{1, {{1, 1}}};
  auto r = enumerate_presentation(z2);
  REQUIRE(std::holds_alternative<EnumeratedGroup>(r));
  CHECK(std::get<EnumeratedGroup>(r).order() == 2);

  // Cosets of <s1> in S_3 = W(A_2): three.
  auto t = todd_coxeter(presentation_of(parse_coxeter_type("A2")), {{1}});
  REQUIRE(std::holds_alternative<CosetTable>(t));
  CHECK(std::get<CosetTable>(t).index == 3);

  // Infinite dihedral group overflows cleanly, and larger caps go further.
  auto inf = coxeter_group(parse_coxeter_type("I2(inf)"), 1000);
  REQUIRE(std::holds_alternative<Overflow>(inf));
  CHECK(std::get<Overflow>(inf).limit == 1000);

  // A presentation needing coincidences: <a, b | a^3, b^3, (ab)^2> = A_4.
  Presentation a4{2, {{1, 1, 1}, {2, 2, 2}, {1, 2, 1, 2}}};
  auto g = enumerate_presentation(a4);
  REQUIRE(std::holds_alternative<EnumeratedGroup>(g));
  CHECK(std::get<EnumeratedGroup>(g).order() == 12);
  // <a, b | a b a^-1 b^-2, b a b^-1 a^-2> is trivial.
  Presentation triv{2, {{1, 2, -1, -2, -2}, {2, 1, -2, -1, -1}}};
  auto tg = enumerate_presentation(triv);
  REQUIRE(std::holds_alternative<EnumeratedGroup>(tg));
  CHECK(std::get<EnumeratedGroup>(tg).order() == 1);

  CHECK_THROWS_AS(todd_coxeter(z2, {{2}}), DomainError);
}

TEST_CASE("Coxeter group orders") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto w = group_of(parse_coxeter_type("A" + std::to_string(n)));
    CHECK(w.order() == factorial(n + 1));
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    auto m = parse_coxeter_type("B" + std::to_string(n));
    auto w = group_of(m);
    CHECK(w.order() == (std::size_t{1} << n) * factorial(n));
    CHECK(satisfies_coxeter_relations(w, m));
  }
  CHECK(group_of(parse_coxeter_type("D4")).order() == 192);
  CHECK(group_of(parse_coxeter_type("F4")).order() == 1152);
  CHECK(group_of(parse_coxeter_type("H3")).order() == 120);
  for (std::uint32_t m = 2; m <= 12; ++m) {
    auto mat = parse_coxeter_type("I2(" + std::to_string(m) + ")");
    auto w = group_of(mat);
    CHECK(w.order() == 2 * m);
    CHECK(satisfies_coxeter_relations(w, mat));
  }
}

TEST_CASE("word equality") {
  auto w = group_of(parse_coxeter_type("A2"));
  CHECK(word_eq(w, {1, 2, 1}, {2, 1, 2}));
  CHECK_FALSE(word_eq(w, {1}, {2}));
  CHECK(word_eq(w, {1, 2}, {1, 2}));
  CHECK_THROWS_AS(word_eq(w, {3}, {1}), DomainError);
}

TEST_CASE("Coxeter complexes are thin with |W| chambers") {
  for (std::string name : {"A2", "A3", "B2", "B3", "I2(5)", "I2(6)", "I2(7)", "I2(8)"}) {
    auto m = parse_coxeter_type(name);
    auto w = group_of(m);
    auto g = coxeter_complex(w, m);
    CHECK(validate(g).valid);
    CHECK(is_thin(g));
    CHECK(residually_connected(g));
    CHECK(chambers(g).size() == w.order());
  }
  auto a2 = coxeter_complex(parse_coxeter_type("A2"));
  CHECK(a2.size() == 6);
  auto a3 = coxeter_complex(parse_coxeter_type("A3"));
  CHECK(a3.objects_of_type(0).size() == 4);
  CHECK(a3.objects_of_type(1).size() == 6);
  CHECK(a3.objects_of_type(2).size() == 4);
  CHECK_THROWS_AS(coxeter_complex(parse_coxeter_type("I2(inf)"), 500), ResourceError);
}
