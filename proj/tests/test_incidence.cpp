#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "doctest.h"
#include "f1/incidence.hpp"
#include "f1/qnum.hpp"

using namespace f1;

namespace {

std::uint64_t fact(std::uint64_t n) { return n <= 1 ? 1 : n * fact(n - 1); }

// Lines of the Fano plane as triples {i, i+1, i+3} mod 7.
Geometry fano() {
  std::vector<std::uint32_t> types(14, 0);
  std::fill(types.begin() + 7, types.end(), 1u);
  std::vector<std::pair<Geometry::Object, Geometry::Object>> inc;
  for (std::uint32_t l = 0; l < 7; ++l)
    for (std::uint32_t d : {0u, 1u, 3u}) inc.emplace_back((l + d) % 7, 7 + l);
  return Geometry({"point", "line"}, types, inc);
}

// Point-line geometry from lines given as point lists.
Geometry from_lines(std::uint32_t points, const std::vector<std::vector<std::uint32_t>>& lines) {
  std::vector<std::uint32_t> types(points, 0);
  types.resize(points + lines.size(), 1);
  std::vector<std::pair<Geometry::Object, Geometry::Object>> inc;
  for (std::uint32_t l = 0; l < lines.size(); ++l)
    for (auto p : lines[l]) inc.emplace_back(p, points + l);
  return Geometry({"point", "line"}, types, inc);
}

}  // namespace

TEST_CASE("generalized polygons") {
  for (std::uint32_t m = 3; m <= 8; ++m) {
    auto g = ordinary_ngon(m);
    auto r = gp_recognize(g);
    REQUIRE(r);
    CHECK(*r == GPReport{m, 1, 1, false, true});
    CHECK(count_automorphisms(g) == 2 * m);
  }
  CHECK(count_automorphisms(ordinary_ngon(4), false) == 16);
  CHECK_THROWS_AS(ordinary_ngon(2), DomainError);

  auto f = gp_recognize(fano());
  REQUIRE(f);
  CHECK(*f == GPReport{3, 2, 2, true, false});

  auto gq = gq22_model();
  CHECK(gq.size() == 30);
  auto r = gp_recognize(gq);
  REQUIRE(r);
  CHECK(*r == GPReport{4, 2, 2, true, false});
  auto rd = gp_recognize(dualize(gq));
  REQUIRE(rd);
  CHECK(rd->s == 2);
  CHECK(rd->t == 2);

  // Path point-line-point and a line with three points on it: not polygons.
  CHECK_FALSE(gp_recognize(from_lines(2, {{0, 1}})));
  CHECK_FALSE(gp_recognize(from_lines(3, {{0, 1, 2}})));
  CHECK_THROWS_AS(gp_recognize(pg_f1(3)), DomainError);

  // Grid 3x3 (a generalized quadrangle with t = 1): thin by the s or t rule.
  auto grid = from_lines(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
  auto rg = gp_recognize(grid);
  REQUIRE(rg);
  CHECK(*rg == GPReport{4, 2, 1, false, true});
  auto rgd = gp_recognize(dualize(grid));
  REQUIRE(rgd);
  CHECK(rgd->s == 1);
  CHECK(rgd->t == 2);
}

TEST_CASE("duality") {
  for (std::uint32_t m = 3; m <= 6; ++m) CHECK(isomorphic(dualize(ordinary_ngon(m)), ordinary_ngon(m)));
  for (const auto& g : {fano(), gq22_model(), ordinary_ngon(5), from_lines(1, {{0}, {0}})})
    CHECK(isomorphic(dualize(dualize(g)), g));
  // The dual of Af (one point on two lines) is two points on one line.
  auto af = from_lines(1, {{0}, {0}});
  auto d = dualize(af);
  CHECK(d.objects_of_type(0).size() == 2);
  CHECK(d.objects_of_type(1).size() == 1);
}

TEST_CASE("rank-2 F1 catalog") {
  using K = Rank2Label::Kind;
  CHECK(rank2_f1_classify(from_lines(2, {{0, 1}, {0, 1}})).kind == K::Di2);
  CHECK(rank2_f1_classify(ordinary_ngon(3)).kind == K::A2);
  CHECK(rank2_f1_classify(ordinary_ngon(4)).kind == K::B2);
  CHECK(rank2_f1_classify(ordinary_ngon(7)) == Rank2Label{K::I2, 7});
  CHECK(rank2_f1_classify(ordinary_ngon(7)).name() == "I_2(7)");
  CHECK(rank2_f1_classify(from_lines(1, {{0}, {0}})).kind == K::Af);
  CHECK(rank2_f1_classify(from_lines(2, {{0, 1}})).kind == K::U);
  CHECK(rank2_f1_classify(from_lines(3, {{0, 1}, {1, 2}, {2}})).kind == K::U);
  CHECK(rank2_f1_classify(from_lines(4, {{0, 1}, {2, 3}})).kind == K::Unclassified);
  CHECK_THROWS_AS(rank2_f1_classify(fano()), DomainError);
}

TEST_CASE("projective spaces over F1") {
  CHECK(pg_f1(-1).size() == 0);
  CHECK(pg_f1(0).size() == 1);
  CHECK(isomorphic(pg_f1(2), ordinary_ngon(3)));
  for (int n = 1; n <= 4; ++n) {
    auto g = pg_f1(n);
    CHECK(validate(g).valid);
    for (int k = 0; k < n; ++k)
      CHECK(BigInt(g.objects_of_type(static_cast<std::uint32_t>(k)).size()) == binomial(n + 1, k + 1));
    CHECK(count_automorphisms(g) == fact(n + 1));
    CHECK(diagram_check(g, path_diagram(static_cast<std::size_t>(n))).pass);
    CHECK(residually_connected(g));
    CHECK(is_thin(g));
  }
  CHECK_THROWS_AS(pg_f1(10, 100), ResourceError);

  // Residue of a nested point and plane in pg_f1(3): the two lines between.
  auto g = pg_f1(3);
  auto flag = Flag{0, 10};  // {0} and {0,1,2}
  REQUIRE(is_flag(g, flag));
  CHECK(residue(g, flag).size() == 2);
  CHECK(residually_connected(ordinary_ngon(5)));
}

TEST_CASE("quadrics over F1") {
  for (std::uint32_t n = 1; n <= 3; ++n)
    for (bool even : {false, true}) {
      auto q = quadric_f1(n, even);
      CHECK(validate(q.geometry).valid);
      std::size_t maximal = 0;
      for (const auto& s : q.subsets) {
        maximal += s.size() == n + 1;
        for (std::uint32_t i = 0; i <= n; ++i)
          CHECK_FALSE((std::count(s.begin(), s.end(), 2 * i) && std::count(s.begin(), s.end(), 2 * i + 1)));
      }
      CHECK(maximal == (std::size_t{1} << (n + 1)));
      if (even) {
        CHECK(q.geometry.objects_of_type(n).size() == (std::size_t{1} << n));
        CHECK(q.geometry.objects_of_type(n + 1).size() == (std::size_t{1} << n));
      }
    }
  auto q1 = quadric_f1(1, false);
  CHECK(q1.geometry.objects_of_type(1).size() == 4);
  CHECK(isomorphic(q1.geometry, ordinary_ngon(4)));

  // Permutations preserving the pairing map subspaces to subspaces.
  for (std::uint32_t n = 1; n <= 2; ++n) {
    auto q = quadric_f1(n, false);
    std::set<std::vector<std::uint32_t>> subspaces(q.subsets.begin(), q.subsets.end());
    std::vector<std::uint32_t> pairs(n + 1);
    std::iota(pairs.begin(), pairs.end(), 0);
    std::size_t count = 0;
    do {
      for (std::uint32_t flips = 0; flips < (1u << (n + 1)); ++flips) {
        std::vector<std::uint32_t> img(2 * (n + 1));
        for (std::uint32_t i = 0; i <= n; ++i) {
          const std::uint32_t f = flips >> i & 1;
          img[2 * i] = 2 * pairs[i] + f;
          img[2 * i + 1] = 2 * pairs[i] + 1 - f;
        }
        for (const auto& s : q.subsets) {
          std::vector<std::uint32_t> t;
          for (auto p : s) t.push_back(img[p]);
          std::sort(t.begin(), t.end());
          CHECK(subspaces.count(t) == 1);
        }
        ++count;
      }
    } while (std::next_permutation(pairs.begin(), pairs.end()));
    CHECK(count_automorphisms(q.geometry) == count);
  }
}

TEST_CASE("projective spaces over finite fields") {
  auto line = pg_fq(1, 3);
  CHECK(line.geometry.size() == 4);
  CHECK(line.geometry.rank() == 1);

  auto pg22 = pg_fq(2, 2);
  CHECK(pg22.geometry.objects_of_type(0).size() == 7);
  CHECK(pg22.geometry.objects_of_type(1).size() == 7);
  CHECK(isomorphic(pg22.geometry, fano()));
  auto r = gp_recognize(pg22.geometry);
  REQUIRE(r);
  CHECK(*r == GPReport{3, 2, 2, true, false});

  for (auto [n, q] : std::vector<std::pair<int, unsigned>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}}) {
    auto pg = pg_fq(n, q);
    for (int k = 0; k < n; ++k)
      CHECK(BigInt(pg.geometry.objects_of_type(static_cast<std::uint32_t>(k)).size()) ==
            eval(gaussian_binomial(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(k + 1)), q));
    CHECK(diagram_check(pg.geometry, path_diagram(static_cast<std::size_t>(n))).pass);
  }
  CHECK(residually_connected(pg_fq(3, 2).geometry));
  CHECK_THROWS_AS(pg_fq(2, 6), DomainError);
  CHECK_THROWS_AS(pg_fq(3, 5, 100), ResourceError);
  CHECK(pg_fq(0, 5).geometry.size() == 1);

  auto apt = apartment_of(pg22);
  CHECK(isomorphic(apt, pg_f1(2)));
  CHECK_THROWS_AS(apartment_of(pg22, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), DomainError);
}

TEST_CASE("every frame gives an apartment isomorphic to PG(n, F1)") {
  for (auto [n, q] : std::vector<std::pair<int, unsigned>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
    auto pg = pg_fq(n, q);
    const auto target = pg_f1(n);
    const std::size_t d = static_cast<std::size_t>(n + 1);
    std::vector<std::uint32_t> pick(d);
    std::size_t frames = 0;
    // Unordered (n+1)-sets of points that are independent.
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t k, std::uint32_t from) {
      if (k == d) {
        std::vector<std::vector<std::uint32_t>> frame;
        for (auto p : pick) frame.push_back(pg.points[p]);
        try {
          auto apt = apartment_of(pg, frame);
          ++frames;
          CHECK(isomorphic(apt, target));
        } catch (const DomainError&) {
        }
        return;
      }
      for (std::uint32_t p = from; p < pg.points.size(); ++p) {
        pick[k] = p;
        rec(k + 1, p + 1);
      }
    };
    rec(0, 0);
    // Number of unordered bases up to scalars: |GL_{n+1}(q)| / ((q-1)^{n+1} (n+1)!).
    std::uint64_t gl = 1, qn = 1;
    for (std::size_t i = 0; i < d; ++i) qn *= q;
    for (std::size_t i = 0, qi = 1; i < d; ++i, qi *= q) gl *= qn - qi;
    std::uint64_t scal = 1;
    for (std::size_t i = 0; i < d; ++i) scal *= q - 1;
    CHECK(frames == gl / scal / fact(d));
  }
}

TEST_CASE("diagram labels") {
  CHECK(matches_label(ordinary_ngon(3), "A_2"));
  CHECK_FALSE(matches_label(ordinary_ngon(4), "A_2"));
  CHECK(matches_label(gq22_model(), "B_2"));
  CHECK(matches_label(ordinary_ngon(6), "I_2(6)"));
  CHECK(matches_label(from_lines(2, {{0, 1}, {0, 1}}), "Di"));
  CHECK(matches_label(from_lines(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), "C"));
  CHECK_FALSE(matches_label(from_lines(2, {{0, 1}}), "C"));
  // Affine planes of orders 2 and 3.
  CHECK(matches_label(from_lines(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}}), "Af"));
  CHECK(matches_label(from_lines(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8},
                                     {0, 4, 8}, {1, 5, 6}, {2, 3, 7}, {0, 5, 7}, {1, 3, 8}, {2, 4, 6}}),
                      "Af"));
  CHECK_FALSE(matches_label(fano(), "Af"));
  CHECK_THROWS_AS(matches_label(fano(), "Z"), DomainError);

  auto bad = diagram_check(ordinary_ngon(4), path_diagram(2));
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.entries.size() == 1);
  CHECK(bad.entries[0].label == "A_2");
  BTDiagram unknown{2, {{{0, 1}, "Q"}}};
  CHECK_THROWS_AS(diagram_check(ordinary_ngon(4), unknown), DomainError);

  // Coxeter complexes follow their own Coxeter diagram.
  for (std::string name : {"A3", "B3", "H3"}) {
    auto m = parse_coxeter_type(name);
    CHECK(diagram_check(coxeter_complex(m), bt_diagram_of(m)).pass);
  }
}

TEST_CASE("Weyl images") {
  auto tri = weyl_image(ProjectiveSpaceClaim{2, 2, pg_fq(2, 2).geometry});
  CHECK(isomorphic(tri, ordinary_ngon(3)));
  CHECK(isomorphic(weyl_image(ThinClaim{tri}), tri));
  CHECK(isomorphic(weyl_image(ProjectiveSpaceClaim{2, 1, tri}), tri));
  auto quad = weyl_image(PolygonClaim{gq22_model()});
  CHECK(isomorphic(quad, ordinary_ngon(4)));
  auto p3 = weyl_image(ProjectiveSpaceClaim{3, 3, pg_fq(3, 3).geometry});
  CHECK(isomorphic(p3, pg_f1(3)));

  auto a3 = parse_coxeter_type("A3");
  auto w = std::get<EnumeratedGroup>(coxeter_group(a3));
  auto cc = weyl_image(BuildingClaim{pg_fq(3, 2).geometry, w});
  CHECK(isomorphic(cc, pg_f1(3)));

  CHECK_THROWS_AS(weyl_image(ProjectiveSpaceClaim{2, 3, pg_fq(2, 2).geometry}), VerificationError);
  CHECK_THROWS_AS(weyl_image(PolygonClaim{from_lines(3, {{0, 1, 2}})}), VerificationError);
  CHECK_THROWS_AS(weyl_image(ThinClaim{fano()}), VerificationError);
  CHECK(weyl_image(ThinClaim{from_lines(1, {{0}, {0}})}).size() == 3);

  // Idempotence on every supported input.
  std::vector<WeylInput> corpus{ProjectiveSpaceClaim{2, 2, pg_fq(2, 2).geometry},
                                ProjectiveSpaceClaim{3, 2, pg_fq(3, 2).geometry},
                                ProjectiveSpaceClaim{1, 4, pg_fq(1, 4).geometry},
                                PolygonClaim{gq22_model()},
                                PolygonClaim{fano()},
                                PolygonClaim{ordinary_ngon(8)},
                                BuildingClaim{pg_fq(3, 2).geometry, w},
                                ThinClaim{ordinary_ngon(5)},
                                ThinClaim{pg_f1(3)},
                                ThinClaim{from_lines(1, {{0}, {0}})}};
  for (const auto& x : corpus) {
    auto once = weyl_image(x);
    auto twice = weyl_image(ThinClaim{once});
    CHECK(isomorphic(once, twice));
  }
}
