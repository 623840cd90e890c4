#include <gtest/gtest.h>

#include <set>

#include "lieprobe/geometry.hpp"
#include "oracles.hpp"

using namespace lieprobe;

namespace {

Geometry make(const oracle::RawGeometry& r) { return Geometry(r.n, r.lines); }

std::vector<int> all_points(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Geometry fano() { return make(oracle::projective2(3)); }

int point_off(const Geometry& d, const std::vector<int>& line) {
  for (int p = 0;; ++p)
    if (!std::binary_search(line.begin(), line.end(), p)) return p;
}

void expect_code(ErrorCode code, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Geometry, ConstructorRejectsBadInput) {
  expect_code(ErrorCode::InvalidGeometry, [] { Geometry(3, {{0}}); });
  expect_code(ErrorCode::InvalidGeometry, [] { Geometry(3, {{0, 3}}); });
  expect_code(ErrorCode::InvalidGeometry, [] { Geometry(3, {{0, 1, 1}}); });
  expect_code(ErrorCode::InvalidGeometry, [] { Geometry(3, {{0, 1}, {1, 0}}); });
  expect_code(ErrorCode::InvalidGeometry, [] { Geometry(3, {{0, 1}, {0, 1, 2}}); });
  expect_code(ErrorCode::InvalidGeometry, [] { Geometry(2, {{0, 1}}, {"a"}); });
}

TEST(Geometry, PointGraphIsCollinearity) {
  auto raw = oracle::projective2(4);
  Geometry d = make(raw);
  EXPECT_EQ(oracle::adjacency(point_graph(d)), oracle::collinearity(raw));
}

TEST(Geometry, LineOfFindsTheJoiningLine) {
  Geometry d = make(oracle::symplectic_polar2(4));
  GeometryIndex idx(d);
  const Graph& g = idx.collinearity();
  for (int p = 0; p < d.n_points(); ++p)
    for (int w = 0; w < d.n_points(); ++w) {
      int li = idx.line_of(p, w);
      if (p == w || !g.adjacent(p, w)) {
        EXPECT_EQ(li, -1);
        continue;
      }
      ASSERT_GE(li, 0);
      const auto& l = d.lines()[li];
      EXPECT_TRUE(std::binary_search(l.begin(), l.end(), p));
      EXPECT_TRUE(std::binary_search(l.begin(), l.end(), w));
    }
}

TEST(Geometry, PartialLinearity) {
  EXPECT_TRUE(check_partial_linear(fano()).holds);
  auto r = check_partial_linear(Geometry(4, {{0, 1, 2}, {0, 1, 3}}));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.witness, (std::vector<int>{0, 1}));
  EXPECT_FALSE(check_partial_linear(Geometry(3, {{0, 1}})).holds);
}

TEST(Geometry, GammaAndShultOnPolarSpace) {
  Geometry d = make(oracle::symplectic_polar2(6));
  EXPECT_TRUE(check_gamma(d).holds);
  EXPECT_TRUE(check_shult(d).holds);
  EXPECT_FALSE(check_degenerate(d).holds);
}

// A 3x3 grid is a generalized quadrangle: each point off a line sees exactly
// one of its points. Two disjoint lines keep gamma but break Shult.
TEST(Geometry, GridIsShultDisjointLinesAreNot) {
  EXPECT_TRUE(check_shult(make(oracle::grid(2))).holds);
  Geometry d(6, {{0, 1, 2}, {3, 4, 5}});
  EXPECT_TRUE(check_gamma(d).holds);
  auto s = check_shult(d);
  ASSERT_FALSE(s.holds);
  ASSERT_EQ(s.witness.size(), 2u);
  int p = s.witness[0];
  const auto& l = d.lines()[s.witness[1]];
  auto m = oracle::adjacency(point_graph(d));
  int seen = 0;
  for (int x : l) seen += m[p][x];
  EXPECT_EQ(seen, 0);
}

// Two lines through a common point plus one extra point collinear with two
// points of a third line breaks gamma.
TEST(Geometry, GammaViolationWitness) {
  Geometry d(6, {{0, 1, 2}, {3, 0, 4}, {3, 1, 5}});
  auto r = check_gamma(d);
  ASSERT_FALSE(r.holds);
  int p = r.witness[0];
  const auto& l = d.lines()[r.witness[1]];
  auto m = oracle::adjacency(point_graph(d));
  int seen = 0;
  for (int x : l) seen += m[p][x];
  EXPECT_GT(seen, 1);
  EXPECT_LT(seen, static_cast<int>(l.size()));
}

TEST(Geometry, DegenerateCone) {
  // Point 0 on every line: collinear with all.
  Geometry d(5, {{0, 1, 2}, {0, 3, 4}});
  auto r = check_degenerate(d);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.witness, std::vector<int>{0});
}

TEST(Geometry, FanoIsProjectivePlane) {
  auto pc = check_projective_space(fano(), all_points(7), 2);
  EXPECT_TRUE(pc.holds) << pc.detail;
  EXPECT_EQ(pc.dimension, 2);
}

TEST(Geometry, FifteenPointSpaceIsProjectiveThreeSpace) {
  Geometry d = make(oracle::projective2(4));
  auto pc = check_projective_space(d, all_points(15), 2);
  EXPECT_TRUE(pc.holds) << pc.detail;
  EXPECT_EQ(pc.dimension, 3);
}

TEST(Geometry, SixPointsAreNotProjective) {
  Geometry d(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
  EXPECT_FALSE(check_projective_space(d, all_points(6), 2).holds);
  Geometry e = make(oracle::grid(2));
  EXPECT_FALSE(check_projective_space(e, all_points(9), 2).holds);
}

TEST(Geometry, SingularClosureOfTwoCollinearPointsIsTheirLine) {
  Geometry d = fano();
  auto c = singular_closure(d, {d.lines()[3][0], d.lines()[3][1]});
  EXPECT_EQ(c, d.lines()[3]);
  auto all = singular_closure(d, {d.lines()[0][0], d.lines()[0][1], point_off(d, d.lines()[0])});
  EXPECT_EQ(all.size(), 7u);
}

TEST(Geometry, SingularClosureRejectsNonCollinear) {
  Geometry d = make(oracle::grid(2));
  expect_code(ErrorCode::NotAClique, [&] { singular_closure(d, {0, 4}); });
}

// Maximal singular subspaces of Γ(A_{4,2}(2)) coincide with maximal cliques
// of the collinearity graph, which are the stars and planes of lines.
TEST(Geometry, MaximalSingularSubspacesOfGrassmannMatchCliques) {
  auto raw = oracle::grassmann2(4);
  Geometry d = make(raw);
  auto got = maximal_singular_subspaces(d);
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, oracle::maximal_cliques(oracle::collinearity(raw)));
  std::set<std::size_t> sizes;
  for (auto& s : got) sizes.insert(s.size());
  EXPECT_EQ(sizes, (std::set<std::size_t>{7, 15}));
}

TEST(Geometry, SingularMethodsAgree) {
  Geometry d = make(oracle::symplectic_polar2(6));
  GeometryIndex idx(d);
  auto a = maximal_singular_subspaces(idx, {}, SingularMethod::ClosureGrowth);
  auto b = maximal_singular_subspaces(idx, {}, SingularMethod::CliqueEnumeration);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
  // Generators of W(5,2): (q+1)(q^2+1)(q^3+1) planes.
  EXPECT_EQ(a.size(), 3u * 5u * 9u);
}

TEST(Geometry, PolarRanks) {
  auto rank = [](const Geometry& d) { return *polar_rank(d).rank; };
  EXPECT_EQ(rank(make(oracle::symplectic_polar2(6))), 3);
  EXPECT_EQ(rank(make(oracle::hyperbolic_polar2(8))), 4);
  EXPECT_EQ(rank(make(oracle::grid(2))), 2);
}

TEST(Geometry, PolarRankErrors) {
  expect_code(ErrorCode::ShultViolated, [] { polar_rank(Geometry(6, {{0, 1, 2}, {3, 4, 5}})); });
  expect_code(ErrorCode::Degenerate, [] { polar_rank(Geometry(5, {{0, 1, 2}, {0, 3, 4}})); });
}

TEST(Geometry, PerpOfSkewLinesInGrassmannIsThreeByThreeGrid) {
  auto raw = oracle::grassmann2(4);
  Geometry d = make(raw);
  auto m = oracle::collinearity(raw);
  int y = 1;
  while (m[0][y]) ++y;
  Geometry p = perp_geometry(d, 0, y);
  EXPECT_EQ(p.n_points(), 9);
  EXPECT_TRUE(check_grid(p, 2));
  EXPECT_EQ(static_cast<int>(oracle::perp(m, {0, y}).size()), 9);
  const auto& l = d.lines()[d.lines_through(0).front()];
  expect_code(ErrorCode::CollinearPair, [&] { perp_geometry(d, l[0], l[1]); });
}

TEST(Geometry, GridCheck) {
  EXPECT_TRUE(check_grid(make(oracle::grid(2)), 2));
  EXPECT_TRUE(check_grid(make(oracle::grid(3)), 3));
  EXPECT_FALSE(check_grid(make(oracle::grid(2)), 3));
  EXPECT_FALSE(check_grid(fano(), 2));
}

TEST(Geometry, InducedGeometryKeepsInteriorLines) {
  Geometry d = make(oracle::projective2(4));
  const auto& l = d.lines()[0];
  auto closure = singular_closure(d, {l[0], l[1], point_off(d, l)});
  Geometry sub = induced_geometry(GeometryIndex(d), closure);
  EXPECT_EQ(sub.n_points(), 7);
  EXPECT_EQ(sub.lines().size(), 7u);
  EXPECT_EQ(sub.labels().size(), 7u);
}

TEST(Geometry, ParapolarGrassmann) {
  Geometry d = make(oracle::grassmann2(4));
  auto r = check_parapolar(d, 3);
  EXPECT_TRUE(r.report.holds) << r.report.detail;
  EXPECT_TRUE(r.strong);
  EXPECT_TRUE(r.uniform);
  // Every distance-2 pair has a 3x3 grid as perp: rank 2.
  EXPECT_EQ(r.perps.ranks, (std::map<int, long long>{{2, r.perps.pairs}}));
  EXPECT_EQ(r.perps.grids, r.perps.pairs);
}

TEST(Geometry, ParapolarSymplectic) {
  Geometry d = make(oracle::symplectic_polar2(6));
  auto r = check_parapolar(d, 3);
  EXPECT_TRUE(r.report.holds) << r.report.detail;
}

TEST(Geometry, FanoIsNotParapolar) {
  // Every pair is collinear, so no line perp contains two non-collinear points.
  EXPECT_FALSE(check_parapolar(fano(), 2).report.holds);
}
