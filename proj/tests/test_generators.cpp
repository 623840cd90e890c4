#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "lieprobe/generators.hpp"
#include "lieprobe/isomorphism.hpp"
#include "oracles.hpp"

using namespace lieprobe;

namespace {

using IVec = std::vector<int>;

// "(1,0,2)" -> {1,0,2}; "[(..)(..)]" -> list of vectors.
std::vector<IVec> parse_vectors(const std::string& label) {
  std::vector<IVec> out;
  IVec cur;
  int num = -1;
  for (char c : label) {
    if (c == '(') {
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      num = (num < 0 ? 0 : num * 10) + (c - '0');
    } else if (c == ',' || c == ')') {
      cur.push_back(num);
      num = -1;
      if (c == ')') out.push_back(cur);
    }
  }
  return out;
}

// Rank over the prime field F_p by Gaussian elimination.
int rank_mod_p(std::vector<IVec> rows, int p) {
  int r = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int sel = r;
    while (sel < static_cast<int>(rows.size()) && rows[sel][c] % p == 0) ++sel;
    if (sel == static_cast<int>(rows.size())) continue;
    std::swap(rows[r], rows[sel]);
    int inv = 1;
    while (rows[r][c] * inv % p != 1) ++inv;
    for (auto& x : rows[r]) x = x * inv % p;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r) continue;
      int f = rows[i][c] % p;
      for (int j = 0; j < cols; ++j) rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

enum class Kind { W, Q, Qplus };

int quad(Kind k, const IVec& x, int p) {
  long long s = 0;
  if (k == Kind::W) return 0;
  if (k == Kind::Q) {
    s = x[0] * x[0];
    for (std::size_t i = 1; i + 1 < x.size(); i += 2) s += x[i] * x[i + 1];
  } else {
    for (std::size_t i = 0; i + 1 < x.size(); i += 2) s += x[i] * x[i + 1];
  }
  return static_cast<int>(s % p);
}

int bil(Kind k, const IVec& x, const IVec& y, int p) {
  if (k == Kind::W) {
    long long s = 0;
    for (std::size_t i = 0; i + 1 < x.size(); i += 2) s += x[i] * y[i + 1] - x[i + 1] * y[i];
    return static_cast<int>(((s % p) + p) % p);
  }
  IVec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] + y[i]) % p;
  return ((quad(k, z, p) - quad(k, x, p) - quad(k, y, p)) % p + 2 * p) % p;
}

// Projective singular points of the form on F_p^d, by enumeration.
long long singular_count(Kind k, int d, int p) {
  long long n = 0, total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (long long code = 1; code < total; ++code) {
    IVec x(d);
    long long c = code;
    for (int i = 0; i < d; ++i, c /= p) x[i] = static_cast<int>(c % p);
    n += quad(k, x, p) == 0;
  }
  return n / (p - 1);
}

// Checks a generated polar space against the form: labelled points are
// singular and distinct, the count matches enumeration, collinearity is
// orthogonality, and every line is q+1 pairwise orthogonal points.
void check_polar_against_form(Family fam, Kind k, int projective_dim, int p) {
  Geometry d = polar_space(fam, projective_dim, p);
  const int dim = projective_dim + 1;
  EXPECT_EQ(d.n_points(), singular_count(k, dim, p));
  std::vector<IVec> pts;
  for (const auto& l : d.labels()) {
    auto v = parse_vectors(l);
    ASSERT_EQ(v.size(), 1u);
    ASSERT_EQ(static_cast<int>(v[0].size()), dim);
    EXPECT_EQ(quad(k, v[0], p), 0);
    pts.push_back(v[0]);
  }
  Graph g = point_graph(d);
  long long degree_sum = 0;
  for (int a = 0; a < d.n_points(); ++a)
    for (int b = a + 1; b < d.n_points(); ++b) {
      ASSERT_EQ(rank_mod_p({pts[a], pts[b]}, p), 2);
      bool orth = bil(k, pts[a], pts[b], p) == 0;
      ASSERT_EQ(g.adjacent(a, b), orth) << a << " " << b;
      degree_sum += 2 * orth;
    }
  for (const auto& l : d.lines()) ASSERT_EQ(static_cast<int>(l.size()), p + 1);
  EXPECT_EQ(static_cast<long long>(d.lines().size()), degree_sum / (p * (p + 1)));
}

bool regular_of_degree(const Graph& g, int k) {
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.degree(static_cast<int>(v)) != k) return false;
  return true;
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

TEST(Generators, SymplecticFiveTwoCounts) {
  Geometry d = polar_space(Family::PolarW, 5, 2);
  auto raw = oracle::symplectic_polar2(6);
  EXPECT_EQ(d.n_points(), raw.n);
  EXPECT_EQ(d.lines().size(), raw.lines.size());
  EXPECT_EQ(d.n_points(), 63);
  EXPECT_EQ(d.lines().size(), 315u);
  EXPECT_TRUE(regular_of_degree(point_graph(d), 30));
}

TEST(Generators, SymplecticFiveTwoIsomorphicToOracle) {
  Graph g = point_graph(polar_space(Family::PolarW, 5, 2));
  Graph h = oracle::from_matrix(oracle::collinearity(oracle::symplectic_polar2(6)));
  auto r = are_isomorphic(g, h);
  ASSERT_TRUE(r.isomorphic);
  EXPECT_TRUE(oracle::is_isomorphism(g, h, r.mapping));
}

TEST(Generators, HyperbolicSevenTwoPoints) {
  Geometry d = polar_space(Family::PolarQplus, 7, 2);
  EXPECT_EQ(d.n_points(), oracle::hyperbolic_polar2(8).n);
  EXPECT_EQ(d.n_points(), 135);
}

TEST(Generators, PolarSpacesMatchTheirForms) {
  check_polar_against_form(Family::PolarW, Kind::W, 5, 2);
  check_polar_against_form(Family::PolarW, Kind::W, 5, 3);
  check_polar_against_form(Family::PolarQ, Kind::Q, 6, 3);
  check_polar_against_form(Family::PolarQ, Kind::Q, 4, 5);
  check_polar_against_form(Family::PolarQplus, Kind::Qplus, 7, 2);
  check_polar_against_form(Family::PolarQplus, Kind::Qplus, 5, 3);
}

TEST(Generators, EllipticQuadricCounts) {
  // Q-(5,q): (q^3+1)(q+1) points, lines of q+1 points.
  for (int q : {2, 3}) {
    Geometry d = polar_space(Family::PolarQminus, 5, q);
    EXPECT_EQ(d.n_points(), (oracle::ipow(q, 3) + 1) * (q + 1));
    for (const auto& l : d.lines()) EXPECT_EQ(static_cast<int>(l.size()), q + 1);
  }
}

TEST(Generators, GrassmannFourTwo) {
  Geometry d = grassmann_lines(4, 2);
  auto raw = oracle::grassmann2(4);
  EXPECT_EQ(d.n_points(), raw.n);
  EXPECT_EQ(d.lines().size(), raw.lines.size());
  EXPECT_EQ(d.n_points(), 155);
  EXPECT_EQ(d.lines().size(), 1085u);
  EXPECT_TRUE(regular_of_degree(point_graph(d), 42));
}

TEST(Generators, GrassmannFourTwoIsomorphicToOracle) {
  Graph g = point_graph(grassmann_lines(4, 2));
  Graph h = oracle::from_matrix(oracle::collinearity(oracle::grassmann2(4)));
  auto r = are_isomorphic(g, h);
  ASSERT_TRUE(r.isomorphic);
  EXPECT_TRUE(oracle::is_isomorphism(g, h, r.mapping));
}

// Labels are RREF bases of 2-spaces; collinear iff the lines of PG(n,q) meet.
TEST(Generators, GrassmannCollinearityIsMeeting) {
  for (auto [n, q] : {std::pair{3, 3}, std::pair{4, 3}}) {
    Geometry d = grassmann_lines(n, q);
    EXPECT_EQ(d.n_points(), oracle::subspace_count(n + 1, 2, q));
    std::vector<std::vector<IVec>> pts;
    for (const auto& l : d.labels()) pts.push_back(parse_vectors(l));
    Graph g = point_graph(d);
    for (int a = 0; a < d.n_points(); ++a)
      for (int b = a + 1; b < d.n_points(); ++b) {
        auto rows = pts[a];
        rows.insert(rows.end(), pts[b].begin(), pts[b].end());
        ASSERT_EQ(g.adjacent(a, b), rank_mod_p(rows, q) == 3);
      }
  }
}

TEST(Generators, HalfSpinFourTwoIsHyperbolicSevenTwo) {
  Graph a = point_graph(half_spin(4, 2));
  Graph b = point_graph(polar_space(Family::PolarQplus, 7, 2));
  auto r = are_isomorphic(a, b);
  ASSERT_TRUE(r.isomorphic);
  EXPECT_TRUE(oracle::is_isomorphism(a, b, r.mapping));
}

// Points are generators of the hyperbolic quadric of one class; collinear
// iff they meet in an (n-2)-space.
TEST(Generators, HalfSpinCollinearityIsCodimensionTwoMeet) {
  Geometry d = half_spin(4, 3);
  EXPECT_EQ(d.n_points(), (3 + 1) * (9 + 1) * (27 + 1));
  std::vector<std::vector<IVec>> pts;
  for (const auto& l : d.labels()) pts.push_back(parse_vectors(l));
  Graph g = point_graph(d);
  for (int a = 0; a < d.n_points(); ++a) {
    ASSERT_EQ(pts[a].size(), 4u);
    for (const auto& v : pts[a]) ASSERT_EQ(quad(Kind::Qplus, v, 3), 0);
    for (int b = a + 1; b < d.n_points(); ++b) {
      auto rows = pts[a];
      rows.insert(rows.end(), pts[b].begin(), pts[b].end());
      int meet = 8 - rank_mod_p(rows, 3);
      ASSERT_EQ(meet % 2, 0) << "generators of different classes";
      ASSERT_EQ(g.adjacent(a, b), meet == 2);
    }
  }
}

TEST(Generators, HalfSpinFiveTwoCounts) {
  Geometry d = half_spin(5, 2);
  const long long points = (2 + 1) * (4 + 1) * (8 + 1) * (16 + 1);
  const long long degree = 2 * oracle::subspace_count(5, 2, 2);
  EXPECT_EQ(d.n_points(), points);
  EXPECT_EQ(d.n_points(), 2295);
  Graph g = point_graph(d);
  EXPECT_TRUE(regular_of_degree(g, static_cast<int>(degree)));
  EXPECT_EQ(degree, 310);
  EXPECT_EQ(static_cast<long long>(d.lines().size()), points * degree / (2 * 3));
}

TEST(Generators, SegreProduct) {
  Geometry d = segre_product(2, 2);
  EXPECT_EQ(d.n_points(), 3 * 7);
  Graph g = point_graph(d);
  // (i, P) sees the 6 other points of its plane copy and 2 of its column.
  EXPECT_TRUE(regular_of_degree(g, 6 + 2));
}

TEST(Generators, ParameterErrors) {
  expect_code(ErrorCode::InvalidParameters, [] { polar_space(Family::PolarW, 4, 2); });
  expect_code(ErrorCode::InvalidParameters, [] { polar_space(Family::PolarQ, 5, 2); });
  expect_code(ErrorCode::RankTooSmall, [] { polar_space(Family::PolarW, 1, 2); });
  expect_code(ErrorCode::RankTooSmall, [] { polar_space(Family::PolarQminus, 3, 2); });
  expect_code(ErrorCode::InstanceTooLarge, [] { polar_space(Family::PolarW, 7, 5); });
  expect_code(ErrorCode::InstanceTooLarge, [] { half_spin(5, 3); });
  expect_code(ErrorCode::InstanceTooLarge, [] { half_spin(6, 2); });
  expect_code(ErrorCode::InstanceTooLarge, [] { grassmann_lines(7, 2); });
  expect_code(ErrorCode::InstanceTooLarge, [] { grassmann_lines(6, 3); });
  expect_code(ErrorCode::NonPrimeCharacteristic, [] { polar_space(Family::PolarW, 5, 6); });
}

TEST(Generators, LabelNames) {
  EXPECT_EQ((FamilyLabel{Family::PolarW, 3, 2}).name(), "W(5,2)");
  EXPECT_EQ((FamilyLabel{Family::PolarQplus, 4, 2}).name(), "Q+(7,2)");
  EXPECT_EQ((FamilyLabel{Family::PolarQ, 3, 3}).outcome(), "PolarSpace(3,3)");
  EXPECT_EQ((FamilyLabel{Family::A_n2, 4, 2}).name(), "A_{4,2}(2)");
  EXPECT_EQ((FamilyLabel{Family::D_nn, 5, 2}).outcome(), "D_{5,5}(2)");
}
