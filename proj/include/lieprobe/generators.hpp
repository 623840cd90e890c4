#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "lieprobe/error.hpp"
#include "lieprobe/field.hpp"
#include "lieprobe/forms.hpp"
#include "lieprobe/geometry.hpp"
#include "lieprobe/subspace.hpp"

namespace lieprobe {

enum class Family { PolarW, PolarQ, PolarQplus, PolarQminus, A_n2, D_nn, E6_1, E7_7, Segre };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::PolarW: return "PolarW";
    case Family::PolarQ: return "PolarQ";
    case Family::PolarQplus: return "PolarQplus";
    case Family::PolarQminus: return "PolarQminus";
    case Family::A_n2: return "A_n2";
    case Family::D_nn: return "D_nn";
    case Family::E6_1: return "E6_1";
    case Family::E7_7: return "E7_7";
    case Family::Segre: return "Segre";
  }
  return "?";
}

inline bool is_polar(Family f) {
  return f == Family::PolarW || f == Family::PolarQ || f == Family::PolarQplus || f == Family::PolarQminus;
}

/// A family member. For polar spaces n is the rank; for A_n2, D_nn the
/// subscript n; for Segre the product A_{1,1} x A_{n,1}.
struct FamilyLabel {
  Family family = Family::PolarW;
  int n = 0;
  int q = 0;

  bool operator==(const FamilyLabel&) const = default;

  /// Projective dimension of the ambient space of a polar family of rank n.
  int polar_projective_dim() const {
    switch (family) {
      case Family::PolarW:
      case Family::PolarQplus: return 2 * n - 1;
      case Family::PolarQ: return 2 * n;
      case Family::PolarQminus: return 2 * n + 1;
      default: return -1;
    }
  }

  std::string name() const {
    const std::string qs = std::to_string(q);
    switch (family) {
      case Family::PolarW: return "W(" + std::to_string(polar_projective_dim()) + "," + qs + ")";
      case Family::PolarQ: return "Q(" + std::to_string(polar_projective_dim()) + "," + qs + ")";
      case Family::PolarQplus: return "Q+(" + std::to_string(polar_projective_dim()) + "," + qs + ")";
      case Family::PolarQminus: return "Q-(" + std::to_string(polar_projective_dim()) + "," + qs + ")";
      case Family::A_n2: return "A_{" + std::to_string(n) + ",2}(" + qs + ")";
      case Family::D_nn: return "D_{" + std::to_string(n) + "," + std::to_string(n) + "}(" + qs + ")";
      case Family::E6_1: return "E_{6,1}(" + qs + ")";
      case Family::E7_7: return "E_{7,7}(" + qs + ")";
      case Family::Segre: return "A_{1,1}(" + qs + ")xA_{" + std::to_string(n) + ",1}(" + qs + ")";
    }
    return "?";
  }

  /// Outcome string: PolarSpace(r,q) for polar families, the name otherwise.
  std::string outcome() const {
    if (is_polar(family)) return "PolarSpace(" + std::to_string(n) + "," + std::to_string(q) + ")";
    return name();
  }
};

constexpr int kMaxGeneratedPoints = 40000;

namespace detail {

inline std::uint64_t vector_code(std::span<const Elem> v, int q) {
  std::uint64_t c = 0;
  for (Elem e : v) c = c * q + e;
  return c;
}

inline std::string vec_label(std::span<const Elem> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

inline std::string subspace_label(const Subspace& s) {
  std::string out = "[";
  for (int i = 0; i < s.dim(); ++i) out += vec_label(s.row(i));
  return out + "]";
}

inline std::string flat_key(const Subspace& s) { return std::string(s.flat().begin(), s.flat().end()); }

/// Projective points of a 2-dimensional subspace, normalized.
inline std::vector<Vec> points_of_line(const Subspace& l, const FieldTable& f) {
  std::vector<Vec> out;
  auto a = l.row(0);
  auto b = l.row(1);
  for (int t = 0; t < f.q(); ++t) {
    Vec v(a.begin(), a.end());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(v[i], f.mul(static_cast<Elem>(t), b[i]));
    out.push_back(normalize_projective(std::move(v), f));
  }
  out.emplace_back(b.begin(), b.end());
  return out;
}

/// Image of a subspace of F_q^k (given in coordinates) under the basis rows.
inline Subspace push_forward(const Subspace& local, const std::vector<Vec>& basis, int dim, const FieldTable& f) {
  std::vector<Vec> rows;
  for (int i = 0; i < local.dim(); ++i) {
    Vec v(dim, 0);
    auto c = local.row(i);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (!c[j]) continue;
      for (int t = 0; t < dim; ++t) v[t] = f.add(v[t], f.mul(c[j], basis[j][t]));
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span(std::move(rows), dim, f);
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace detail

inline FormSpec polar_form(Family kind, int vector_dim, const FieldTable& f) {
  switch (kind) {
    case Family::PolarW: return FormSpec::alternating(vector_dim, f);
    case Family::PolarQ: return FormSpec::parabolic(vector_dim);
    case Family::PolarQplus: return FormSpec::hyperbolic(vector_dim);
    case Family::PolarQminus: return FormSpec::elliptic(vector_dim, f);
    default: throw Error(ErrorCode::InvalidParameters, to_string(kind) + " is not a polar family");
  }
}

/// Number of points of a polar space of rank r with parameter e
/// (0 for Q+, 1 for W and Q, 2 for Q-).
inline long long polar_point_count(int r, int e, long long q) {
  if (r <= 0) return 0;
  return (detail::ipow(q, r) - 1) * (detail::ipow(q, r - 1 + e) + 1) / (q - 1);
}

inline int polar_e(Family kind) {
  switch (kind) {
    case Family::PolarQplus: return 0;
    case Family::PolarW:
    case Family::PolarQ: return 1;
    case Family::PolarQminus: return 2;
    default: return -1;
  }
}

/// Polar space of the given kind in PG(projective_dim, q): singular points
/// and totally singular lines of the form.
inline Geometry polar_space(Family kind, int projective_dim, int q) {
  const int d = projective_dim + 1;
  if (d < 2) throw Error(ErrorCode::InvalidParameters, "projective dimension must be at least 1");
  if (kind == Family::PolarQ ? d % 2 == 0 : d % 2 == 1) {
    throw Error(ErrorCode::InvalidParameters, to_string(kind) + " needs " + (kind == Family::PolarQ ? "even" : "odd") + " projective dimension");
  }
  FieldTable f = FieldTable::of_order(q);
  const int rank = kind == Family::PolarQ ? (d - 1) / 2 : kind == Family::PolarQminus ? d / 2 - 1 : d / 2;
  if (rank < 2) throw Error(ErrorCode::RankTooSmall, "polar rank " + std::to_string(rank) + " < 2");
  if (rank >= 4 && q > 4) throw Error(ErrorCode::InstanceTooLarge, "rank >= 4 needs q <= 4");
  if (polar_point_count(rank, polar_e(kind), q) > kMaxGeneratedPoints) {
    throw Error(ErrorCode::InstanceTooLarge, "more than " + std::to_string(kMaxGeneratedPoints) + " points");
  }
  FormSpec form = polar_form(kind, d, f);
  FormEvaluator ev(form, f);
  std::vector<Vec> pts = singular_points(ev);
  std::unordered_map<std::uint64_t, int> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    index[detail::vector_code(pts[i], q)] = static_cast<int>(i);
    labels.push_back(detail::vec_label(pts[i]));
  }
  std::vector<std::vector<int>> lines;
  for_each_totally_singular(ev, 2, [&](const Subspace& l) {
    std::vector<int> line;
    for (const auto& v : detail::points_of_line(l, f)) line.push_back(index.at(detail::vector_code(v, q)));
    lines.push_back(std::move(line));
  });
  return Geometry(static_cast<int>(pts.size()), std::move(lines), std::move(labels));
}

/// Line Grassmannian A_{n,2}(q): lines of PG(n,q), with the pencils of
/// lines through a point inside a plane as lines.
inline Geometry grassmann_lines(int n, int q) {
  if (n < 2) throw Error(ErrorCode::InvalidParameters, "grassmann_lines needs n >= 2");
  if (n > 6 || q > 3) throw Error(ErrorCode::InstanceTooLarge, "grassmann_lines limited to n <= 6, q <= 3");
  if (gaussian_binomial(n + 1, 2, q) > kMaxGeneratedPoints) {
    throw Error(ErrorCode::InstanceTooLarge, "more than " + std::to_string(kMaxGeneratedPoints) + " points");
  }
  FieldTable f = FieldTable::of_order(q);
  const int d = n + 1;
  std::vector<Subspace> pts = enumerate_subspaces(d, 2, f);
  std::unordered_map<std::string, int> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    index[detail::flat_key(pts[i])] = static_cast<int>(i);
    labels.push_back(detail::subspace_label(pts[i]));
  }
  // Incidences inside a plane, in plane coordinates.
  auto plane_points = enumerate_subspaces(3, 1, f);
  auto plane_lines = enumerate_subspaces(3, 2, f);
  std::vector<std::vector<int>> pencils(plane_points.size());
  for (std::size_t a = 0; a < plane_points.size(); ++a)
    for (std::size_t b = 0; b < plane_lines.size(); ++b)
      if (plane_lines[b].contains(plane_points[a], f)) pencils[a].push_back(static_cast<int>(b));
  std::vector<std::vector<int>> lines;
  for_each_subspace(d, 3, f, [&](const Subspace& plane) {
    auto basis = plane.basis();
    std::vector<int> global;
    for (const auto& l : plane_lines) global.push_back(index.at(detail::flat_key(detail::push_forward(l, basis, d, f))));
    for (const auto& pencil : pencils) {
      std::vector<int> line;
      for (int b : pencil) line.push_back(global[b]);
      lines.push_back(std::move(line));
    }
  });
  return Geometry(static_cast<int>(pts.size()), std::move(lines), std::move(labels));
}

/// Half-spin geometry D_{n,n}(q) on the hyperbolic quadric of F_q^{2n}.
/// Points are the generators M with dim(M n B) = n mod 2 for the least
/// generator B; lines are the sets of points through a totally singular
/// (n-2)-space.
inline Geometry half_spin(int n, int q) {
  if (n < 2) throw Error(ErrorCode::InvalidParameters, "half_spin needs n >= 2");
  long long count = 1;
  for (int i = 1; i < n; ++i) count *= detail::ipow(q, i) + 1;
  if (n > 5 || q > 3 || count > kMaxGeneratedPoints) {
    throw Error(ErrorCode::InstanceTooLarge, "half_spin limited to n <= 5, q <= 3 and " + std::to_string(kMaxGeneratedPoints) + " points");
  }
  FieldTable f = FieldTable::of_order(q);
  const int d = 2 * n;
  FormEvaluator ev(FormSpec::hyperbolic(d), f);
  std::vector<Subspace> gens;
  for_each_totally_singular(ev, n, [&](const Subspace& s) { gens.push_back(s); });
  std::sort(gens.begin(), gens.end(), [](const Subspace& a, const Subspace& b) { return a.flat() < b.flat(); });
  const Subspace& base = gens.front();
  std::vector<Subspace> pts;
  for (const auto& m : gens)
    if ((n - meet(m, base, f).dim()) % 2 == 0) pts.push_back(m);
  std::vector<std::string> labels;
  for (const auto& m : pts) labels.push_back(detail::subspace_label(m));
  auto local = enumerate_subspaces(n, n - 2, f);
  std::unordered_map<std::string, std::vector<int>> through;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto basis = pts[i].basis();
    for (const auto& u : local) through[detail::flat_key(detail::push_forward(u, basis, d, f))].push_back(static_cast<int>(i));
  }
  std::vector<std::vector<int>> lines;
  lines.reserve(through.size());
  for (auto& [key, members] : through) {
    if (static_cast<int>(members.size()) != q + 1) {
      throw Error(ErrorCode::InvalidGeometry, "(n-2)-space in " + std::to_string(members.size()) + " points of one class");
    }
    lines.push_back(std::move(members));
  }
  return Geometry(static_cast<int>(pts.size()), std::move(lines), std::move(labels));
}

/// Segre product A_{1,1}(q) x A_{m,1}(q): points (i, P) for i in PG(1,q) and
/// P in PG(m,q); lines {i} x L for lines L of PG(m,q) and PG(1,q) x {P}.
inline Geometry segre_product(int m, int q) {
  if (m < 1) throw Error(ErrorCode::InvalidParameters, "segre_product needs m >= 1");
  FieldTable f = FieldTable::of_order(q);
  const long long s = gaussian_binomial(m + 1, 1, q);
  if ((q + 1) * s > kMaxGeneratedPoints) throw Error(ErrorCode::InstanceTooLarge, "segre product too large");
  auto pts = enumerate_subspaces(m + 1, 1, f);
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[detail::flat_key(pts[i])] = static_cast<int>(i);
  const int ns = static_cast<int>(s);
  auto id = [&](int i, int p) { return i * ns + p; };
  std::vector<std::vector<int>> lines;
  std::vector<std::vector<int>> pg_lines;
  if (m >= 1) {
    for_each_subspace(m + 1, 2, f, [&](const Subspace& l) {
      std::vector<int> line;
      for (const auto& v : detail::points_of_line(l, f)) line.push_back(index.at(detail::flat_key(Subspace::span({v}, m + 1, f))));
      pg_lines.push_back(std::move(line));
    });
  }
  for (int i = 0; i <= q; ++i)
    for (const auto& l : pg_lines) {
      std::vector<int> line;
      for (int p : l) line.push_back(id(i, p));
      lines.push_back(std::move(line));
    }
  for (int p = 0; p < ns; ++p) {
    std::vector<int> line;
    for (int i = 0; i <= q; ++i) line.push_back(id(i, p));
    lines.push_back(std::move(line));
  }
  std::vector<std::string> labels;
  for (int i = 0; i <= q; ++i)
    for (int p = 0; p < ns; ++p) labels.push_back(std::to_string(i) + "x" + detail::subspace_label(pts[p]));
  return Geometry((q + 1) * ns, std::move(lines), std::move(labels));
}

/// Generates the geometry of a label when a generator exists and the size
/// guards allow it.
inline Geometry generate(const FamilyLabel& label) {
  switch (label.family) {
    case Family::PolarW:
    case Family::PolarQ:
    case Family::PolarQplus:
    case Family::PolarQminus: return polar_space(label.family, label.polar_projective_dim(), label.q);
    case Family::A_n2: return grassmann_lines(label.n, label.q);
    case Family::D_nn: return half_spin(label.n, label.q);
    case Family::Segre: return segre_product(label.n, label.q);
    default: throw Error(ErrorCode::InvalidParameters, label.name() + " has no generator");
  }
}

}  // namespace lieprobe
