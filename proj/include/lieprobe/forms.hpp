#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "lieprobe/error.hpp"
#include "lieprobe/field.hpp"
#include "lieprobe/subspace.hpp"

namespace lieprobe {

enum class FormKind { Alternating, QuadraticParabolic, QuadraticHyperbolic, QuadraticElliptic };

inline std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::Alternating: return "alternating";
    case FormKind::QuadraticParabolic: return "quadratic_parabolic";
    case FormKind::QuadraticHyperbolic: return "quadratic_hyperbolic";
    case FormKind::QuadraticElliptic: return "quadratic_elliptic";
  }
  return "?";
}

/// A reflexive form on F_q^d. Alternating forms keep their Gram matrix;
/// quadratic forms keep the upper-triangular coefficient grid c with
/// Q(x) = sum_{i<=j} c_ij x_i x_j, which stays unambiguous in characteristic 2.
struct FormSpec {
  FormKind kind = FormKind::Alternating;
  int ambient_dim = 0;
  std::vector<std::vector<Elem>> coefficients;

  bool is_quadratic() const { return kind != FormKind::Alternating; }

  /// x_0 y_1 - x_1 y_0 + x_2 y_3 - x_3 y_2 + ...
  static FormSpec alternating(int dim, const FieldTable& f) {
    if (dim < 2 || dim % 2) throw Error(ErrorCode::InvalidForm, "alternating form needs even dimension");
    FormSpec s{FormKind::Alternating, dim, grid(dim)};
    for (int i = 0; i < dim; i += 2) {
      s.coefficients[i][i + 1] = 1;
      s.coefficients[i + 1][i] = f.neg(1);
    }
    return s;
  }

  /// x_0 x_1 + x_2 x_3 + ...
  static FormSpec hyperbolic(int dim) {
    if (dim < 2 || dim % 2) throw Error(ErrorCode::InvalidForm, "hyperbolic form needs even dimension");
    FormSpec s{FormKind::QuadraticHyperbolic, dim, grid(dim)};
    for (int i = 0; i < dim; i += 2) s.coefficients[i][i + 1] = 1;
    return s;
  }

  /// x_0^2 + x_1 x_2 + x_3 x_4 + ...
  static FormSpec parabolic(int dim) {
    if (dim < 3 || dim % 2 == 0) throw Error(ErrorCode::InvalidForm, "parabolic form needs odd dimension >= 3");
    FormSpec s{FormKind::QuadraticParabolic, dim, grid(dim)};
    s.coefficients[0][0] = 1;
    for (int i = 1; i < dim; i += 2) s.coefficients[i][i + 1] = 1;
    return s;
  }

  /// x_0^2 + b x_0 x_1 + c x_1^2 + x_2 x_3 + ..., with t^2 + b t + c the
  /// first irreducible quadratic over F_q in (b, c) order.
  static FormSpec elliptic(int dim, const FieldTable& f) {
    if (dim < 2 || dim % 2) throw Error(ErrorCode::InvalidForm, "elliptic form needs even dimension");
    FormSpec s{FormKind::QuadraticElliptic, dim, grid(dim)};
    for (int b = 0; b < f.q(); ++b) {
      for (int c = 1; c < f.q(); ++c) {
        bool has_root = false;
        for (int t = 0; t < f.q() && !has_root; ++t) {
          Elem tt = static_cast<Elem>(t);
          Elem v = f.add(f.add(f.mul(tt, tt), f.mul(static_cast<Elem>(b), tt)), static_cast<Elem>(c));
          has_root = v == 0;
        }
        if (!has_root) {
          s.coefficients[0][0] = 1;
          s.coefficients[0][1] = static_cast<Elem>(b);
          s.coefficients[1][1] = static_cast<Elem>(c);
          for (int i = 2; i < dim; i += 2) s.coefficients[i][i + 1] = 1;
          return s;
        }
      }
    }
    throw Error(ErrorCode::InvalidForm, "no irreducible quadratic found");
  }

 private:
  static std::vector<std::vector<Elem>> grid(int d) { return std::vector<std::vector<Elem>>(d, std::vector<Elem>(d, 0)); }
};

/// Precompiled evaluation of a FormSpec over a fixed field.
class FormEvaluator {
 public:
  FormEvaluator(const FormSpec& form, const FieldTable& f) : form_(form), f_(&f) {
    int d = form.ambient_dim;
    if (static_cast<int>(form.coefficients.size()) != d) throw Error(ErrorCode::DimensionMismatch, "coefficient grid size");
    for (const auto& row : form.coefficients)
      if (static_cast<int>(row.size()) != d) throw Error(ErrorCode::DimensionMismatch, "coefficient grid size");
    // Bilinear matrix: Gram for alternating, C + C^T for quadratic.
    bil_.assign(d, std::vector<Elem>(d, 0));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        Elem c = form.coefficients[i][j];
        if (form.is_quadratic()) {
          if (i > j && c != 0) throw Error(ErrorCode::InvalidForm, "quadratic coefficients must be upper triangular");
          if (c == 0) continue;
          bil_[i][j] = f.add(bil_[i][j], c);
          bil_[j][i] = f.add(bil_[j][i], c);
          if (i <= j) quad_terms_.push_back({i, j, c});
        } else {
          bil_[i][j] = c;
        }
      }
    }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (bil_[i][j] != 0) bil_terms_.push_back({i, j, bil_[i][j]});
  }

  const FormSpec& form() const { return form_; }
  const FieldTable& field() const { return *f_; }
  int dim() const { return form_.ambient_dim; }

  Elem quadratic(std::span<const Elem> x) const {
    Elem acc = 0;
    for (const auto& t : quad_terms_) acc = f_->add(acc, f_->mul(t.c, f_->mul(x[t.i], x[t.j])));
    return acc;
  }

  Elem bilinear(std::span<const Elem> x, std::span<const Elem> y) const {
    Elem acc = 0;
    for (const auto& t : bil_terms_) {
      if (x[t.i] == 0 || y[t.j] == 0) continue;
      acc = f_->add(acc, f_->mul(t.c, f_->mul(x[t.i], y[t.j])));
    }
    return acc;
  }

  /// Row vector x^T M of the bilinear matrix; B(x, y) = sum_t w_t y_t.
  Vec bilinear_row(std::span<const Elem> x) const {
    Vec w(dim(), 0);
    for (const auto& t : bil_terms_) w[t.j] = f_->add(w[t.j], f_->mul(x[t.i], t.c));
    return w;
  }

  bool vanishes(std::span<const Elem> x) const {
    return form_.is_quadratic() ? quadratic(x) == 0 : true;
  }

  const std::vector<std::vector<Elem>>& bilinear_matrix() const { return bil_; }

 private:
  struct Term {
    int i, j;
    Elem c;
  };
  FormSpec form_;
  const FieldTable* f_;
  std::vector<std::vector<Elem>> bil_;
  std::vector<Term> quad_terms_;
  std::vector<Term> bil_terms_;
};

/// Checks the FormSpec invariants: antisymmetric zero-diagonal nondegenerate
/// Gram matrix, or a nonsingular quadratic form.
inline void validate_form(const FormSpec& form, const FieldTable& f) {
  FormEvaluator ev(form, f);
  int d = form.ambient_dim;
  const auto& m = ev.bilinear_matrix();
  if (!form.is_quadratic()) {
    for (int i = 0; i < d; ++i) {
      if (m[i][i] != 0) throw Error(ErrorCode::InvalidForm, "alternating form has nonzero diagonal");
      for (int j = 0; j < d; ++j)
        if (m[i][j] != f.neg(m[j][i])) throw Error(ErrorCode::InvalidForm, "Gram matrix is not antisymmetric");
    }
  }
  // Radical of the bilinear form = kernel of the matrix.
  std::vector<Vec> rows(m.begin(), m.end());
  Subspace row_space = Subspace::span(rows, d, f);
  Subspace radical = annihilator(row_space, f);
  if (!form.is_quadratic()) {
    if (radical.dim() != 0) throw Error(ErrorCode::InvalidForm, "alternating form is degenerate");
    return;
  }
  // Nonsingular: Q has no nonzero zero on the radical.
  int r = radical.dim();
  if (r == 0) return;
  std::vector<int> coef(r, 0);
  for (;;) {
    std::size_t t = 0;
    while (t < coef.size() && ++coef[t] == f.q()) coef[t++] = 0;
    if (t == coef.size()) break;
    Vec v(d, 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < d; ++j) v[j] = f.add(v[j], f.mul(static_cast<Elem>(coef[i]), radical.row(i)[j]));
    if (ev.quadratic(v) == 0) throw Error(ErrorCode::InvalidForm, "quadratic form is singular");
  }
}

inline bool is_isotropic(std::span<const Elem> v, const FormSpec& form, const FieldTable& f) {
  if (static_cast<int>(v.size()) != form.ambient_dim) throw Error(ErrorCode::DimensionMismatch, "vector length differs from form dimension");
  if (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; }))
    throw Error(ErrorCode::InvalidParameters, "isotropy of the zero vector");
  return FormEvaluator(form, f).vanishes(v);
}

inline bool is_totally_singular(const Subspace& s, const FormEvaluator& ev) {
  if (s.ambient_dim() != ev.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace and form dimensions differ");
  for (int i = 0; i < s.dim(); ++i) {
    if (!ev.vanishes(s.row(i))) return false;
    for (int j = i; j < s.dim(); ++j)
      if (ev.bilinear(s.row(i), s.row(j)) != 0) return false;
  }
  return true;
}

inline bool is_totally_singular(const Subspace& s, const FormSpec& form, const FieldTable& f) {
  return is_totally_singular(s, FormEvaluator(form, f));
}

/// Enumerates every totally singular subspace of vector dimension k, in
/// canonical RREF, by filling the echelon rows from the bottom up. Each new
/// row solves the linear orthogonality conditions against the rows below it,
/// so only the quadratic condition is tested by enumeration.
template <class Fn>
void for_each_totally_singular(const FormEvaluator& ev, int k, Fn&& fn) {
  const FieldTable& f = ev.field();
  const int d = ev.dim();
  const int q = f.q();
  if (k < 0 || k > d) return;
  if (k == 0) {
    fn(Subspace::zero(d));
    return;
  }
  std::vector<Vec> rows(k, Vec(d, 0));
  std::vector<int> piv(k, d);
  std::vector<Vec> brows(k);

  std::function<void(int)> fill = [&](int i) {
    if (i < 0) {
      std::vector<Elem> flat;
      flat.reserve(static_cast<std::size_t>(k) * d);
      for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
      fn(Subspace::from_rref(std::move(flat), k, d));
      return;
    }
    int upper = (i + 1 < k) ? piv[i + 1] : d;
    for (int c = i; c < upper; ++c) {
      // Unknowns: columns > c that are not later pivots.
      std::vector<int> vars;
      for (int t = c + 1; t < d; ++t)
        if (!std::binary_search(piv.begin() + i + 1, piv.end(), t)) vars.push_back(t);
      // Equations sum_t x_t w[t] = 0 with x_c = 1, for each later row's w.
      std::vector<Vec> eq;
      for (int j = i + 1; j < k; ++j) {
        Vec e(vars.size() + 1);
        for (std::size_t a = 0; a < vars.size(); ++a) e[a] = brows[j][vars[a]];
        e[vars.size()] = f.neg(brows[j][c]);
        eq.push_back(std::move(e));
      }
      const int nv = static_cast<int>(vars.size());
      auto eq_piv = rref_in_place(eq, nv + 1, f);
      if (!eq_piv.empty() && eq_piv.back() == nv) continue;  // inconsistent
      std::vector<int> free_vars;
      for (int a = 0; a < nv; ++a)
        if (!std::binary_search(eq_piv.begin(), eq_piv.end(), a)) free_vars.push_back(a);
      std::vector<int> counter(free_vars.size(), 0);
      Vec& x = rows[i];
      for (;;) {
        std::fill(x.begin(), x.end(), 0);
        x[c] = 1;
        for (std::size_t a = 0; a < free_vars.size(); ++a) x[vars[free_vars[a]]] = static_cast<Elem>(counter[a]);
        for (std::size_t r = 0; r < eq_piv.size(); ++r) {
          Elem val = eq[r][nv];
          for (int fv : free_vars) val = f.sub(val, f.mul(eq[r][fv], x[vars[fv]]));
          x[vars[eq_piv[r]]] = val;
        }
        if (ev.vanishes(x)) {
          piv[i] = c;
          brows[i] = ev.bilinear_row(x);
          fill(i - 1);
          piv[i] = d;
        }
        std::size_t t = 0;
        while (t < counter.size() && ++counter[t] == q) counter[t++] = 0;
        if (t == counter.size()) break;
      }
      std::fill(x.begin(), x.end(), 0);
    }
  };
  fill(k - 1);
}

/// Projective points v (first nonzero coordinate 1) on which the form
/// vanishes, in lexicographic order.
inline std::vector<Vec> singular_points(const FormEvaluator& ev) {
  std::vector<Vec> out;
  for_each_totally_singular(ev, 1, [&](const Subspace& s) { out.emplace_back(s.row(0).begin(), s.row(0).end()); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Dimension of a maximal totally singular subspace, by depth-first
/// extension with full backtracking. Points are added in increasing index
/// order, which reaches every totally singular subspace through its
/// greedy basis; the search stops early once floor(d/2) is attained.
inline int witt_index(const FormSpec& form, const FieldTable& f) {
  validate_form(form, f);
  FormEvaluator ev(form, f);
  const int d = form.ambient_dim;
  const int bound = d / 2;
  std::vector<Vec> pts = singular_points(ev);
  std::vector<Vec> brow;
  brow.reserve(pts.size());
  for (const auto& p : pts) brow.push_back(ev.bilinear_row(p));

  auto orth = [&](std::size_t a, std::size_t b) {
    Elem acc = 0;
    for (int t = 0; t < d; ++t) acc = f.add(acc, f.mul(brow[a][t], pts[b][t]));
    return acc == 0;
  };

  int best = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (best >= bound) return;
    for (std::size_t c = start; c < pts.size() && best < bound; ++c) {
      bool ok = true;
      for (std::size_t s : chosen)
        if (!orth(s, c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::vector<Vec> basis;
      for (std::size_t s : chosen) basis.push_back(pts[s]);
      if (!chosen.empty() && Subspace::span(basis, d, f).contains(pts[c], f)) continue;
      chosen.push_back(c);
      dfs(c + 1);
      chosen.pop_back();
    }
  };
  dfs(0);
  return best;
}

}  // namespace lieprobe
