#include "submax/lp.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "submax/errors.hpp"

namespace submax {

namespace {

Rational row_value(const LinearConstraint& row, const std::vector<Rational>& x) {
  Rational v = 0;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (sgn(row.coeffs[j]) != 0) v += row.coeffs[j] * x[j];
  return v;
}

bool row_holds(const LinearConstraint& row, const Rational& lhs) {
  switch (row.rel) {
    case Rel::LessEq: return lhs <= row.rhs;
    case Rel::GreaterEq: return lhs >= row.rhs;
    case Rel::Equal: return lhs == row.rhs;
  }
  return false;
}

void check_dimensions(const LinearSystem& sys, const std::vector<Rational>& x) {
  if (x.size() != sys.var_count)
    throw InvalidArgumentError("point dimension does not match the system");
  for (const auto& row : sys.rows)
    if (row.coeffs.size() != sys.var_count)
      throw InvalidArgumentError("constraint coefficient vector size mismatch");
}

// Row-reduced echelon form of the active constraints over the non-fixed
// columns, maintained incrementally while the walk pins variables and rows.
class Tableau {
public:
  explicit Tableau(std::size_t var_count)
      : basis_row_(var_count, kNone), fixed_(var_count, false) {}

  bool is_fixed(std::size_t j) const { return fixed_[j]; }
  std::size_t basis_of(std::size_t j) const { return basis_row_[j]; }

  void fix_column(std::size_t j) {
    fixed_[j] = true;
    for (auto& row : rows_) row[j] = 0;
  }

  // Reduce a constraint row against the tableau; install a pivot on the
  // lowest free column if independent. Returns false if dependent.
  bool insert_row(const LinearConstraint& src) {
    std::vector<Rational> r(src.coeffs);
    for (std::size_t j = 0; j < r.size(); ++j)
      if (fixed_[j]) r[j] = 0;
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      const std::size_t p = pivot_col_[t];
      if (sgn(r[p]) != 0) subtract_scaled(r, rows_[t], r[p]);
    }
    std::size_t piv = kNone;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (sgn(r[j]) != 0) { piv = j; break; }
    if (piv == kNone) return false;
    const Rational inv = r[piv];
    for (auto& c : r) c /= inv;
    for (std::size_t t = 0; t < rows_.size(); ++t)
      if (sgn(rows_[t][piv]) != 0) subtract_scaled(rows_[t], r, rows_[t][piv]);
    basis_row_[piv] = rows_.size();
    pivot_col_.push_back(piv);
    rows_.push_back(std::move(r));
    return true;
  }

  // Column j is basic and its variable hit zero: swap a free column into
  // the basis (or drop the row if none exists), then the caller fixes j.
  void release_basic(std::size_t j) {
    const std::size_t t = basis_row_[j];
    basis_row_[j] = kNone;
    std::size_t enter = kNone;
    for (std::size_t c = 0; c < rows_[t].size(); ++c) {
      if (c == j || fixed_[c] || basis_row_[c] != kNone) continue;
      if (sgn(rows_[t][c]) != 0) { enter = c; break; }
    }
    if (enter == kNone) {
      drop_row(t);
      return;
    }
    const Rational inv = rows_[t][enter];
    for (auto& c : rows_[t]) c /= inv;
    for (std::size_t t2 = 0; t2 < rows_.size(); ++t2)
      if (t2 != t && sgn(rows_[t2][enter]) != 0)
        subtract_scaled(rows_[t2], rows_[t], rows_[t2][enter]);
    pivot_col_[t] = enter;
    basis_row_[enter] = t;
  }

  // Direction with +1 in free column f, kept in the null space of all rows.
  std::vector<Rational> direction(std::size_t f) const {
    std::vector<Rational> d(basis_row_.size(), Rational(0));
    d[f] = 1;
    for (std::size_t t = 0; t < rows_.size(); ++t)
      d[pivot_col_[t]] = -rows_[t][f];
    return d;
  }

  std::optional<std::size_t> lowest_free(const std::vector<bool>& live) const {
    for (std::size_t j = 0; j < basis_row_.size(); ++j)
      if (live[j] && !fixed_[j] && basis_row_[j] == kNone) return j;
    return std::nullopt;
  }

private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // factor by value: callers pass dst[p], which the loop overwrites
  static void subtract_scaled(std::vector<Rational>& dst,
                              const std::vector<Rational>& src,
                              const Rational factor) {
    for (std::size_t j = 0; j < dst.size(); ++j)
      if (sgn(src[j]) != 0) dst[j] -= factor * src[j];
  }

  void drop_row(std::size_t t) {
    const std::size_t last = rows_.size() - 1;
    if (t != last) {
      rows_[t] = std::move(rows_[last]);
      pivot_col_[t] = pivot_col_[last];
      basis_row_[pivot_col_[t]] = t;
    }
    rows_.pop_back();
    pivot_col_.pop_back();
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivot_col_;
  std::vector<std::size_t> basis_row_; // column -> tableau row, or kNone
  std::vector<bool> fixed_;
};

} // namespace

bool verify_feasible(const LinearSystem& sys, const std::vector<Rational>& x) {
  check_dimensions(sys, x);
  for (const auto& v : x)
    if (sgn(v) < 0) return false;
  for (const auto& row : sys.rows)
    if (!row_holds(row, row_value(row, x))) return false;
  return true;
}

std::vector<Rational> to_extreme_point(const LinearSystem& sys,
                                       const std::vector<Rational>& start) {
  if (!verify_feasible(sys, start))
    throw InvalidArgumentError("to_extreme_point requires a feasible start");

  const std::size_t v = sys.var_count;
  std::vector<Rational> x = start;
  Tableau tab(v);
  std::vector<bool> live(v, true); // live := x_j may still move

  for (std::size_t j = 0; j < v; ++j) {
    if (sgn(x[j]) == 0) {
      tab.fix_column(j);
      live[j] = false;
    }
  }

  std::vector<Rational> lhs(sys.rows.size());
  std::vector<bool> active(sys.rows.size(), false);
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    lhs[i] = row_value(sys.rows[i], x);
    if (lhs[i] == sys.rows[i].rhs) {
      active[i] = true;
      tab.insert_row(sys.rows[i]);
    }
  }

  while (auto f = tab.lowest_free(live)) {
    const std::vector<Rational> d = tab.direction(*f);

    // Largest step in a signed direction before a bound or an inactive row
    // becomes tight; nullopt when unbounded.
    auto max_step = [&](int dir) -> std::optional<Rational> {
      std::optional<Rational> best;
      auto consider = [&](const Rational& num, const Rational& den) {
        Rational t = num / den;
        if (!best || t < *best) best = t;
      };
      for (std::size_t j = 0; j < v; ++j) {
        if (!live[j]) continue;
        const Rational dj = dir > 0 ? d[j] : Rational(-d[j]);
        if (sgn(dj) < 0) consider(x[j], -dj);
      }
      for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        if (active[i]) continue;
        Rational s = 0;
        for (std::size_t j = 0; j < v; ++j)
          if (live[j] && sgn(sys.rows[i].coeffs[j]) != 0)
            s += sys.rows[i].coeffs[j] * d[j];
        if (dir < 0) s = -s;
        if (sys.rows[i].rel == Rel::LessEq && sgn(s) > 0)
          consider(sys.rows[i].rhs - lhs[i], s);
        else if (sys.rows[i].rel == Rel::GreaterEq && sgn(s) < 0)
          consider(lhs[i] - sys.rows[i].rhs, -s);
      }
      return best;
    };

    int dir = 1; // positive direction first
    auto step = max_step(1);
    if (!step) {
      dir = -1;
      step = max_step(-1);
      if (!step)
        throw InternalInvariantError("feasible region contains a line; no vertex exists");
    }

    for (std::size_t j = 0; j < v; ++j)
      if (live[j] && sgn(d[j]) != 0) x[j] += Rational(dir) * (*step) * d[j];
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
      if (active[i]) continue;
      lhs[i] = row_value(sys.rows[i], x);
    }

    // Pin every variable that reached its bound.
    for (std::size_t j = 0; j < v; ++j) {
      if (!live[j] || sgn(x[j]) != 0) continue;
      if (tab.basis_of(j) != static_cast<std::size_t>(-1)) tab.release_basic(j);
      tab.fix_column(j);
      live[j] = false;
    }
    // Adopt every row that became tight.
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
      if (active[i] || lhs[i] != sys.rows[i].rhs) continue;
      active[i] = true;
      tab.insert_row(sys.rows[i]);
    }
  }
  return x;
}

std::size_t active_rank(const LinearSystem& sys, const std::vector<Rational>& x) {
  check_dimensions(sys, x);
  std::vector<std::vector<Rational>> m;
  for (const auto& row : sys.rows)
    if (row_value(row, x) == row.rhs) m.push_back(row.coeffs);
  for (std::size_t j = 0; j < sys.var_count; ++j) {
    if (sgn(x[j]) == 0) {
      std::vector<Rational> e(sys.var_count, Rational(0));
      e[j] = 1;
      m.push_back(std::move(e));
    }
  }
  // plain Gaussian elimination rank
  std::size_t rank = 0;
  for (std::size_t col = 0; col < sys.var_count && rank < m.size(); ++col) {
    std::size_t sel = m.size();
    for (std::size_t r = rank; r < m.size(); ++r)
      if (sgn(m[r][col]) != 0) { sel = r; break; }
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || sgn(m[r][col]) == 0) continue;
      const Rational factor = m[r][col] / m[rank][col];
      for (std::size_t j = col; j < sys.var_count; ++j)
        m[r][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

} // namespace submax
