#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dialg/rational.hpp"

namespace dialg {

/// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionError("ragged rows");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rational> v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw DimensionError("row width mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline QMatrix stack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() && b.rows() && a.cols() != b.cols()) throw DimensionError("stack: width mismatch");
  QMatrix out = a;
  for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

namespace detail {

using IntRow = std::vector<Integer>;

inline IntRow clear_denominators(std::span<const Rational> row) {
  Integer l = 1;
  for (const Rational& q : row) {
    if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  IntRow out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] != 0) out[i] = row[i].get_num() * (l / row[i].get_den());
  }
  return out;
}

// Divides out the gcd of the entries.
inline void make_primitive(IntRow& row) {
  Integer g = 0;
  for (const Integer& x : row) {
    if (x != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g <= 1) return;
  for (Integer& x : row) {
    if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace detail

struct RrefResult {
  QMatrix reduced;  // same shape as the input; zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Forward elimination runs fraction-free on primitive
/// integer rows; the back substitution to unit pivots is done in the rationals.
inline RrefResult rref(const QMatrix& m) {
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  std::vector<detail::IntRow> rows;
  rows.reserve(R);
  for (std::size_t r = 0; r < R; ++r) {
    rows.push_back(detail::clear_denominators(m.row(r)));
    detail::make_primitive(rows.back());
  }
  RrefResult res;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < C && lead < R; ++c) {
    std::size_t p = lead;
    while (p < R && rows[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(rows[p], rows[lead]);
    const detail::IntRow& piv = rows[lead];
    for (std::size_t r = lead + 1; r < R; ++r) {
      if (rows[r][c] == 0) continue;
      const Integer f = rows[r][c];
      const Integer g = piv[c];
      for (std::size_t k = c; k < C; ++k) rows[r][k] = g * rows[r][k] - f * piv[k];
      detail::make_primitive(rows[r]);
    }
    res.pivots.push_back(c);
    ++lead;
  }
  res.rank = lead;
  res.reduced = QMatrix(R, C);
  for (std::size_t r = 0; r < res.rank; ++r) {
    const Rational inv = Rational(1) / Rational(rows[r][res.pivots[r]]);
    for (std::size_t k = 0; k < C; ++k) {
      if (rows[r][k] != 0) res.reduced.at(r, k) = Rational(rows[r][k]) * inv;
    }
  }
  for (std::size_t i = res.rank; i-- > 0;) {
    const std::size_t pc = res.pivots[i];
    for (std::size_t r = 0; r < i; ++r) {
      const Rational f = res.reduced.at(r, pc);
      if (f == 0) continue;
      for (std::size_t k = pc; k < C; ++k) {
        if (res.reduced.at(i, k) != 0) res.reduced.at(r, k) -= f * res.reduced.at(i, k);
      }
    }
  }
  return res;
}

inline std::size_t rank(const QMatrix& m) { return rref(m).rank; }

/// Remainder of v after elimination against the pivots of a reduced matrix.
inline std::vector<Rational> reduce_against(const RrefResult& r, std::span<const Rational> v) {
  std::vector<Rational> out(v.begin(), v.end());
  for (std::size_t i = 0; i < r.rank; ++i) {
    const std::size_t pc = r.pivots[i];
    if (out[pc] == 0) continue;
    const Rational f = out[pc];
    for (std::size_t k = pc; k < out.size(); ++k) {
      if (r.reduced.at(i, k) != 0) out[k] -= f * r.reduced.at(i, k);
    }
  }
  return out;
}

inline bool row_space_contains(const QMatrix& m, std::span<const Rational> v) {
  if (m.rows() == 0) return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
  if (v.size() != m.cols()) throw DimensionError("row_space_contains: width mismatch");
  const auto res = reduce_against(rref(m), v);
  return std::all_of(res.begin(), res.end(), [](const Rational& q) { return q == 0; });
}

inline bool row_space_equal(const QMatrix& a, const QMatrix& b) {
  if (a.rows() && b.rows() && a.cols() != b.cols()) throw DimensionError("row_space_equal: width mismatch");
  const std::size_t ra = rank(a);
  return ra == rank(b) && rank(stack(a, b)) == ra;
}

/// Basis of {v : m v = 0}, one vector per non-pivot column.
inline std::vector<std::vector<Rational>> null_space(const QMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols());
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced.at(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

/// Sparse vector: strictly increasing column indices, nonzero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental row echelon basis over sparse integer rows.
///
/// Rows are kept primitive and indexed by leading column; an incoming row is reduced
/// by repeatedly cancelling its leading entry. Only the rank and membership are
/// exposed, which is all the consequence checks need.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t width = 0) : width_(width) {}

  /// Adds a row; returns true if the rank increased.
  bool add(const SparseRow& row) {
    IRow v = to_integer(row);
    reduce(v);
    if (v.empty()) return false;
    basis_.emplace(v.front().first, std::move(v));
    return true;
  }

  /// True if the row lies in the span of the rows added so far.
  bool contains(const SparseRow& row) const { return residual(row).empty(); }

  /// Remainder of the row after elimination, scaled to a primitive integer vector.
  SparseRow residual(const SparseRow& row) const {
    IRow v = to_integer(row);
    reduce(v);
    SparseRow out;
    for (auto& [c, x] : v) out.emplace_back(c, Rational(x));
    return out;
  }

  std::size_t rank() const noexcept { return basis_.size(); }
  std::size_t width() const noexcept { return width_; }

 private:
  using IRow = std::vector<std::pair<std::size_t, Integer>>;

  IRow to_integer(const SparseRow& row) const {
    Integer l = 1;
    for (const auto& [c, q] : row) {
      if (width_ && c >= width_) throw DimensionError("column out of range");
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    IRow v;
    v.reserve(row.size());
    for (const auto& [c, q] : row) {
      if (q != 0) v.emplace_back(c, q.get_num() * (l / q.get_den()));
    }
    return v;
  }

  static void primitive(IRow& v) {
    Integer g = 0;
    for (const auto& [c, x] : v) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
    if (g <= 1) return;
    for (auto& [c, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }

  void reduce(IRow& v) const {
    while (!v.empty()) {
      auto it = basis_.find(v.front().first);
      if (it == basis_.end()) return;
      const IRow& p = it->second;
      const Integer a = p.front().second;  // v <- a*v - b*p
      const Integer b = v.front().second;
      IRow out;
      out.reserve(v.size() + p.size());
      std::size_t i = 0, j = 0;
      while (i < v.size() || j < p.size()) {
        if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
          out.emplace_back(v[i].first, a * v[i].second);
          ++i;
        } else if (i == v.size() || p[j].first < v[i].first) {
          out.emplace_back(p[j].first, -b * p[j].second);
          ++j;
        } else {
          Integer x = a * v[i].second - b * p[j].second;
          if (x != 0) out.emplace_back(v[i].first, std::move(x));
          ++i;
          ++j;
        }
      }
      primitive(out);
      v = std::move(out);
    }
  }

  std::size_t width_;
  std::map<std::size_t, IRow> basis_;
};

inline SparseRow to_sparse(std::span<const Rational> dense) {
  SparseRow out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) out.emplace_back(i, dense[i]);
  }
  return out;
}

inline std::vector<Rational> to_dense(const SparseRow& row, std::size_t width) {
  std::vector<Rational> out(width);
  for (const auto& [c, q] : row) out.at(c) = q;
  return out;
}

inline nlohmann::json to_json(const QMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (const Rational& q : m.row(r)) row.push_back(q.get_str());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline void dump_matrix(const QMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << to_json(m).dump(1) << "\n";
}

}  // namespace dialg
