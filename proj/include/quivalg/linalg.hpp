#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "quivalg/field.hpp"
#include "quivalg/rng.hpp"

namespace quivalg {

// Dense matrix over an exact field. Sizes in this library stay small
// (a few hundred rows), so no sparsity tricks here.
template <FieldType F>
struct Matrix {
  using Elem = typename F::Elem;
  int rows = 0;
  int cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(const F& f, int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, f.zero()) {}

  Elem& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const Elem& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  static Matrix identity(const F& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }
};

template <FieldType F>
Matrix<F> matmul(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> r(f, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (f.is_zero(a.at(i, k))) continue;
      for (int j = 0; j < b.cols; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
    }
  return r;
}

// In-place reduced row echelon form; returns pivot column indices.
template <FieldType F>
std::vector<int> rref(const F& f, Matrix<F>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int i = row; i < m.rows; ++i)
      if (!f.is_zero(m.at(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    typename F::Elem inv = f.inv(m.at(row, col));
    for (int j = col; j < m.cols; ++j) m.at(row, j) = f.mul(inv, m.at(row, j));
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || f.is_zero(m.at(i, col))) continue;
      typename F::Elem c = m.at(i, col);
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <FieldType F>
int rank(const F& f, Matrix<F> m) {
  return static_cast<int>(rref(f, m).size());
}

// Basis of the right nullspace {x : m x = 0}, one vector per free column.
template <FieldType F>
std::vector<std::vector<typename F::Elem>> nullspace(const F& f, Matrix<F> m) {
  std::vector<int> pivots = rref(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(m.cols, f.zero());
    v[free] = f.one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m.at(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <FieldType F>
bool invertible(const F& f, const Matrix<F>& m) {
  return m.rows == m.cols && rank(f, m) == m.rows;
}

// Incremental row space in RREF: rows stay mutually reduced, pivots are the
// first nonzero column of each row. Deterministic given insertion order.
template <FieldType F>
class RowSpace {
 public:
  using Elem = typename F::Elem;

  explicit RowSpace(const F& f, int width) : f_(&f), width_(width) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }
  const std::vector<std::vector<Elem>>& rows() const { return rows_; }
  const std::map<int, int>& pivots() const { return pivot_to_row_; }

  // Reduces v modulo the current span (in place of a copy); returns residual.
  std::vector<Elem> reduce(std::vector<Elem> v) const {
    for (const auto& [col, r] : pivot_to_row_) {
      if (f_->is_zero(v[col])) continue;
      Elem c = v[col];
      const auto& row = rows_[r];
      for (int j = col; j < width_; ++j)
        if (!f_->is_zero(row[j])) v[j] = f_->sub(v[j], f_->mul(c, row[j]));
    }
    return v;
  }

  // Adds v to the span; returns true when the dimension grew.
  bool add(std::vector<Elem> v) {
    v = reduce(std::move(v));
    int pivot = -1;
    for (int j = 0; j < width_; ++j)
      if (!f_->is_zero(v[j])) {
        pivot = j;
        break;
      }
    if (pivot < 0) return false;
    Elem inv = f_->inv(v[pivot]);
    for (int j = pivot; j < width_; ++j) v[j] = f_->mul(inv, v[j]);
    // back-substitute into existing rows to stay in RREF
    for (auto& row : rows_) {
      if (f_->is_zero(row[pivot])) continue;
      Elem c = row[pivot];
      for (int j = pivot; j < width_; ++j) row[j] = f_->sub(row[j], f_->mul(c, v[j]));
    }
    pivot_to_row_[pivot] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(const std::vector<Elem>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
      if (!f_->is_zero(x)) return false;
    return true;
  }

 private:
  const F* f_;
  int width_;
  std::vector<std::vector<Elem>> rows_;
  std::map<int, int> pivot_to_row_;
};

// Quotient Z/B with a canonical complement: vectors of B are inserted
// first, then spanning vectors of Z; the surviving RREF rows form the
// complement basis and class coordinates are read off at their pivots.
template <FieldType F>
class QuotientSpace {
 public:
  using Elem = typename F::Elem;

  QuotientSpace(const F& f, int width) : f_(&f), sub_(f, width), cls_(f, width) {}

  void add_subspace_vector(const std::vector<Elem>& v) { sub_.add(v); }

  void add_total_vector(const std::vector<Elem>& v) { cls_.add(sub_.reduce(v)); }

  int subspace_dim() const { return sub_.dim(); }
  int class_dim() const { return cls_.dim(); }
  const std::vector<std::vector<Elem>>& class_basis() const { return cls_.rows(); }

  // Coordinates of [v] in the complement basis; v must lie in Z.
  std::vector<Elem> class_coords(const std::vector<Elem>& v) const {
    std::vector<Elem> w = sub_.reduce(v);
    std::vector<Elem> coords(cls_.dim(), f_->zero());
    for (const auto& [col, r] : cls_.pivots()) {
      if (f_->is_zero(w[col])) continue;
      Elem c = w[col];
      coords[r] = c;
      const auto& row = cls_.rows()[r];
      for (size_t j = col; j < row.size(); ++j)
        if (!f_->is_zero(row[j])) w[j] = f_->sub(w[j], f_->mul(c, row[j]));
    }
    for (const auto& x : w)
      if (!f_->is_zero(x)) throw Error("class_coords: vector outside the represented space");
    return coords;
  }

 private:
  const F* f_;
  RowSpace<F> sub_;
  RowSpace<F> cls_;
};

// Sparse echelon over arbitrary integer column ids, pivot = largest id.
// Used for the truncated-ideal rank oracle where columns are indexed by
// paths in deglex order and the pivot is the deglex-largest monomial.
template <FieldType F>
class SparseEchelon {
 public:
  using Elem = typename F::Elem;
  using SparseVec = std::vector<std::pair<int, Elem>>;  // strictly descending cols

  explicit SparseEchelon(const F& f) : f_(&f) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  bool has_pivot(int col) const { return pivot_to_row_.count(col) != 0; }

  // Inserts the vector, fully reducing it against current rows; returns
  // true when it contributed a new pivot.
  bool insert(std::map<int, Elem, std::greater<int>> vec) {
    auto it = vec.begin();
    while (it != vec.end()) {
      int col = it->first;
      auto p = pivot_to_row_.find(col);
      if (p == pivot_to_row_.end()) {
        ++it;
        continue;
      }
      Elem coef = it->second;
      it = vec.erase(it);
      const SparseVec& row = rows_[p->second];
      for (size_t k = 1; k < row.size(); ++k) {  // row[0] is the pivot itself
        auto [c2, e2] = row[k];
        auto [jt, inserted] = vec.emplace(c2, f_->zero());
        jt->second = f_->sub(jt->second, f_->mul(coef, e2));
        if (f_->is_zero(jt->second)) vec.erase(jt);
      }
      it = vec.upper_bound(col);
    }
    if (vec.empty()) return false;
    SparseVec row;
    row.reserve(vec.size());
    Elem inv = f_->inv(vec.begin()->second);
    for (const auto& [c, e] : vec) row.emplace_back(c, f_->mul(inv, e));
    pivot_to_row_[row[0].first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

 private:
  const F* f_;
  std::vector<SparseVec> rows_;
  std::unordered_map<int, int> pivot_to_row_;
};

// Shared search pattern for certificate hunting: a seeded random phase over
// small coefficients, then a deterministic odometer sweep over {0,±1,±2}^k,
// in total at most `budget` candidates. Returns the first combination of
// `basis` accepted by `good`.
template <FieldType F>
std::optional<std::vector<typename F::Elem>> search_combination(
    const F& f, const std::vector<std::vector<typename F::Elem>>& basis,
    const std::function<bool(const std::vector<typename F::Elem>&)>& good, std::uint64_t seed,
    long random_trials, long budget) {
  using Elem = typename F::Elem;
  if (basis.empty()) return std::nullopt;
  const size_t k = basis.size();
  const size_t width = basis[0].size();
  long tried = 0;

  auto combine = [&](const std::vector<long>& coeffs) {
    std::vector<Elem> v(width, f.zero());
    for (size_t i = 0; i < k; ++i) {
      if (coeffs[i] == 0) continue;
      Elem c = f.from_long(coeffs[i]);
      for (size_t j = 0; j < width; ++j)
        if (!f.is_zero(basis[i][j])) v[j] = f.add(v[j], f.mul(c, basis[i][j]));
    }
    return v;
  };

  SplitMix64 rng(seed);
  for (long t = 0; t < random_trials && tried < budget; ++t) {
    std::vector<long> coeffs(k, 0);
    bool nonzero = false;
    for (size_t i = 0; i < k; ++i) {
      coeffs[i] = rng.coefficient(3);
      nonzero |= coeffs[i] != 0;
    }
    if (!nonzero) continue;
    ++tried;
    auto v = combine(coeffs);
    if (good(v)) return v;
  }

  // deterministic sweep, digit values in the order 0, 1, -1, 2, -2
  static constexpr long kDigits[5] = {0, 1, -1, 2, -2};
  std::vector<int> odo(k, 0);
  while (tried < budget) {
    size_t pos = 0;
    while (pos < k) {
      if (++odo[pos] < 5) break;
      odo[pos] = 0;
      ++pos;
    }
    if (pos == k) break;  // wrapped around: sweep exhausted
    std::vector<long> coeffs(k);
    for (size_t i = 0; i < k; ++i) coeffs[i] = kDigits[odo[i]];
    ++tried;
    auto v = combine(coeffs);
    if (good(v)) return v;
  }
  return std::nullopt;
}

}  // namespace quivalg
