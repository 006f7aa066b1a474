#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rdeg/field.hpp"

namespace rdeg {

template <CoefficientField K>
class Matrix {
 public:
  using Element = typename K::Element;

  Matrix(K field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, field_.zero()) {}

  static Matrix identity(K field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  const K& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Element& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Element& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix dimensions do not match");
    Matrix r(field_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if (field_.is_zero((*this)(i, k))) continue;
        for (int j = 0; j < other.cols_; ++j)
          r(i, j) = field_.add(r(i, j), field_.mul((*this)(i, k), other(k, j)));
      }
    return r;
  }

  bool operator==(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!field_.equal(data_[i], other.data_[i])) return false;
    return true;
  }

 private:
  K field_;
  int rows_;
  int cols_;
  std::vector<Element> data_;
};

// Row echelon form in place; returns the pivot columns.
template <CoefficientField K>
std::vector<int> row_reduce(Matrix<K>& m) {
  const auto& k = m.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = row;
    while (p < m.rows() && k.is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    auto inv = k.inv(m(row, col));
    for (int j = 0; j < m.cols(); ++j) m(row, j) = k.mul(m(row, j), inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || k.is_zero(m(i, col))) continue;
      auto f = m(i, col);
      for (int j = 0; j < m.cols(); ++j) m(i, j) = k.sub(m(i, j), k.mul(f, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <CoefficientField K>
int rank(Matrix<K> m) {
  return static_cast<int>(row_reduce(m).size());
}

// Basis of {v : M v = 0}.
template <CoefficientField K>
std::vector<std::vector<typename K::Element>> kernel_basis(Matrix<K> m) {
  const auto& k = m.field();
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename K::Element>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename K::Element> v(m.cols(), k.zero());
    v[free] = k.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = k.neg(m(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <CoefficientField K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  int n = m.rows();
  Matrix<K> aug(m.field(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  auto pivots = row_reduce(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<K> inv(m.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <CoefficientField K>
using SparseVector = std::vector<std::pair<int, typename K::Element>>;

// Incremental rank computation on sparse vectors (entries sorted by index).
template <CoefficientField K>
class SparseEliminator {
 public:
  using Element = typename K::Element;

  explicit SparseEliminator(K field) : field_(std::move(field)) {}

  // Adds v to the span; returns true if it was independent of the vectors added so far.
  bool add(SparseVector<K> v);
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  K field_;
  // Pivot vectors keyed by their first index; first entry normalized to one.
  std::vector<std::pair<int, SparseVector<K>>> pivots_;
  std::vector<int> slot_;  // index -> position in pivots_, or -1

  SparseVector<K> scratch_;
};

template <CoefficientField K>
bool SparseEliminator<K>::add(SparseVector<K> v) {
  const auto& k = field_;
  while (!v.empty()) {
    int lead = v.front().first;
    if (lead >= static_cast<int>(slot_.size())) slot_.resize(lead + 1, -1);
    int s = slot_[lead];
    if (s < 0) {
      auto inv = k.inv(v.front().second);
      for (auto& [i, c] : v) c = k.mul(c, inv);
      slot_[lead] = static_cast<int>(pivots_.size());
      pivots_.emplace_back(lead, std::move(v));
      return true;
    }
    const auto& p = pivots_[s].second;
    auto f = v.front().second;
    scratch_.clear();
    std::size_t a = 1, b = 1;
    while (a < v.size() || b < p.size()) {
      if (b == p.size() || (a < v.size() && v[a].first < p[b].first)) {
        scratch_.push_back(std::move(v[a++]));
      } else if (a == v.size() || p[b].first < v[a].first) {
        scratch_.emplace_back(p[b].first, k.neg(k.mul(f, p[b].second)));
        ++b;
      } else {
        auto c = k.sub(v[a].second, k.mul(f, p[b].second));
        if (!k.is_zero(c)) scratch_.emplace_back(v[a].first, std::move(c));
        ++a;
        ++b;
      }
    }
    std::swap(v, scratch_);
  }
  return false;
}

template <CoefficientField K>
int sparse_rank(const K& field, std::vector<SparseVector<K>> vectors) {
  SparseEliminator<K> elim(field);
  for (auto& v : vectors) elim.add(std::move(v));
  return elim.rank();
}

}  // namespace rdeg
