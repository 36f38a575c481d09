#pragma once

#include <superlie/error.hpp>
#include <superlie/scalar.hpp>

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace superlie {

template <class T>
struct RowReduction {
  MatrixX<T> rref;
  Index rank = 0;
  std::vector<Index> pivot_cols;
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
template <class Derived>
RowReduction<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& m) {
  using T = typename Derived::Scalar;
  RowReduction<T> out;
  out.rref = m;
  MatrixX<T>& a = out.rref;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const T inv = T(1) / a(row, col);
    for (Index c = col; c < a.cols(); ++c)
      if (a(row, c) != 0) a(row, c) *= inv;
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const T factor = a(r, col);
      for (Index c = col; c < a.cols(); ++c)
        if (a(row, c) != 0) a(r, c) -= factor * a(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_reduce(m).rank;
}

/// Kernel basis as the columns of the returned matrix, one per free column
/// in increasing order.
template <class Derived>
MatrixX<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using T = typename Derived::Scalar;
  const auto red = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : red.pivot_cols) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

  MatrixX<T> kernel = MatrixX<T>::Zero(m.cols(), static_cast<Index>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const Index col = static_cast<Index>(f);
    kernel(free_cols[f], col) = T(1);
    for (Index r = 0; r < red.rank; ++r)
      kernel(red.pivot_cols[static_cast<std::size_t>(r)], col) = -red.rref(r, free_cols[f]);
  }
  return kernel;
}

/// Solves sum_i nodes[i]^k * x_i = rhs[k] for k = 0..n-1.
template <class T>
std::vector<VectorX<T>> solve_vandermonde(std::span<const T> nodes,
                                          std::span<const VectorX<T>> rhs) {
  const Index n = static_cast<Index>(nodes.size());
  if (static_cast<Index>(rhs.size()) != n)
    throw Error(Errc::DimensionMismatch, "vandermonde: one right-hand side per node required");
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (nodes[i] == nodes[j])
        throw Error(Errc::DuplicateNodes, "vandermonde: nodes " + std::to_string(i) + " and " +
                                              std::to_string(j) + " coincide");
  if (n == 0) return {};
  const Index width = rhs[0].size();
  for (const auto& r : rhs)
    if (r.size() != width) throw Error(Errc::DimensionMismatch, "vandermonde: ragged rhs");

  MatrixX<T> aug(n, n + width);
  for (Index k = 0; k < n; ++k) {
    T power(1);
    for (Index i = 0; i < n; ++i) {
      power = T(1);
      for (Index e = 0; e < k; ++e) power *= nodes[i];
      aug(k, i) = power;
    }
    aug.row(k).tail(width) = rhs[k].transpose();
  }
  const auto red = row_reduce(aug);
  std::vector<VectorX<T>> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) out.emplace_back(red.rref.row(i).tail(width).transpose());
  return out;
}

template <class T>
std::vector<VectorX<T>> solve_vandermonde(const std::vector<T>& nodes,
                                          const std::vector<VectorX<T>>& rhs) {
  return solve_vandermonde(std::span<const T>(nodes), std::span<const VectorX<T>>(rhs));
}

/// Incrementally maintained reduced row-echelon basis of a subspace of T^ambient.
/// Rows are kept sorted by pivot, each pivot normalized to 1 and cleared in
/// every other row, so the representation is canonical.
template <class T>
class Echelon {
 public:
  explicit Echelon(Index ambient = 0) : ambient_(ambient) {}

  Index ambient() const { return ambient_; }
  Index dim() const { return static_cast<Index>(rows_.size()); }
  const std::vector<VectorX<T>>& rows() const { return rows_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  MatrixX<T> basis() const {
    MatrixX<T> b(dim(), ambient_);
    for (Index r = 0; r < dim(); ++r) b.row(r) = rows_[static_cast<std::size_t>(r)].transpose();
    return b;
  }

  VectorX<T> reduce(VectorX<T> v) const {
    check(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const T c = v(pivots_[r]);
      if (c == 0) continue;
      const auto& row = rows_[r];
      for (Index i = pivots_[r]; i < ambient_; ++i)
        if (row(i) != 0) v(i) -= c * row(i);
    }
    return v;
  }

  bool contains(const VectorX<T>& v) const { return is_zero(reduce(v)); }

  /// Adds v to the span. Returns the normalized new row when the dimension grew.
  std::optional<VectorX<T>> insert(const VectorX<T>& v) {
    VectorX<T> r = reduce(v);
    Index lead = 0;
    while (lead < ambient_ && r(lead) == 0) ++lead;
    if (lead == ambient_) return std::nullopt;
    const T inv = T(1) / r(lead);
    for (Index i = lead; i < ambient_; ++i)
      if (r(i) != 0) r(i) *= inv;
    for (auto& row : rows_) {
      const T c = row(lead);
      if (c == 0) continue;
      for (Index i = lead; i < ambient_; ++i)
        if (r(i) != 0) row(i) -= c * r(i);
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, r);
    return r;
  }

  bool contains(const Echelon& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [&](const VectorX<T>& v) { return contains(v); });
  }

  friend bool operator==(const Echelon& a, const Echelon& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  void check(const VectorX<T>& v) const {
    if (v.size() != ambient_)
      throw Error(Errc::DimensionMismatch, "vector of length " + std::to_string(v.size()) +
                                               " in ambient dimension " + std::to_string(ambient_));
  }

  Index ambient_;
  std::vector<Index> pivots_;
  std::vector<VectorX<T>> rows_;
};

/// Dimension of the sum of two subspaces.
template <class T>
Index sum_dim(const Echelon<T>& a, const Echelon<T>& b) {
  Echelon<T> s = a;
  for (const auto& r : b.rows()) s.insert(r);
  return s.dim();
}

}  // namespace superlie
