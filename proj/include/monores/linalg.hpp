#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace monores {

template <class Field>
using SparseVector = std::vector<std::pair<std::size_t, typename Field::Element>>;

/// Incrementally built row-echelon basis of a subspace of Field^dim.
///
/// Every stored row has leading coefficient 1 at its pivot and no entries
/// before it. Rows may carry a tag vector (in Field^tag_dim) that records
/// which combination of inserted vectors they stand for; reduction reports
/// the matching combination of tags.
template <class Field>
class Echelon {
public:
  using Element = typename Field::Element;
  using Vec = SparseVector<Field>;

  struct Reduction {
    Vec remainder;
    /// Sum of f_r * tag_r over the rows subtracted with factor f_r.
    Vec used_tags;
  };

  Echelon(Field field, std::size_t dim, std::size_t tag_dim = 0)
      : field_(std::move(field)), dim_(dim), tag_dim_(tag_dim), pivot_row_(dim, npos) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const Field& field() const { return field_; }

  /// Full normal form of `v` against the current rows.
  Reduction reduce(const Vec& v) const {
    std::vector<Element> acc(dim_, field_.zero());
    for (const auto& [i, e] : v)
      acc[i] = e;
    std::vector<Element> used;
    if (tag_dim_)
      used.assign(tag_dim_, field_.zero());
    for (std::size_t k = 0; k < dim_; ++k) {
      if (field_.is_zero(acc[k]) || pivot_row_[k] == npos)
        continue;
      const Row& row = rows_[pivot_row_[k]];
      const Element f = acc[k];
      for (const auto& [i, e] : row.vec)
        field_.submul(acc[i], f, e);
      if (tag_dim_)
        for (const auto& [i, e] : row.tag)
          used[i] = field_.add(used[i], field_.mul(f, e));
    }
    Reduction out;
    out.remainder = to_sparse(acc);
    if (tag_dim_)
      out.used_tags = to_sparse(used);
    return out;
  }

  bool contains(const Vec& v) const { return reduce(v).remainder.empty(); }

  /// Adds `v` if it is independent of the current rows; returns the pivot
  /// of the new row, or nullopt when `v` already lies in the span.
  std::optional<std::size_t> insert(const Vec& v, const Vec& tag = {}) {
    Reduction r = reduce(v);
    if (r.remainder.empty())
      return std::nullopt;
    const std::size_t pivot = r.remainder.front().first;
    const Element scale = field_.inv(r.remainder.front().second);
    Row row;
    row.pivot = pivot;
    for (auto& [i, e] : r.remainder)
      row.vec.emplace_back(i, field_.mul(e, scale));
    if (tag_dim_) {
      std::vector<Element> t(tag_dim_, field_.zero());
      for (const auto& [i, e] : tag)
        t[i] = field_.add(t[i], e);
      for (const auto& [i, e] : r.used_tags)
        t[i] = field_.sub(t[i], e);
      for (auto& e : t)
        e = field_.mul(e, scale);
      row.tag = to_sparse(t);
    }
    pivot_row_[pivot] = rows_.size();
    rows_.push_back(std::move(row));
    return pivot;
  }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Row {
    std::size_t pivot = 0;
    Vec vec;
    Vec tag;
  };

  Vec to_sparse(const std::vector<Element>& dense) const {
    Vec out;
    for (std::size_t i = 0; i < dense.size(); ++i)
      if (!field_.is_zero(dense[i]))
        out.emplace_back(i, dense[i]);
    return out;
  }

  Field field_;
  std::size_t dim_;
  std::size_t tag_dim_;
  std::vector<std::size_t> pivot_row_;
  std::vector<Row> rows_;
};

/// Rank of the matrix whose columns are `cols` (vectors in Field^rows).
template <class Field>
std::size_t rank_of_columns(const Field& field, std::size_t rows,
                            const std::vector<SparseVector<Field>>& cols) {
  Echelon<Field> ech(field, rows);
  for (const auto& c : cols)
    ech.insert(c);
  return ech.rank();
}

/// Basis of the kernel of the matrix whose columns are `cols`. Kernel vectors
/// live in Field^cols.size(); columns are processed left to right, so each
/// kernel vector has its last nonzero entry at a column that became dependent.
template <class Field>
std::vector<SparseVector<Field>> kernel_of_columns(const Field& field, std::size_t rows,
                                                   const std::vector<SparseVector<Field>>& cols) {
  using Vec = SparseVector<Field>;
  Echelon<Field> ech(field, rows, cols.size());
  std::vector<Vec> kernel;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    Vec unit{{c, field.one()}};
    auto red = ech.reduce(cols[c]);
    if (!red.remainder.empty()) {
      ech.insert(cols[c], unit);
      continue;
    }
    // cols[c] = sum f_r row_r, and each row is the image of its tag.
    std::vector<typename Field::Element> k(cols.size(), field.zero());
    k[c] = field.one();
    for (const auto& [i, e] : red.used_tags)
      k[i] = field.sub(k[i], e);
    Vec v;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (!field.is_zero(k[i]))
        v.emplace_back(i, k[i]);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

/// Solves A x = b for the dense row-major system A (rows x cols). Returns
/// one solution (free variables set to zero) or nullopt if inconsistent.
template <class Field>
std::optional<std::vector<typename Field::Element>>
solve_affine(const Field& field, std::vector<std::vector<typename Field::Element>> a,
             std::vector<typename Field::Element> b, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && field.is_zero(a[p][c]))
      ++p;
    if (p == rows)
      continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const auto inv = field.inv(a[r][c]);
    for (auto& e : a[r])
      e = field.mul(e, inv);
    b[r] = field.mul(b[r], inv);
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || field.is_zero(a[q][c]))
        continue;
      const auto f = a[q][c];
      for (std::size_t k = c; k < cols; ++k)
        field.submul(a[q][k], f, a[r][k]);
      field.submul(b[q], f, b[r]);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t q = r; q < rows; ++q)
    if (!field.is_zero(b[q]))
      return std::nullopt;
  std::vector<typename Field::Element> x(cols, field.zero());
  for (std::size_t q = 0; q < r; ++q)
    x[pivot_col[q]] = b[q];
  return x;
}

} // namespace monores
