#include "plocal/fp_linear.hpp"

#include <algorithm>
#include <unordered_map>

#include "plocal/errors.hpp"

namespace plocal {

PrimeField::PrimeField(unsigned p) : p_(p), inverse_(p, 0) {
  if (p < 2 || p > 65521) throw Error("field characteristic out of range: " + std::to_string(p));
  for (unsigned a = 2; a * a <= p; ++a) {
    if (p % a == 0) throw Error("field characteristic is not prime: " + std::to_string(p));
  }
  for (FpValue a = 1; a < p; ++a) {
    for (FpValue b = 1; b < p; ++b) {
      if (mul(a, b) == 1) {
        inverse_[a] = b;
        break;
      }
    }
  }
}

// ---------------------------------------------------------------------------

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), col_start_(cols + 1, 0) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets,
                                         const PrimeField& field) {
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) { return a.col != b.col ? a.col < b.col : a.row < b.row; });
  SparseMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.col_start_.assign(cols + 1, 0);
  std::size_t k = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    m.col_start_[j] = m.entries_.size();
    while (k < triplets.size() && triplets[k].col == j) {
      const std::uint32_t row = triplets[k].row;
      if (row >= rows) throw Error("triplet row out of range");
      FpValue v = 0;
      while (k < triplets.size() && triplets[k].col == j && triplets[k].row == row) {
        v = field.add(v, triplets[k].value % field.prime());
        ++k;
      }
      if (v != 0) m.entries_.push_back({row, v});
    }
  }
  if (k != triplets.size()) throw Error("triplet column out of range");
  m.col_start_[cols] = m.entries_.size();
  return m;
}

FpValue SparseMatrix::at(std::size_t i, std::size_t j) const {
  for (const auto& e : column(j)) {
    if (e.row == i) return e.value;
  }
  return 0;
}

void SparseMatrix::push_column(std::span<const Entry> entries) {
  entries_.insert(entries_.end(), entries.begin(), entries.end());
  col_start_.push_back(entries_.size());
  ++cols_;
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t;
  t.rows_ = cols_;
  t.cols_ = rows_;
  t.col_start_.assign(rows_ + 1, 0);
  for (const auto& e : entries_) ++t.col_start_[e.row + 1];
  for (std::size_t i = 0; i < rows_; ++i) t.col_start_[i + 1] += t.col_start_[i];
  t.entries_.resize(entries_.size());
  std::vector<std::size_t> fill(t.col_start_.begin(), t.col_start_.end() - 1);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (const auto& e : column(j)) t.entries_[fill[e.row]++] = {static_cast<std::uint32_t>(j), e.value};
  }
  return t;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs, const PrimeField& field) const {
  if (cols_ != rhs.rows_) throw Error("matrix product dimension mismatch");
  SparseMatrix out(rows_, 0);
  std::vector<FpValue> acc(rows_, 0);
  std::vector<std::uint32_t> touched;
  std::vector<Entry> col;
  for (std::size_t j = 0; j < rhs.cols_; ++j) {
    touched.clear();
    for (const auto& r : rhs.column(j)) {
      for (const auto& e : column(r.row)) {
        if (acc[e.row] == 0) touched.push_back(e.row);
        acc[e.row] = field.add(acc[e.row], field.mul(e.value, r.value));
        // A position may cancel to zero and be touched again; dedupe below.
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    col.clear();
    for (std::uint32_t i : touched) {
      if (acc[i] != 0) col.push_back({i, acc[i]});
      acc[i] = 0;
    }
    out.push_column(col);
  }
  return out;
}

namespace {

using Column = std::vector<SparseMatrix::Entry>;

// target -= factor * pivot, both sorted by row.
void axpy(Column& target, const Column& pivot, FpValue factor, const PrimeField& field, Column& scratch) {
  scratch.clear();
  std::size_t a = 0, b = 0;
  while (a < target.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < target.size() && target[a].row < pivot[b].row)) {
      scratch.push_back(target[a++]);
    } else if (a == target.size() || pivot[b].row < target[a].row) {
      scratch.push_back({pivot[b].row, field.neg(field.mul(factor, pivot[b].value))});
      ++b;
    } else {
      const FpValue v = field.sub(target[a].value, field.mul(factor, pivot[b].value));
      if (v != 0) scratch.push_back({target[a].row, v});
      ++a;
      ++b;
    }
  }
  target.swap(scratch);
}

std::size_t column_rank(const SparseMatrix& m, const PrimeField& field) {
  // pivot_of[row] = stored column whose lowest (largest-row) entry is `row`,
  // normalized so that entry is 1.
  std::vector<std::int64_t> pivot_of(m.rows(), -1);
  std::vector<Column> stored;
  Column work, scratch;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const auto col = m.column(j);
    work.assign(col.begin(), col.end());
    while (!work.empty()) {
      const auto low = work.back();
      const std::int64_t p = pivot_of[low.row];
      if (p < 0) {
        const FpValue scale = field.inv(low.value);
        for (auto& e : work) e.value = field.mul(e.value, scale);
        pivot_of[low.row] = static_cast<std::int64_t>(stored.size());
        stored.push_back(work);
        break;
      }
      axpy(work, stored[static_cast<std::size_t>(p)], low.value, field, scratch);
    }
  }
  return stored.size();
}

}  // namespace

std::size_t rank(const SparseMatrix& m, const PrimeField& field) {
  if (m.is_zero()) return 0;
  return column_rank(m, field);
}

// ---------------------------------------------------------------------------

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<FpValue> DenseMatrix::column(std::size_t j) const {
  std::vector<FpValue> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](FpValue v) { return v == 0; });
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& rhs, const PrimeField& field) const {
  if (cols_ != rhs.rows_) throw Error("matrix product dimension mismatch");
  DenseMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const FpValue a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out(i, j) = field.add(out(i, j), field.mul(a, rhs(k, j)));
      }
    }
  }
  return out;
}

SparseMatrix DenseMatrix::to_sparse() const {
  SparseMatrix out(rows_, 0);
  std::vector<SparseMatrix::Entry> col;
  for (std::size_t j = 0; j < cols_; ++j) {
    col.clear();
    for (std::size_t i = 0; i < rows_; ++i) {
      if ((*this)(i, j) != 0) col.push_back({static_cast<std::uint32_t>(i), (*this)(i, j)});
    }
    out.push_column(col);
  }
  return out;
}

DenseMatrix DenseMatrix::from_sparse(const SparseMatrix& m) {
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& e : m.column(j)) out(e.row, j) = e.value;
  }
  return out;
}

std::vector<std::size_t> row_reduce(DenseMatrix& m, const PrimeField& field) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(r, j));
    }
    const FpValue scale = field.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = field.mul(m(r, j), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const FpValue f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = field.sub(m(i, j), field.mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const DenseMatrix& m, const PrimeField& field) {
  DenseMatrix copy = m;
  return row_reduce(copy, field).size();
}

DenseMatrix nullspace(const DenseMatrix& m, const PrimeField& field) {
  DenseMatrix r = m;
  const auto pivots = row_reduce(r, field);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  DenseMatrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = field.neg(r(i, free[k]));
  }
  return basis;
}

std::optional<std::vector<FpValue>> solve(const DenseMatrix& m, std::span<const FpValue> b,
                                          const PrimeField& field) {
  DenseMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i] % field.prime();
  }
  const auto pivots = row_reduce(aug, field);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<FpValue> x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

}  // namespace plocal
