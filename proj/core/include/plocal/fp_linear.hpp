#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace plocal {

using FpValue = std::uint32_t;

/// Arithmetic in the field with p elements, p a small prime.
class PrimeField {
 public:
  explicit PrimeField(unsigned p);

  unsigned prime() const noexcept { return p_; }
  FpValue add(FpValue a, FpValue b) const noexcept { return (a + b) % p_; }
  FpValue sub(FpValue a, FpValue b) const noexcept { return (a + p_ - b) % p_; }
  FpValue mul(FpValue a, FpValue b) const noexcept {
    return static_cast<FpValue>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  FpValue neg(FpValue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  FpValue inv(FpValue a) const { return inverse_[a]; }
  /// Reduces a signed integer into [0, p).
  FpValue from_int(long long v) const noexcept {
    const long long r = v % static_cast<long long>(p_);
    return static_cast<FpValue>(r < 0 ? r + p_ : r);
  }

 private:
  unsigned p_;
  std::vector<FpValue> inverse_;
};

struct Triplet {
  std::uint32_t row;
  std::uint32_t col;
  FpValue value;
};

/// Column-compressed sparse matrix over F_p. Entries within a column are
/// sorted by row and nonzero.
class SparseMatrix {
 public:
  struct Entry {
    std::uint32_t row;
    FpValue value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  /// Sums duplicate positions modulo p and drops zeros.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets,
                                    const PrimeField& field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }
  std::span<const Entry> column(std::size_t j) const {
    return {entries_.data() + col_start_[j], entries_.data() + col_start_[j + 1]};
  }
  FpValue at(std::size_t i, std::size_t j) const;

  /// Appends a column; entries must be sorted by row, nonzero, in range.
  void push_column(std::span<const Entry> entries);

  SparseMatrix transposed() const;
  /// this * rhs.
  SparseMatrix multiply(const SparseMatrix& rhs, const PrimeField& field) const;
  bool is_zero() const noexcept { return entries_.empty(); }
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> col_start_{0};
  std::vector<Entry> entries_;
};

/// Exact rank over F_p by sparse column elimination, pivoting on the lowest
/// nonzero row of each column.
std::size_t rank(const SparseMatrix& m, const PrimeField& field);

/// Small dense matrix over F_p, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FpValue& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FpValue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<FpValue> column(std::size_t j) const;
  bool is_zero() const;

  DenseMatrix multiply(const DenseMatrix& rhs, const PrimeField& field) const;
  SparseMatrix to_sparse() const;
  static DenseMatrix from_sparse(const SparseMatrix& m);

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FpValue> data_;
};

std::size_t rank(const DenseMatrix& m, const PrimeField& field);
/// Basis of the null space as the columns of the result; deterministic
/// (one vector per free column of the reduced echelon form).
DenseMatrix nullspace(const DenseMatrix& m, const PrimeField& field);
/// Some x with m x = b, or nullopt.
std::optional<std::vector<FpValue>> solve(const DenseMatrix& m, std::span<const FpValue> b,
                                          const PrimeField& field);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(DenseMatrix& m, const PrimeField& field);

}  // namespace plocal
