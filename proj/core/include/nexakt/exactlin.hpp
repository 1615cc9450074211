#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace nexakt {

using Residue = std::uint32_t;

/// A prime field F_p with p < 2^31, verified prime on construction.
class Field {
 public:
  explicit Field(std::uint32_t p = 101);

  std::uint32_t p() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((std::uint64_t{a} * b) % p_);
  }
  Residue inv(Residue a) const;

  bool operator==(const Field&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

/// Dense row-major matrix over F_p. Empty shapes (0 x n, n x 0) are legal.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols);
  Mat(Field f, std::size_t rows, std::size_t cols, std::vector<Residue> entries);

  static Mat zero(Field f, std::size_t rows, std::size_t cols) { return {f, rows, cols}; }
  static Mat identity(Field f, std::size_t n);
  /// Entries given as signed integers, reduced mod p.
  static Mat from_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows,
                       std::size_t cols_if_empty = 0);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  const std::vector<Residue>& entries() const noexcept { return data_; }

  bool is_zero() const noexcept;
  bool operator==(const Mat& o) const noexcept {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(Residue s) const;
  Mat transpose() const;

  Mat column(std::size_t c) const;
  Mat columns(std::span<const std::size_t> idx) const;
  Mat rows_of(std::span<const std::size_t> idx) const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);

  /// Flattened row-major entries as a single column vector.
  Mat vec() const;

 private:
  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

Mat hstack(const Field& f, std::size_t rows, std::span<const Mat> blocks);
Mat vstack(const Field& f, std::size_t cols, std::span<const Mat> blocks);
Mat direct_sum(const Mat& a, const Mat& b);

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row-echelon form; the pivot in each column is the first nonzero
/// entry at or below the current row, so results are bit-reproducible.
Rref rref(const Mat& a);
std::size_t rank(const Mat& a);

/// Some x with a*x = b, or nullopt if the system is inconsistent.
std::optional<Mat> solve_linear(const Mat& a, const Mat& b);

/// Columns form a basis of {x : a x = 0}, ordered by free column.
Mat kernel_basis(const Mat& a);

/// Rows spanning {y : y a = 0}.
Mat left_kernel_basis(const Mat& a);

/// A maximal independent subset of the columns of a (the pivot columns).
Mat column_space_basis(const Mat& a);

/// Indices of columns of `candidates` that extend the column space of `span`
/// to the span of both, chosen greedily left to right.
std::vector<std::size_t> complement_columns(const Mat& span, const Mat& candidates);

bool in_column_space(const Mat& a, const Mat& v);

Mat power(const Mat& a, std::size_t e);
bool is_invertible(const Mat& a);

}  // namespace nexakt
