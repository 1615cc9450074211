#include "nexakt/exactlin.hpp"

#include <string>

#include "nexakt/error.hpp"

namespace nexakt {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw InputError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Residue Field::inv(Residue a) const {
  if (a == 0) throw Error("inverse of zero in F_" + std::to_string(p_));
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat::Mat(Field f, std::size_t rows, std::size_t cols, std::vector<Residue> entries)
    : field_(f), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw ShapeError("matrix entry count does not match shape");
  for (auto& e : data_)
    if (e >= f.p()) e %= f.p();
}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows,
                   std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  Mat m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.reduce(rows[r][c]);
  }
  return m;
}

bool Mat::is_zero() const noexcept {
  for (auto e : data_)
    if (e != 0) return false;
  return true;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
  Mat out(field_, rows_, o.cols_);
  const std::uint64_t p = field_.p();
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      const Residue* orow = o.data_.data() + k * o.cols_;
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] = (acc[j] + a * orow[j]) % p;
    }
    for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = static_cast<Residue>(acc[j]);
  }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], o.data_[i]);
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], o.data_[i]);
  return out;
}

Mat Mat::operator-() const {
  Mat out = *this;
  for (auto& e : out.data_) e = field_.neg(e);
  return out;
}

Mat Mat::scaled(Residue s) const {
  Mat out = *this;
  for (auto& e : out.data_) e = field_.mul(e, s);
  return out;
}

Mat Mat::transpose() const {
  Mat out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Mat Mat::column(std::size_t c) const {
  Mat out(field_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, c);
  return out;
}

Mat Mat::columns(std::span<const std::size_t> idx) const {
  Mat out(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
  return out;
}

Mat Mat::rows_of(std::span<const std::size_t> idx) const {
  Mat out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(idx[i], j);
  return out;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
  Mat out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeError("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat Mat::vec() const { return Mat(field_, data_.size(), 1, data_); }

Mat hstack(const Field& f, std::size_t rows, std::span<const Mat> blocks) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw ShapeError("hstack row mismatch");
    cols += b.cols();
  }
  Mat out(f, rows, cols);
  std::size_t c = 0;
  for (const auto& b : blocks) {
    out.set_block(0, c, b);
    c += b.cols();
  }
  return out;
}

Mat vstack(const Field& f, std::size_t cols, std::span<const Mat> blocks) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw ShapeError("vstack column mismatch");
    rows += b.rows();
  }
  Mat out(f, rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks) {
    out.set_block(r, 0, b);
    r += b.rows();
  }
  return out;
}

Mat direct_sum(const Mat& a, const Mat& b) {
  Mat out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

Rref rref(const Mat& a) {
  const Field& f = a.field();
  Rref res{a, {}};
  Mat& m = res.reduced;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    Residue s = f.inv(m(r, c));
    for (std::size_t j = c; j < cols; ++j) m(r, j) = f.mul(m(r, j), s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Residue t = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(t, m(r, j)));
    }
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

std::size_t rank(const Mat& a) { return rref(a).rank(); }

std::optional<Mat> solve_linear(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve_linear: a.rows != b.rows");
  const Field& f = a.field();
  Mat aug = hstack(f, a.rows(), std::vector<Mat>{a, b});
  Rref r = rref(aug);
  Mat x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    std::size_t c = r.pivots[i];
    if (c >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = r.reduced(i, a.cols() + j);
  }
  return x;
}

Mat kernel_basis(const Mat& a) {
  const Field& f = a.field();
  Rref r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Mat k(f, a.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      k(r.pivots[i], j) = f.neg(r.reduced(i, free[j]));
  }
  return k;
}

Mat left_kernel_basis(const Mat& a) { return kernel_basis(a.transpose()).transpose(); }

Mat column_space_basis(const Mat& a) {
  Rref r = rref(a);
  return a.columns(r.pivots);
}

std::vector<std::size_t> complement_columns(const Mat& span, const Mat& candidates) {
  if (span.rows() != candidates.rows()) throw ShapeError("complement_columns: row mismatch");
  Mat joined = hstack(span.field(), span.rows(), std::vector<Mat>{span, candidates});
  Rref r = rref(joined);
  std::vector<std::size_t> out;
  for (auto c : r.pivots)
    if (c >= span.cols()) out.push_back(c - span.cols());
  return out;
}

bool in_column_space(const Mat& a, const Mat& v) { return solve_linear(a, v).has_value(); }

Mat power(const Mat& a, std::size_t e) {
  if (a.rows() != a.cols()) throw ShapeError("power of non-square matrix");
  Mat result = Mat::identity(a.field(), a.rows());
  Mat base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool is_invertible(const Mat& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

}  // namespace nexakt
