#pragma once

// Small dense matrices and the block-diagonal algebra M4 x M3 x M2 x M1.
//
// Scalars must be a commutative ring with `T(long)` and `==`; inversion and
// span solving additionally require a field (`/`).

#include "spin7/alpha_series.hpp"
#include "spin7/ratfunc.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spin7 {

class Singular : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInSpan : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DependentBasis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline bool is_zero(const mpq_class& x) { return x == 0; }
inline bool is_zero(const AlphaSeries& x) { return x == AlphaSeries(0); }

inline std::string scalar_string(const RatFunc& x) { return x.to_string(); }
inline std::string scalar_string(const mpq_class& x) { return x.get_str(); }
inline std::string scalar_string(const AlphaSeries& x) { return x.to_string(); }
inline std::string scalar_string(const LaurentPoly& x) { return x.to_string(); }

/// Square dense matrix, row-major.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw std::invalid_argument("Matrix rows must form a square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!spin7::is_zero(x)) return false;
    }
    return true;
  }

  template <typename F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    Matrix<U> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) out(i, j) = f((*this)(i, j));
    }
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    const std::size_t n = a.n_;
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const T& x = a(i, k);
        if (spin7::is_zero(x)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (!spin7::is_zero(b(k, j))) out(i, j) += x * b(k, j);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

  /// Gauss-Jordan inverse with first-nonzero pivoting. Throws Singular.
  Matrix inverse() const {
    Matrix a = *this;
    Matrix inv = identity(n_);
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t piv = col;
      while (piv < n_ && spin7::is_zero(a(piv, col))) ++piv;
      if (piv == n_) throw Singular("matrix block is singular");
      if (piv != col) {
        for (std::size_t j = 0; j < n_; ++j) {
          std::swap(a(piv, j), a(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      }
      const T p = a(col, col);
      for (std::size_t j = 0; j < n_; ++j) {
        a(col, j) /= p;
        inv(col, j) /= p;
      }
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == col || spin7::is_zero(a(r, col))) continue;
        const T f = a(r, col);
        for (std::size_t j = 0; j < n_; ++j) {
          a(r, j) -= f * a(col, j);
          inv(r, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

  /// Coefficients c_0..c_n (ascending powers of x) of det(x*I - A), by
  /// cofactor expansion. Division-free.
  std::vector<T> charpoly() const {
    std::vector<std::vector<std::vector<T>>> m(n_, std::vector<std::vector<T>>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        m[i][j] = {-(*this)(i, j)};
        if (i == j) m[i][j].push_back(T(1));
      }
    }
    std::vector<std::size_t> rows(n_), cols(n_);
    for (std::size_t k = 0; k < n_; ++k) rows[k] = cols[k] = k;
    auto p = det_poly(m, rows, cols);
    p.resize(n_ + 1, T(0));
    return p;
  }

  T determinant() const {
    const auto p = charpoly();
    return n_ % 2 == 0 ? p[0] : T(-p[0]);
  }

  std::string to_string() const {
    std::vector<std::string> cells;
    std::size_t width = 0;
    for (const auto& x : data_) {
      cells.push_back(scalar_string(x));
      width = std::max(width, cells.back().size());
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
      os << "[ ";
      for (std::size_t j = 0; j < n_; ++j) {
        const auto& c = cells[i * n_ + j];
        os << std::string(width - c.size(), ' ') << c << (j + 1 < n_ ? " | " : " ]\n");
      }
    }
    return os.str();
  }

 private:
  using Poly = std::vector<T>;

  void check_same(const Matrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  }

  static Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, T(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  }

  static void poly_axpy(Poly& acc, const Poly& p, bool negate) {
    if (acc.size() < p.size()) acc.resize(p.size(), T(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (negate) {
        acc[i] -= p[i];
      } else {
        acc[i] += p[i];
      }
    }
  }

  static Poly det_poly(const std::vector<std::vector<Poly>>& m, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
    if (rows.size() == 1) return m[rows[0]][cols[0]];
    Poly acc;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const Poly& e = m[rows[0]][cols[k]];
      bool nonzero = false;
      for (const auto& c : e) nonzero = nonzero || !spin7::is_zero(c);
      if (!nonzero) continue;
      std::vector<std::size_t> sub_cols;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (j != k) sub_cols.push_back(cols[j]);
      }
      poly_axpy(acc, poly_mul(e, det_poly(m, sub_rows, sub_cols)), k % 2 == 1);
    }
    return acc;
  }

  std::size_t n_ = 0;
  std::vector<T> data_;
};

/// Element of M4 x M3 x M2 x M1, blocks in that order.
template <typename T>
class BasicBlockMatrix {
 public:
  static constexpr std::array<std::size_t, 4> kSizes{4, 3, 2, 1};
  using Block = Matrix<T>;

  BasicBlockMatrix() : blocks_{Block(4), Block(3), Block(2), Block(1)} {}
  BasicBlockMatrix(Block b4, Block b3, Block b2, Block b1)
      : blocks_{std::move(b4), std::move(b3), std::move(b2), std::move(b1)} {
    for (std::size_t k = 0; k < 4; ++k) {
      if (blocks_[k].size() != kSizes[k]) throw std::invalid_argument("block sizes must be (4, 3, 2, 1)");
    }
  }

  static BasicBlockMatrix identity() {
    return {Block::identity(4), Block::identity(3), Block::identity(2), Block::identity(1)};
  }
  static BasicBlockMatrix zero() { return {}; }

  const Block& block(std::size_t k) const { return blocks_.at(k); }
  Block& block(std::size_t k) { return blocks_.at(k); }

  std::array<T, 4> block_traces() const {
    return {blocks_[0].trace(), blocks_[1].trace(), blocks_[2].trace(), blocks_[3].trace()};
  }

  std::vector<T> charpoly(std::size_t k) const { return block(k).charpoly(); }

  BasicBlockMatrix inverse() const {
    return {blocks_[0].inverse(), blocks_[1].inverse(), blocks_[2].inverse(), blocks_[3].inverse()};
  }

  bool is_zero() const {
    for (const auto& b : blocks_) {
      if (!b.is_zero()) return false;
    }
    return true;
  }

  /// Copy with every block not selected by `keep` set to zero.
  BasicBlockMatrix restricted(std::array<bool, 4> keep) const {
    BasicBlockMatrix out = *this;
    for (std::size_t k = 0; k < 4; ++k) {
      if (!keep[k]) out.blocks_[k] = Block(kSizes[k]);
    }
    return out;
  }

  template <typename F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    return BasicBlockMatrix<U>(blocks_[0].map(f), blocks_[1].map(f), blocks_[2].map(f), blocks_[3].map(f));
  }

  BasicBlockMatrix& operator+=(const BasicBlockMatrix& o) {
    for (std::size_t k = 0; k < 4; ++k) blocks_[k] += o.blocks_[k];
    return *this;
  }
  BasicBlockMatrix& operator-=(const BasicBlockMatrix& o) {
    for (std::size_t k = 0; k < 4; ++k) blocks_[k] -= o.blocks_[k];
    return *this;
  }
  BasicBlockMatrix& operator*=(const T& s) {
    for (auto& b : blocks_) b *= s;
    return *this;
  }

  friend BasicBlockMatrix operator+(BasicBlockMatrix a, const BasicBlockMatrix& b) { return a += b; }
  friend BasicBlockMatrix operator-(BasicBlockMatrix a, const BasicBlockMatrix& b) { return a -= b; }
  friend BasicBlockMatrix operator*(BasicBlockMatrix a, const T& s) { return a *= s; }
  friend BasicBlockMatrix operator*(const T& s, BasicBlockMatrix a) { return a *= s; }
  friend BasicBlockMatrix operator*(const BasicBlockMatrix& a, const BasicBlockMatrix& b) {
    return {a.blocks_[0] * b.blocks_[0], a.blocks_[1] * b.blocks_[1], a.blocks_[2] * b.blocks_[2],
            a.blocks_[3] * b.blocks_[3]};
  }
  friend bool operator==(const BasicBlockMatrix& a, const BasicBlockMatrix& b) { return a.blocks_ == b.blocks_; }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < 4; ++k) os << "block " << kSizes[k] << ":\n" << blocks_[k].to_string();
    return os.str();
  }

 private:
  std::array<Block, 4> blocks_;
};

using BlockMatrix = BasicBlockMatrix<RatFunc>;
using AlphaBlockMatrix = BasicBlockMatrix<AlphaSeries>;
using RationalBlockMatrix = BasicBlockMatrix<mpq_class>;

/// x with a * x = b, for invertible a.
template <typename T>
std::vector<T> solve(const Matrix<T>& a, const std::vector<T>& b) {
  const Matrix<T> inv = a.inverse();
  std::vector<T> x(b.size(), T(0));
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) x[i] += inv(i, j) * b[j];
  }
  return x;
}

template <typename T>
BasicBlockMatrix<T> power(const BasicBlockMatrix<T>& m, unsigned n) {
  auto result = BasicBlockMatrix<T>::identity();
  for (unsigned i = 0; i < n; ++i) result = result * m;
  return result;
}

/// Unique coefficients c with target = sum_i c_i * basis_i, by fraction-field
/// Gaussian elimination over all block entries.
/// Throws DependentBasis if the basis is linearly dependent, NotInSpan if no
/// solution exists.
template <typename T>
std::vector<T> solve_span(const BasicBlockMatrix<T>& target, const std::vector<BasicBlockMatrix<T>>& basis) {
  const std::size_t unknowns = basis.size();
  std::vector<std::vector<T>> rows;
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t n = BasicBlockMatrix<T>::kSizes[k];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<T> row;
        row.reserve(unknowns + 1);
        bool nonzero = !is_zero(target.block(k)(i, j));
        for (const auto& b : basis) {
          row.push_back(b.block(k)(i, j));
          nonzero = nonzero || !is_zero(row.back());
        }
        row.push_back(target.block(k)(i, j));
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns; ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) throw DependentBasis("basis matrices are linearly dependent");
    std::swap(rows[piv], rows[rank]);
    const T p = rows[rank][col];
    for (auto& x : rows[rank]) x /= p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || is_zero(rows[r][col])) continue;
      const T f = rows[r][col];
      for (std::size_t j = col; j <= unknowns; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!is_zero(rows[r][unknowns])) throw NotInSpan("target is not in the span of the basis");
  }
  std::vector<T> coeffs;
  coeffs.reserve(unknowns);
  for (std::size_t r = 0; r < unknowns; ++r) coeffs.push_back(rows[r][unknowns]);
  return coeffs;
}

}  // namespace spin7
