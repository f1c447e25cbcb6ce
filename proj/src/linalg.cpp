#include "flagbundle/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace flagbundle {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        out(r, c) = checked_add(out(r, c), checked_mul(a, rhs(k, c)));
    }
  return out;
}

IntVector IntMatrix::operator*(std::span<const Int> v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  IntVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out[r] = checked_add(out[r], checked_mul((*this)(r, c), v[c]));
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << flagbundle::to_string(std::span<const Int>(data_).subspan(r * cols_, cols_));
  }
  os << ']';
  return os.str();
}

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow");
  return out;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

__extension__ typedef __int128 Wide;

Int determinant(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
  int sign = 1;
  Wide prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        if (a[i][j] > INT64_MAX || a[i][j] < INT64_MIN)
          throw std::overflow_error("determinant overflow");
      }
    prev = a[k][k];
  }
  return static_cast<Int>(sign * a[n - 1][n - 1]);
}

IntMatrix adjugate(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("adjugate of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 1) return IntMatrix{{1}};
  IntMatrix adj(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      // adj(r, c) = (-1)^{r+c} det(m without row c and column r)
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == c) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
          if (j == r) continue;
          minor(mi, mj++) = m(i, j);
        }
        ++mi;
      }
      adj(r, c) = ((r + c) % 2 ? -1 : 1) * determinant(minor);
    }
  return adj;
}

IntMatrix exact_divide(const IntMatrix& m, Int d) {
  if (d == 0) throw std::invalid_argument("division by zero");
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) % d != 0) throw std::logic_error("inexact division");
      out(r, c) = m(r, c) / d;
    }
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const Int det = determinant(m);
  if (det != 1 && det != -1) throw std::invalid_argument("matrix is not unimodular");
  return exact_divide(adjugate(m), det);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] += q * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, Int q) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    m(dst, c) = checked_add(m(dst, c), checked_mul(q, m(src, c)));
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, Int q) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    m(r, dst) = checked_add(m(r, dst), checked_mul(q, m(r, src)));
}

}  // namespace

IntVector SmithForm::invariant_factors() const {
  IntVector out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) ++r;
  return r;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& d = s.D;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    auto move_min_to_pivot = [&]() -> bool {
      std::size_t br = m, bc = n;
      for (std::size_t r = t; r < m; ++r)
        for (std::size_t c = t; c < n; ++c)
          if (d(r, c) != 0 && (br == m || std::llabs(d(r, c)) < std::llabs(d(br, bc)))) {
            br = r;
            bc = c;
          }
      if (br == m) return false;
      swap_rows(d, t, br);
      swap_rows(s.U, t, br);
      swap_cols(d, t, bc);
      swap_cols(s.V, t, bc);
      return true;
    };
    if (!move_min_to_pivot()) break;

    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        const Int q = d(r, t) / d(t, t);
        if (q != 0) {
          add_row(d, r, t, -q);
          add_row(s.U, r, t, -q);
        }
        if (d(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        const Int q = d(t, c) / d(t, t);
        if (q != 0) {
          add_col(d, c, t, -q);
          add_col(s.V, c, t, -q);
        }
        if (d(t, c) != 0) clean = false;
      }
      if (!clean) {
        move_min_to_pivot();
        continue;
      }
      // Pivot must divide every entry of the trailing block.
      bool divides = true;
      for (std::size_t r = t + 1; r < m && divides; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (d(r, c) % d(t, t) != 0) {
            add_row(d, t, r, 1);
            add_row(s.U, t, r, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < m; ++c) s.U(t, c) = -s.U(t, c);
    }
  }
  return s;
}

std::optional<IntVector> solve_integer(const SmithForm& snf, std::span<const Int> b) {
  if (b.size() != snf.U.cols()) throw std::invalid_argument("right-hand side length mismatch");
  const IntVector ub = snf.U * b;
  const std::size_t n = snf.V.rows();
  IntVector y(n, 0);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    const Int di = (i < std::min(snf.D.rows(), snf.D.cols())) ? snf.D(i, i) : 0;
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
      continue;
    }
    if (ub[i] % di != 0) return std::nullopt;
    y[i] = ub[i] / di;
  }
  return snf.V * std::span<const Int>(y);
}

std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const Int> b) {
  return solve_integer(smith_normal_form(a), b);
}

std::string to_string(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace flagbundle
