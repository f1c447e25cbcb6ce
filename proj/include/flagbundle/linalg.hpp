#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flagbundle {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

// Dense row-major integer matrix. Exact arithmetic only; every operation
// that could overflow 64 bits checks and throws std::overflow_error.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(std::span<const Int> v) const;

  bool operator==(const IntMatrix&) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

Int dot(std::span<const Int> a, std::span<const Int> b);

// Fraction-free Gaussian elimination (Bareiss); exact for integer input.
Int determinant(const IntMatrix& m);

// Classical adjoint: adjugate(m) * m == determinant(m) * identity.
IntMatrix adjugate(const IntMatrix& m);

// Divides every entry by d, throwing std::logic_error if any is not a
// multiple.
IntMatrix exact_divide(const IntMatrix& m, Int d);

// Inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

// U * A * V = D with U, V unimodular and D diagonal, each diagonal entry
// dividing the next; zero entries trail.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  IntVector invariant_factors() const;
  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

// An integer solution x of a * x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const Int> b);
std::optional<IntVector> solve_integer(const SmithForm& snf, std::span<const Int> b);

std::string to_string(std::span<const Int> v);

}  // namespace flagbundle
