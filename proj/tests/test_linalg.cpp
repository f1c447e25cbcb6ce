#include <doctest.h>

#include <random>
#include <stdexcept>

#include "flagbundle/linalg.hpp"

using namespace flagbundle;

namespace {

IntMatrix random_matrix(std::mt19937& gen, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = d(gen);
  return m;
}

// Laplace expansion, used as an independent determinant.
Int laplace(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Int sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t s = 0, t = 0; s < n; ++s)
        if (s != c) minor(r - 1, t++) = m(r, s);
    sum += (c % 2 ? -1 : 1) * m(0, c) * laplace(minor);
  }
  return sum;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("determinant of small matrices") {
    CHECK(determinant(IntMatrix{{2, -1}, {-1, 2}}) == 3);
    CHECK(determinant(IntMatrix{{2, -1}, {-3, 2}}) == 1);
    CHECK(determinant(IntMatrix{{2, -2}, {-2, 2}}) == 0);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  }

  TEST_CASE("determinant agrees with Laplace expansion") {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + trial % 5;
      const IntMatrix m = random_matrix(gen, n, -4, 4);
      CHECK(determinant(m) == laplace(m));
    }
  }

  TEST_CASE("adjugate times matrix is det times identity") {
    std::mt19937 gen(12);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + trial % 5;
      const IntMatrix m = random_matrix(gen, n, -3, 3);
      IntMatrix expect = IntMatrix::identity(n);
      const Int det = determinant(m);
      for (std::size_t i = 0; i < n; ++i) expect(i, i) = det;
      CHECK(adjugate(m) * m == expect);
      CHECK(m * adjugate(m) == expect);
    }
  }

  TEST_CASE("Smith normal form structure") {
    std::mt19937 gen(13);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + trial % 5;
      const IntMatrix a = random_matrix(gen, n, -5, 5);
      const SmithForm s = smith_normal_form(a);
      CHECK(s.U * a * s.V == s.D);
      CHECK(std::llabs(determinant(s.U)) == 1);
      CHECK(std::llabs(determinant(s.V)) == 1);
      const IntVector f = s.invariant_factors();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) CHECK(s.D(i, j) == 0);
      for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        CHECK(f[i] >= 0);
        if (f[i] != 0) CHECK(f[i + 1] % f[i] == 0);
        else CHECK(f[i + 1] == 0);
      }
      Int product = 1;
      for (Int x : f) product *= x;
      CHECK(product == std::llabs(determinant(a)));
    }
  }

  TEST_CASE("integer solve") {
    const IntMatrix a{{2}};
    CHECK_FALSE(solve_integer(a, IntVector{1}).has_value());
    REQUIRE(solve_integer(a, IntVector{2}).has_value());
    CHECK(*solve_integer(a, IntVector{2}) == IntVector{1});

    std::mt19937 gen(14);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + trial % 4;
      const IntMatrix m = random_matrix(gen, n, -4, 4);
      IntVector x(n);
      for (auto& v : x) v = d(gen);
      const IntVector b = m * std::span<const Int>(x);
      const auto sol = solve_integer(m, b);
      REQUIRE(sol.has_value());
      CHECK(m * std::span<const Int>(*sol) == b);
    }
  }

  TEST_CASE("unimodular inverse") {
    const IntMatrix m{{2, 1}, {1, 1}};
    CHECK(unimodular_inverse(m) * m == IntMatrix::identity(2));
    CHECK_THROWS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}));
  }

  TEST_CASE("checked arithmetic throws on overflow") {
    const Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
    CHECK(checked_mul(-3, 4) == -12);
  }

  TEST_CASE("vector formatting") { CHECK(to_string(IntVector{-1, 3}) == "(-1,3)"); }
}
