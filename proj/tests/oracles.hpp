#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check: roots come from Weyl
// orbits rather than root strings, lengths from word distance in the Cayley
// graph rather than inversion counts, and cohomology from a search over W
// rather than greedy dot reflections.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "flagbundle/linalg.hpp"

namespace oracle {

using flagbundle::Int;
using flagbundle::IntMatrix;
using flagbundle::IntVector;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_negative(const IntVector& v) {
  for (Int x : v)
    if (x != 0) return x < 0;
  return false;
}

// s_i on simple-root coordinates: v - <v, alpha_i^vee> alpha_i.
inline IntVector reflect_root(const IntMatrix& c, IntVector v, std::size_t i) {
  Int p = 0;
  for (std::size_t j = 0; j < v.size(); ++j) p += v[j] * c(j, i);
  v[i] -= p;
  return v;
}

// Positive roots as the Weyl orbit of the simple roots.
inline std::set<IntVector> orbit_positive_roots(const IntMatrix& c) {
  const std::size_t k = c.rows();
  std::set<IntVector> all;
  std::queue<IntVector> q;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector e(k, 0);
    e[i] = 1;
    all.insert(e);
    q.push(e);
  }
  while (!q.empty()) {
    const IntVector v = q.front();
    q.pop();
    for (std::size_t i = 0; i < k; ++i) {
      IntVector w = reflect_root(c, v, i);
      if (all.insert(w).second) q.push(w);
    }
  }
  std::set<IntVector> pos;
  for (const auto& v : all)
    if (!is_negative(v)) pos.insert(v);
  return pos;
}

inline IntMatrix simple_root_matrix(const IntMatrix& c, std::size_t i) {
  const std::size_t k = c.rows();
  IntMatrix m = IntMatrix::identity(k);
  for (std::size_t j = 0; j < k; ++j) m(i, j) -= c(j, i);
  return m;
}

// Every group element (root-action matrix) with its minimal word length,
// by BFS in the Cayley graph.
inline std::map<IntMatrix, int, std::function<bool(const IntMatrix&, const IntMatrix&)>>
cayley_lengths(const IntMatrix& c) {
  auto less = [](const IntMatrix& a, const IntMatrix& b) {
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t s = 0; s < a.cols(); ++s)
        if (a(r, s) != b(r, s)) return a(r, s) < b(r, s);
    return false;
  };
  std::map<IntMatrix, int, std::function<bool(const IntMatrix&, const IntMatrix&)>> dist(less);
  const std::size_t k = c.rows();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(simple_root_matrix(c, i));
  std::queue<IntMatrix> q;
  dist.emplace(IntMatrix::identity(k), 0);
  q.push(IntMatrix::identity(k));
  while (!q.empty()) {
    const IntMatrix m = q.front();
    q.pop();
    const int d = dist.at(m);
    for (const auto& g : gens) {
      IntMatrix x = m * g;
      if (dist.emplace(x, d + 1).second) q.push(x);
    }
  }
  return dist;
}

// Weyl group orders from the classical formulas.
inline Int weyl_order(char family, int n) {
  auto fact = [](int m) {
    Int f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  switch (family) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (Int{1} << n) * fact(n);
    case 'D': return (Int{1} << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

// Positive coroots as an orbit in the dual system (transposed Cartan).
inline std::set<IntVector> orbit_positive_coroots(const IntMatrix& c) {
  return orbit_positive_roots(c.transposed());
}

// Weyl dimension product with the coroot set from the dual orbit.
inline BigInt weyl_product(const IntMatrix& c, const IntVector& lambda) {
  BigInt num = 1, den = 1;
  for (const auto& cv : orbit_positive_coroots(c)) {
    Int a = 0, b = 0;
    for (std::size_t j = 0; j < cv.size(); ++j) {
      a += (lambda[j] + 1) * cv[j];
      b += cv[j];
    }
    num *= a;
    den *= b;
  }
  return num / den;
}

struct BottResult {
  bool zero;
  int degree;
  BigInt dim;
};

// Bott's theorem by search: find w in W with w(lambda + rho) dominant. The
// weight action is built directly from s_i(mu) = mu - mu_i alpha_i with
// alpha_i = row i of C, over all words explored by BFS.
inline BottResult bott(const IntMatrix& c, const IntVector& lambda) {
  const std::size_t k = c.rows();
  IntVector mu(k);
  for (std::size_t j = 0; j < k; ++j) mu[j] = lambda[j] + 1;
  std::map<IntVector, int> dist{{mu, 0}};
  std::queue<IntVector> q;
  q.push(mu);
  while (!q.empty()) {
    const IntVector v = q.front();
    q.pop();
    const bool dominant = std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; });
    if (dominant) {
      if (std::any_of(v.begin(), v.end(), [](Int x) { return x == 0; })) return {true, 0, 0};
      IntVector back(k);
      for (std::size_t j = 0; j < k; ++j) back[j] = v[j] - 1;
      return {false, dist.at(v), weyl_product(c, back)};
    }
    for (std::size_t i = 0; i < k; ++i) {
      IntVector w = v;
      for (std::size_t j = 0; j < k; ++j) w[j] -= v[i] * c(i, j);
      if (dist.emplace(w, dist.at(v) + 1).second) q.push(w);
    }
  }
  return {true, 0, 0};
}

inline int inversions(const IntMatrix& c, const IntMatrix& m) {
  int n = 0;
  for (const auto& beta : orbit_positive_roots(c))
    if (is_negative(m * std::span<const Int>(beta))) ++n;
  return n;
}

// Length of the Demazure product as the maximum length over all subword
// products.
inline int demazure_length_by_subwords(const IntMatrix& c, const std::vector<int>& word) {
  const std::size_t r = word.size();
  auto lengths = cayley_lengths(c);
  int best = 0;
  for (unsigned long long mask = 0; mask < (1ull << r); ++mask) {
    IntMatrix m = IntMatrix::identity(c.rows());
    for (std::size_t p = 0; p < r; ++p)
      if (mask >> p & 1ull) m = m * simple_root_matrix(c, static_cast<std::size_t>(word[p] - 1));
    best = std::max(best, lengths.at(m));
  }
  return best;
}

}  // namespace oracle
