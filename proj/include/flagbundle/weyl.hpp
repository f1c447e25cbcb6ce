#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "flagbundle/rootsys.hpp"
#include "flagbundle/types.hpp"

namespace flagbundle {

inline constexpr std::size_t kDefaultEnumerationLimit = 1'000'000;

// An element of the Weyl group, stored as the matrix of its action on
// simple-root coordinates (column j is w(alpha_j)) together with its length.
// Entries are root coordinates and never exceed 6 in absolute value, so
// they are kept as int8 to make full enumerations of large groups cheap.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(int k);
  // Length is recomputed as the inversion count against rs.
  static WeylElement from_matrix(const RootSystem& rs, const IntMatrix& m);

  int rank() const noexcept { return k_; }
  int length() const noexcept { return length_; }
  Int entry(std::size_t r, std::size_t c) const { return data_[r * static_cast<std::size_t>(k_) + c]; }
  IntMatrix matrix() const;
  // w(alpha_j), j 0-based.
  Root image_of_simple(std::size_t j) const;
  bool is_identity() const;

  bool operator==(const WeylElement& o) const { return k_ == o.k_ && data_ == o.data_; }

 private:
  friend WeylElement times_simple(const RootSystem&, const WeylElement&, int);
  friend WeylElement simple_times(const RootSystem&, int, const WeylElement&);
  friend std::vector<WeylElement> enumerate(const RootSystem&, std::size_t);

  static WeylElement make(const IntMatrix& m, int length);

  int k_ = 0;
  int length_ = 0;
  std::vector<std::int8_t> data_;
};

// #{beta > 0 : w(beta) < 0}
int inversion_count(const RootSystem& rs, const IntMatrix& m);

// Node indices are 1-based throughout.
WeylElement simple_reflection(const RootSystem& rs, int i);
// w * s_i, length updated from the sign of w(alpha_i).
WeylElement times_simple(const RootSystem& rs, const WeylElement& w, int i);
// s_i * w
WeylElement simple_times(const RootSystem& rs, int i, const WeylElement& w);
WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

// s_{l_1} s_{l_2} ... s_{l_r}: the leftmost letter acts last on a vector.
WeylElement word_to_element(const RootSystem& rs, const Word& w);
bool is_reduced(const RootSystem& rs, const Word& w);
// Lexicographically smallest reduced word.
Word reduced_word(const RootSystem& rs, const WeylElement& w);

// Longest element of the parabolic subgroup W_S and a reduced word for it in
// the letters of S.
std::pair<WeylElement, Word> longest_element(const RootSystem& rs, const NodeSet& s);

// All of W in canonical order (length, then lexicographically smallest
// reduced word). Throws Error(GroupTooLarge) once more than `limit`
// elements have been produced.
std::vector<WeylElement> enumerate(const RootSystem& rs, std::size_t limit = kDefaultEnumerationLimit);

// Left fold x * s_i = x s_i if that is longer than x, else x.
WeylElement demazure_product(const RootSystem& rs, const Word& w);

Root act_on_root(const WeylElement& w, const Root& beta);
// Contragredient actions, so that pairings are preserved:
//   pairing(act_on_weight(w, l), act_on_coroot(w, c)) == pairing(l, c).
Weight act_on_weight(const RootSystem& rs, const WeylElement& w, const Weight& lambda);
Coroot act_on_coroot(const RootSystem& rs, const WeylElement& w, const Coroot& c);
Coweight act_on_coweight(const RootSystem& rs, const WeylElement& w, const Coweight& theta);

// Matrices of the actions above.
IntMatrix weight_action(const RootSystem& rs, const WeylElement& w);
IntMatrix coroot_action(const RootSystem& rs, const WeylElement& w);
IntMatrix coweight_action(const RootSystem& rs, const WeylElement& w);


}  // namespace flagbundle
