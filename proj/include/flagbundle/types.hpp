#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "flagbundle/linalg.hpp"

namespace flagbundle {

// Integer coordinates tagged with the basis they are expressed in, so that a
// weight cannot be passed where a root is expected.
template <typename Basis>
struct Coordinates {
  IntVector values;

  Coordinates() = default;
  explicit Coordinates(IntVector v) : values(std::move(v)) {}
  Coordinates(std::initializer_list<Int> v) : values(v) {}

  std::size_t size() const noexcept { return values.size(); }
  Int operator[](std::size_t i) const { return values[i]; }
  Int& operator[](std::size_t i) { return values[i]; }
  std::span<const Int> span() const noexcept { return values; }

  bool operator==(const Coordinates&) const = default;
  auto operator<=>(const Coordinates&) const = default;
};

struct SimpleRootBasis {};
struct SimpleCorootBasis {};
struct FundamentalWeightBasis {};
struct FundamentalCoweightBasis {};

using Root = Coordinates<SimpleRootBasis>;
using Coroot = Coordinates<SimpleCorootBasis>;
// Line bundle classes on G/B: lambda_i = L . Gamma_i.
using Weight = Coordinates<FundamentalWeightBasis>;
using LineBundleClass = Weight;
using Coweight = Coordinates<FundamentalCoweightBasis>;

// A subset of the nodes {1..k}, kept sorted and duplicate-free.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<int> nodes) : NodeSet(std::vector<int>(nodes)) {}
  explicit NodeSet(std::vector<int> nodes);

  static NodeSet all(int k);
  // Subset with bit (i - 1) of `mask` set for each node i.
  static NodeSet from_mask(unsigned long long mask, int k);

  const std::vector<int>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  bool contains(int node) const;
  bool subset_of(const NodeSet& other) const;
  NodeSet complement(int k) const;

  // Throws Error(IndexOutOfRange) if any node lies outside 1..k.
  void check_range(int k) const;

  std::string to_string() const;

  bool operator==(const NodeSet&) const = default;

 private:
  std::vector<int> nodes_;
};

// All subsets of {1..k} ordered by size, then lexicographically.
std::vector<NodeSet> subsets_in_canonical_order(int k, bool include_full);

// A word in the simple reflections; letters are 1-based node indices.
struct Word {
  std::vector<int> letters;

  Word() = default;
  Word(std::initializer_list<int> l) : letters(l) {}
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  void check_range(int k) const;
  std::string to_string() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

}  // namespace flagbundle
