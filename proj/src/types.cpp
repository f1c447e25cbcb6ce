#include "flagbundle/types.hpp"

#include <algorithm>

#include "flagbundle/error.hpp"

namespace flagbundle {

NodeSet::NodeSet(std::vector<int> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
}

NodeSet NodeSet::all(int k) {
  std::vector<int> n(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) n[static_cast<std::size_t>(i)] = i + 1;
  return NodeSet(std::move(n));
}

NodeSet NodeSet::from_mask(unsigned long long mask, int k) {
  std::vector<int> n;
  for (int i = 0; i < k; ++i)
    if (mask >> i & 1ULL) n.push_back(i + 1);
  return NodeSet(std::move(n));
}

bool NodeSet::contains(int node) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), node);
}

bool NodeSet::subset_of(const NodeSet& other) const {
  return std::includes(other.nodes_.begin(), other.nodes_.end(), nodes_.begin(), nodes_.end());
}

NodeSet NodeSet::complement(int k) const {
  std::vector<int> n;
  for (int i = 1; i <= k; ++i)
    if (!contains(i)) n.push_back(i);
  return NodeSet(std::move(n));
}

void NodeSet::check_range(int k) const {
  for (int n : nodes_)
    if (n < 1 || n > k)
      throw Error(ErrorKind::IndexOutOfRange,
                  "node " + std::to_string(n) + " outside 1.." + std::to_string(k));
}

std::string NodeSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < nodes_.size(); ++i) out += (i ? "," : "") + std::to_string(nodes_[i]);
  return out + "}";
}

std::vector<NodeSet> subsets_in_canonical_order(int k, bool include_full) {
  std::vector<NodeSet> out;
  for (int size = 0; size <= k; ++size) {
    if (size == k && !include_full) break;
    // Lexicographic combinations of `size` nodes out of k.
    std::vector<int> comb(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) comb[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
      out.emplace_back(comb);
      int i = size - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == k - size + i + 1) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

void Word::check_range(int k) const {
  for (int l : letters)
    if (l < 1 || l > k)
      throw Error(ErrorKind::IndexOutOfRange,
                  "letter " + std::to_string(l) + " outside 1.." + std::to_string(k));
}

std::string Word::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < letters.size(); ++i)
    out += (i ? "," : "") + std::to_string(letters[i]);
  return out + ")";
}

}  // namespace flagbundle
