#pragma once

#include <vector>

#include "flagbundle/rootsys.hpp"
#include "flagbundle/weyl.hpp"

namespace flagbundle {

inline constexpr int kFaceReportMaxRank = 12;

// Dimension of the image of the Bott-Samelson variety of `w` in G/B: the
// length of the Demazure product. Equals |w| exactly when w is reduced.
int image_dimension(const RootSystem& rs, const Word& w);

// Dimension of a ch(I)-equivalence class: |Phi+ generated by I|, the length
// of the longest element of W_I. Note I itself generates the subsystem here.
int chI_dimension(const RootSystem& rs, const NodeSet& i);

struct FaceRow {
  NodeSet nodes;
  int dimension;
  Word longest_word;
};

// One row per proper subset I, ordered by size and then lexicographically.
// Throws Error(RankTooLarge) above max_rank.
std::vector<FaceRow> simplicial_face_report(const RootSystem& rs, int max_rank = kFaceReportMaxRank);

}  // namespace flagbundle
