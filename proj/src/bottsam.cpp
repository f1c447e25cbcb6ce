#include "flagbundle/bottsam.hpp"

#include <stdexcept>

#include "flagbundle/error.hpp"

namespace flagbundle {

int image_dimension(const RootSystem& rs, const Word& w) { return demazure_product(rs, w).length(); }

int chI_dimension(const RootSystem& rs, const NodeSet& i) {
  return static_cast<int>(positive_subsystem(rs, i).size());
}

std::vector<FaceRow> simplicial_face_report(const RootSystem& rs, int max_rank) {
  if (rs.rank() > max_rank)
    throw Error(ErrorKind::RankTooLarge, "face report limited to rank " + std::to_string(max_rank));
  std::vector<FaceRow> rows;
  for (auto& s : subsets_in_canonical_order(rs.rank(), /*include_full=*/false)) {
    auto [w, word] = longest_element(rs, s);
    const int dim = chI_dimension(rs, s);
    if (w.length() != dim) throw std::logic_error("longest element length disagrees with root count");
    rows.push_back({std::move(s), dim, std::move(word)});
  }
  return rows;
}

}  // namespace flagbundle
