#include "flagbundle/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

#include "flagbundle/error.hpp"

namespace flagbundle {

char family_letter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

bool valid_component(Component c) {
  switch (c.family) {
    case Family::A:
    case Family::B:
    case Family::C: return c.rank >= 1;
    case Family::D: return c.rank >= 3;
    case Family::E: return c.rank >= 6 && c.rank <= 8;
    case Family::F: return c.rank == 4;
    case Family::G: return c.rank == 2;
  }
  return false;
}

bool canonical_component(Component c) {
  if (!valid_component(c)) return false;
  switch (c.family) {
    case Family::B: return c.rank >= 2;
    case Family::C: return c.rank >= 3;
    case Family::D: return c.rank >= 4;
    default: return true;
  }
}

namespace {

Component canonical_name(Component c) {
  if ((c.family == Family::B || c.family == Family::C) && c.rank == 1) return {Family::A, 1};
  if (c.family == Family::C && c.rank == 2) return {Family::B, 2};
  if (c.family == Family::D && c.rank == 3) return {Family::A, 3};
  return c;
}

}  // namespace

DynkinDiagram::DynkinDiagram(std::vector<Component> components)
    : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (!valid_component(c)) {
      throw Error(ErrorKind::InvalidRank, std::string("invalid rank for family ") +
                                              family_letter(c.family) + ": " +
                                              std::to_string(c.rank));
    }
    offsets_.push_back(rank_);
    rank_ += c.rank;
  }
}

std::size_t DynkinDiagram::component_of(int node) const {
  if (node < 1 || node > rank_)
    throw Error(ErrorKind::IndexOutOfRange, "node " + std::to_string(node) + " out of range");
  std::size_t c = 0;
  while (c + 1 < components_.size() && offsets_[c + 1] < node) ++c;
  return c;
}

std::string DynkinDiagram::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += '+';
    out += family_letter(components_[i].family);
    out += std::to_string(components_[i].rank);
  }
  return out;
}

DynkinDiagram parse_diagram(std::string_view spec) {
  if (spec.empty()) throw Error(ErrorKind::MalformedToken, "empty diagram spec");
  std::vector<Component> comps;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t plus = spec.find('+', pos);
    const std::string_view token =
        spec.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
    if (token.size() < 2)
      throw Error(ErrorKind::MalformedToken, "malformed token '" + std::string(token) + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    if (letter < 'A' || letter > 'G')
      throw Error(ErrorKind::MalformedToken, "unknown family in '" + std::string(token) + "'");
    int rank = 0;
    const auto digits = token.substr(1);
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits[0] == '-' ||
        digits[0] == '+')
      throw Error(ErrorKind::MalformedToken, "malformed rank in '" + std::string(token) + "'");
    comps.push_back({static_cast<Family>(letter - 'A'), rank});
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return DynkinDiagram(std::move(comps));
}

DynkinDiagram canonicalize(const DynkinDiagram& d) {
  std::vector<Component> comps;
  for (const auto& c : d.components()) comps.push_back(canonical_name(c));
  std::sort(comps.begin(), comps.end());
  return DynkinDiagram(std::move(comps));
}

IntMatrix cartan_block(Component c) {
  if (!valid_component(c))
    throw Error(ErrorKind::InvalidRank, "invalid component " + std::string(1, family_letter(c.family)) +
                                            std::to_string(c.rank));
  const auto n = static_cast<std::size_t>(c.rank);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 2;
  // 1-based simple edge helper.
  auto link = [&m](std::size_t a, std::size_t b) {
    m(a - 1, b - 1) = -1;
    m(b - 1, a - 1) = -1;
  };
  switch (c.family) {
    case Family::A:
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      // alpha_n short.
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      if (n >= 2) m(n - 2, n - 1) = -2;
      break;
    case Family::C:
      // alpha_n long.
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      if (n >= 2) m(n - 1, n - 2) = -2;
      break;
    case Family::D:
      for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Family::E:
      link(1, 3);
      link(2, 4);
      for (std::size_t i = 3; i < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(1, 2);
      link(2, 3);
      link(3, 4);
      m(1, 2) = -2;  // alpha_2 long, alpha_3 short
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long.
      m(0, 1) = -1;
      m(1, 0) = -3;
      break;
  }
  return m;
}

IntMatrix cartan_matrix(const DynkinDiagram& d) {
  const auto k = static_cast<std::size_t>(d.rank());
  IntMatrix m(k, k);
  for (std::size_t c = 0; c < d.components().size(); ++c) {
    const IntMatrix block = cartan_block(d.components()[c]);
    const auto off = static_cast<std::size_t>(d.offset(c));
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) m(off + i, off + j) = block(i, j);
  }
  return m;
}

std::string cartan_invariant_violation(const IntMatrix& m) {
  if (!m.square()) return "matrix is not square";
  if (m.rows() == 0) return "matrix is empty";
  const std::size_t k = m.rows();
  for (std::size_t i = 0; i < k; ++i) {
    if (m(i, i) != 2) return "diagonal entry " + std::to_string(i + 1) + " is not 2";
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if (m(i, j) > 0) return "positive off-diagonal entry";
      if (m(i, j) < -3) return "off-diagonal entry below -3";
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if ((m(i, j) == 0) != (m(j, i) == 0)) return "zero pattern is not symmetric";
      if (m(i, j) * m(j, i) > 3) return "off-diagonal product exceeds 3";
    }
  if (determinant(m) == 0) return "matrix is singular";
  return {};
}

CartanMatrix::CartanMatrix(const DynkinDiagram& d) : entries_(cartan_matrix(d)) {}

CartanMatrix CartanMatrix::from_entries(const IntMatrix& m) {
  classify_cartan(m);
  CartanMatrix out;
  out.entries_ = m;
  return out;
}

namespace {

std::vector<Component> candidates_of_rank(int n) {
  std::vector<Component> out;
  for (int f = 0; f <= static_cast<int>(Family::G); ++f) {
    const Component c{static_cast<Family>(f), n};
    if (canonical_component(c)) out.push_back(c);
  }
  return out;
}

// Matches the component with input nodes `nodes` (BFS order) against
// `block`; fills target[i] with the block index assigned to nodes[i].
bool match_block(const IntMatrix& m, const std::vector<std::size_t>& nodes, const IntMatrix& block,
                 std::vector<std::size_t>& target) {
  const std::size_t n = nodes.size();
  std::vector<bool> used(n, false);
  target.assign(n, 0);
  std::function<bool(std::size_t)> assign = [&](std::size_t pos) -> bool {
    if (pos == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < pos && ok; ++prev) {
        ok = m(nodes[pos], nodes[prev]) == block(cand, target[prev]) &&
             m(nodes[prev], nodes[pos]) == block(target[prev], cand);
      }
      if (!ok) continue;
      used[cand] = true;
      target[pos] = cand;
      if (assign(pos + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  return assign(0);
}

}  // namespace

Classification classify_cartan(const IntMatrix& m) {
  if (const auto why = cartan_invariant_violation(m); !why.empty())
    throw Error(ErrorKind::NotACartanMatrix, why);
  const std::size_t k = m.rows();

  // Connected components of the Coxeter graph, each listed in BFS order.
  std::vector<std::vector<std::size_t>> comps;
  std::vector<bool> seen(k, false);
  for (std::size_t s = 0; s < k; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      comp.push_back(u);
      for (std::size_t v = 0; v < k; ++v)
        if (!seen[v] && m(u, v) != 0) {
          seen[v] = true;
          q.push(v);
        }
    }
    comps.push_back(std::move(comp));
  }

  struct Match {
    Component type;
    std::vector<std::size_t> nodes;
    std::vector<std::size_t> target;
  };
  std::vector<Match> matches;
  for (const auto& comp : comps) {
    bool found = false;
    for (const Component cand : candidates_of_rank(static_cast<int>(comp.size()))) {
      std::vector<std::size_t> target;
      if (match_block(m, comp, cartan_block(cand), target)) {
        matches.push_back({cand, comp, std::move(target)});
        found = true;
        break;
      }
    }
    if (!found)
      throw Error(ErrorKind::NotACartanMatrix, "component of rank " + std::to_string(comp.size()) +
                                                   " matches no finite type");
  }

  std::stable_sort(matches.begin(), matches.end(),
                   [](const Match& a, const Match& b) { return a.type < b.type; });
  std::vector<Component> types;
  for (const auto& mt : matches) types.push_back(mt.type);
  Classification out{DynkinDiagram(types), std::vector<int>(k, 0)};
  for (std::size_t c = 0; c < matches.size(); ++c) {
    const auto off = static_cast<std::size_t>(out.diagram.offset(c));
    for (std::size_t i = 0; i < matches[c].nodes.size(); ++i)
      out.permutation[matches[c].nodes[i]] = static_cast<int>(off + matches[c].target[i] + 1);
  }
  return out;
}

std::vector<DynkinDiagram> connected_diagrams(int max_rank) {
  std::vector<DynkinDiagram> out;
  for (int f = 0; f <= static_cast<int>(Family::G); ++f)
    for (int n = 1; n <= max_rank; ++n) {
      const Component c{static_cast<Family>(f), n};
      if (canonical_component(c)) out.push_back(DynkinDiagram({c}));
    }
  return out;
}

}  // namespace flagbundle
