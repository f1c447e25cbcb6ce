#include "flagbundle/bundle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

#include "flagbundle/error.hpp"

namespace flagbundle {

namespace {

Cocycle dominant_cocycle(IsogenyLattice lattice, Coweight theta) {
  if (theta.size() != static_cast<std::size_t>(lattice.rank()))
    throw Error(ErrorKind::RankMismatch, "cocycle rank does not match the diagram");
  for (Int x : theta.values)
    if (x < 0)
      throw Error(ErrorKind::NotDominant, "cocycle " + to_string(theta.span()) + " is not dominant");
  return Cocycle(std::move(lattice), std::move(theta));
}

void check_tag_rank(const RootSystem& rs, const Tag& t) {
  if (t.size() != static_cast<std::size_t>(rs.rank()))
    throw Error(ErrorKind::RankMismatch, "tag rank does not match the diagram");
}

}  // namespace

FlagBundleModel::FlagBundleModel(IsogenyLattice lattice, Coweight theta)
    : theta_(dominant_cocycle(std::move(lattice), std::move(theta))) {}

std::pair<Coweight, WeylElement> normalize_to_dominant(const RootSystem& rs, const Coweight& raw) {
  if (raw.size() != static_cast<std::size_t>(rs.rank()))
    throw Error(ErrorKind::RankMismatch, "vector rank does not match the diagram");
  const IntMatrix& c = rs.cartan().entries();
  Coweight v = raw;
  std::vector<int> applied;
  for (;;) {
    const auto it = std::find_if(v.values.begin(), v.values.end(), [](Int x) { return x < 0; });
    if (it == v.values.end()) break;
    const auto i = static_cast<std::size_t>(it - v.values.begin());
    // s_i(theta) = theta - <alpha_i, theta> alpha_i^vee; alpha_i^vee is Cartan column i.
    const Int vi = v[i];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= vi * c(j, i);
    applied.push_back(static_cast<int>(i) + 1);
  }
  // v = s_{i_m} ... s_{i_1} raw.
  std::reverse(applied.begin(), applied.end());
  return {v, word_to_element(rs, Word(applied))};
}

Tag tag(const FlagBundleModel& m) { return tag_of(m.theta()); }

SectionDegrees fundamental_section_degrees(const RootSystem& rs, const FlagBundleModel& m,
                                           const WeylElement& w) {
  if (w.rank() != rs.rank() || m.diagram().rank() != rs.rank())
    throw Error(ErrorKind::RankMismatch, "element, model and root system ranks differ");
  const auto k = static_cast<std::size_t>(rs.rank());
  const Coweight& theta = m.theta().coords();
  SectionDegrees sd{w, IntVector(k, 0)};
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t s = 0; s < k; ++s) sd.degrees[t] += w.entry(s, t) * theta[s];
  return sd;
}

std::vector<SectionDegrees> fundamental_sections(const RootSystem& rs, const FlagBundleModel& m,
                                                 std::size_t limit) {
  std::vector<SectionDegrees> out;
  for (const auto& w : enumerate(rs, limit)) out.push_back(fundamental_section_degrees(rs, m, w));
  return out;
}

bool is_minimal_section(const SectionDegrees& sd) {
  return std::all_of(sd.degrees.begin(), sd.degrees.end(), [](Int d) { return d >= 0; });
}

std::vector<SectionDegrees> minimal_sections(const RootSystem& rs, const FlagBundleModel& m,
                                             std::size_t limit) {
  std::vector<SectionDegrees> out;
  for (auto& sd : fundamental_sections(rs, m, limit))
    if (is_minimal_section(sd)) out.push_back(std::move(sd));
  return out;
}

bool isomorphic(const FlagBundleModel& a, const FlagBundleModel& b) {
  if (!(a.diagram() == b.diagram()))
    throw Error(ErrorKind::DiagramMismatch,
                a.diagram().to_string() + " vs " + b.diagram().to_string());
  if (!(a.lattice() == b.lattice()))
    throw Error(ErrorKind::LatticeMismatch, a.lattice().name() + " vs " + b.lattice().name());
  return tag(a) == tag(b);
}

std::vector<NodeSet> diagram_components(const RootSystem& rs) {
  const auto k = static_cast<std::size_t>(rs.rank());
  std::vector<bool> seen(k, false);
  std::vector<NodeSet> out;
  for (std::size_t s = 0; s < k; ++s) {
    if (seen[s]) continue;
    std::vector<int> nodes;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      nodes.push_back(static_cast<int>(u) + 1);
      for (std::size_t v = 0; v < k; ++v)
        if (!seen[v] && rs.cartan()(u, v) != 0) {
          seen[v] = true;
          q.push(v);
        }
    }
    out.emplace_back(std::move(nodes));
  }
  return out;
}

void require_components_meet(const RootSystem& rs, const NodeSet& i) {
  i.check_range(rs.rank());
  for (const auto& comp : diagram_components(rs)) {
    const bool meets = std::any_of(comp.nodes().begin(), comp.nodes().end(),
                                   [&](int n) { return i.contains(n); });
    if (!meets)
      throw Error(ErrorKind::ComponentMissesI,
                  "component " + comp.to_string() + " contains no node of I = " + i.to_string());
  }
}

CoefficientVector rel_canonical_decomposition(const RootSystem& rs, const NodeSet& i) {
  CoefficientVector b = b_coefficients(rs);
  const CoefficientVector c = c_coefficients(rs, i);
  for (std::size_t t = 0; t < b.size(); ++t) b[t] -= c[t];
  return b;
}

Int dim_GP(const RootSystem& rs, const NodeSet& i) {
  i.check_range(rs.rank());
  return static_cast<Int>(rs.num_positive()) -
         static_cast<Int>(positive_subsystem(rs, i.complement(rs.rank())).size());
}

bool degree_identity_holds(const RootSystem& rs, const NodeSet& i, const Tag& t) {
  check_tag_rank(rs, t);
  const CoefficientVector b = b_coefficients(rs);
  const CoefficientVector c = c_coefficients(rs, i);
  Int rhs = 0;
  for (std::size_t s = 0; s < t.size(); ++s) {
    const bool in_i = i.contains(static_cast<int>(s) + 1);
    rhs += (in_i ? b[s] : b[s] - c[s]) * t[s];
  }
  return dim_GP(rs, i) == rhs;
}

std::vector<Tag> unsplit_tag_solutions(const RootSystem& rs, const NodeSet& i) {
  require_components_meet(rs, i);
  const auto k = static_cast<std::size_t>(rs.rank());
  const CoefficientVector coeff = rel_canonical_decomposition(rs, i);
  const Int dim = dim_GP(rs, i);

  // Nodes of I first: their lower bound 1 is charged up front.
  std::vector<std::size_t> order;
  for (int n : i.nodes()) order.push_back(static_cast<std::size_t>(n - 1));
  for (std::size_t s = 0; s < k; ++s)
    if (!i.contains(static_cast<int>(s) + 1)) order.push_back(s);

  std::vector<Tag> out;
  Tag current(IntVector(k, 0));
  // Coefficients are >= 1 here, so each d_t <= dim.
  std::function<void(std::size_t, Int)> search = [&](std::size_t pos, Int remaining) {
    if (pos == order.size()) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const std::size_t s = order[pos];
    const Int lo = i.contains(static_cast<int>(s) + 1) ? 1 : 0;
    if (coeff[s] <= 0)
      throw std::logic_error("nonpositive coefficient at node " + std::to_string(s + 1));
    for (Int d = lo; d <= dim && coeff[s] * d <= remaining; ++d) {
      current[s] = d;
      search(pos + 1, remaining - coeff[s] * d);
    }
    current[s] = 0;
  };
  search(0, dim);

  for (const auto& t : out) {
    if (!degree_identity_holds(rs, i, t)) throw std::logic_error("search produced a non-solution");
    if (!restricted_trivial(t, i))
      throw std::logic_error("solution " + to_string(t.span()) + " does not vanish off I");
  }
  return out;
}

bool homogeneity_inequality_1(const RootSystem& rs, const NodeSet& i) {
  require_components_meet(rs, i);
  const CoefficientVector diff = rel_canonical_decomposition(rs, i);
  for (std::size_t s = 0; s < diff.size(); ++s)
    if (!i.contains(static_cast<int>(s) + 1) && diff[s] <= 0) return false;
  return true;
}

bool homogeneity_inequality_2(const RootSystem& rs, const NodeSet& i) {
  require_components_meet(rs, i);
  const CoefficientVector b = b_coefficients(rs);
  Int sum = 0;
  for (int n : i.nodes()) sum += b[static_cast<std::size_t>(n - 1)];
  return sum >= dim_GP(rs, i);
}

bool restricted_trivial(const Tag& t, const NodeSet& i) {
  for (std::size_t s = 0; s < t.size(); ++s)
    if (!i.contains(static_cast<int>(s) + 1) && t[s] != 0) return false;
  return true;
}

}  // namespace flagbundle
