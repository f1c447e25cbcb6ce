#include "flagbundle/rootsys.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "flagbundle/error.hpp"

namespace flagbundle {

namespace {

Int height(const IntVector& v) {
  Int h = 0;
  for (Int x : v) h += x;
  return h;
}

bool height_then_lex(const IntVector& a, const IntVector& b) {
  const Int ha = height(a), hb = height(b);
  return ha != hb ? ha < hb : a < b;
}

// <beta, alpha_i^vee> = sum_j beta_j m(j, i)
Int pair_column(const IntMatrix& m, const IntVector& beta, std::size_t i) {
  Int s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * m(j, i);
  return s;
}

}  // namespace

std::vector<IntVector> positive_root_closure(const IntMatrix& m) {
  const std::size_t k = m.rows();
  std::set<IntVector> known;
  std::vector<IntVector> layer;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector e(k, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  std::vector<IntVector> all = layer;
  while (!layer.empty()) {
    std::set<IntVector> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < k; ++i) {
        // The alpha_i-string through alpha_i is {-alpha_i, alpha_i}.
        if (beta[i] == 1 && height(beta) == 1) continue;
        // p: how far the string extends downward inside the known roots.
        Int p = 0;
        IntVector down = beta;
        for (;;) {
          down[i] -= 1;
          if (!known.contains(down)) break;
          ++p;
        }
        const Int q = p - pair_column(m, beta, i);
        if (q > 0) {
          IntVector up = beta;
          up[i] += 1;
          if (!known.contains(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) {
      known.insert(r);
      all.push_back(r);
    }
  }
  std::sort(all.begin(), all.end(), height_then_lex);
  return all;
}

RootSystem RootSystem::generate(const DynkinDiagram& d) { return generate(CartanMatrix(d)); }

RootSystem RootSystem::generate(const CartanMatrix& c) {
  RootSystem rs(c);
  const IntMatrix& m = c.entries();
  const std::size_t k = m.rows();

  for (auto& v : positive_root_closure(m)) rs.roots_.emplace_back(std::move(v));
  for (std::size_t n = 0; n < rs.roots_.size(); ++n) rs.lookup_.emplace(rs.roots_[n], n);

  // Align coroots with roots by walking up from the simple roots with
  // simple reflections: if beta' = s_i(beta) then beta'^vee = s_i(beta^vee).
  std::vector<std::optional<Coroot>> aligned(rs.roots_.size());
  std::queue<std::size_t> work;
  for (std::size_t i = 0; i < k; ++i) {
    Root simple(IntVector(k, 0));
    simple[i] = 1;
    const std::size_t n = rs.lookup_.at(simple);
    aligned[n] = coroot_of_simple(static_cast<int>(k), i);
    work.push(n);
  }
  while (!work.empty()) {
    const std::size_t n = work.front();
    work.pop();
    const Root& beta = rs.roots_[n];
    const Coroot& beta_v = *aligned[n];
    for (std::size_t i = 0; i < k; ++i) {
      const Int a = pair_column(m, beta.values, i);
      if (a >= 0) continue;
      Root up = beta;
      up[i] -= a;
      Coroot up_v = beta_v;
      up_v[i] -= rs.pair_simple_root_with(i, beta_v);
      const auto idx = rs.index_of(up);
      if (!idx) throw std::logic_error("reflection left the positive root set");
      if (aligned[*idx]) {
        if (*aligned[*idx] != up_v) throw std::logic_error("inconsistent coroot alignment");
        continue;
      }
      aligned[*idx] = std::move(up_v);
      work.push(*idx);
    }
  }

  // The aligned coroots must be exactly the closure of the dual system.
  std::set<IntVector> dual;
  for (auto& v : positive_root_closure(m.transposed())) dual.insert(std::move(v));
  std::set<IntVector> got;
  for (const auto& cv : aligned) {
    if (!cv) throw std::logic_error("positive root without coroot");
    rs.coroots_.push_back(*cv);
    got.insert(cv->values);
  }
  if (got != dual) throw std::logic_error("coroot alignment disagrees with dual closure");
  return rs;
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  const auto it = lookup_.find(r);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const Root& r) const {
  if (is_positive_root(r)) return true;
  Root neg = r;
  for (auto& x : neg.values) x = -x;
  return is_positive_root(neg);
}

Int RootSystem::pair_with_simple_coroot(const Root& beta, std::size_t i) const {
  return pair_column(cartan_.entries(), beta.values, i);
}

Int RootSystem::pair_simple_root_with(std::size_t i, const Coroot& coroot) const {
  Int s = 0;
  for (std::size_t j = 0; j < coroot.size(); ++j) s += cartan_(i, j) * coroot[j];
  return s;
}

Coroot RootSystem::coroot_of_simple(int k, std::size_t i) {
  Coroot c(IntVector(static_cast<std::size_t>(k), 0));
  c[i] = 1;
  return c;
}

std::vector<Root> positive_subsystem(const RootSystem& rs, const NodeSet& s) {
  s.check_range(rs.rank());
  std::vector<Root> out;
  for (const auto& r : rs.positive_roots()) {
    bool inside = true;
    for (std::size_t t = 0; t < r.size() && inside; ++t)
      if (r[t] != 0 && !s.contains(static_cast<int>(t) + 1)) inside = false;
    if (inside) out.push_back(r);
  }
  return out;
}

namespace {

CoefficientVector sum_roots(const std::vector<Root>& roots, std::size_t k) {
  CoefficientVector out(k, 0);
  for (const auto& r : roots)
    for (std::size_t t = 0; t < k; ++t) out[t] += r[t];
  return out;
}

}  // namespace

CoefficientVector b_coefficients(const RootSystem& rs) {
  return sum_roots(rs.positive_roots(), static_cast<std::size_t>(rs.rank()));
}

CoefficientVector b_coefficients(const DynkinDiagram& d) {
  return b_coefficients(RootSystem::generate(d));
}

CoefficientVector c_coefficients(const RootSystem& rs, const NodeSet& i) {
  i.check_range(rs.rank());
  return sum_roots(positive_subsystem(rs, i.complement(rs.rank())),
                   static_cast<std::size_t>(rs.rank()));
}

CoefficientVector c_coefficients(const DynkinDiagram& d, const NodeSet& i) {
  return c_coefficients(RootSystem::generate(d), i);
}

Int pairing(const Weight& lambda, const Coroot& coroot) {
  if (lambda.size() != coroot.size())
    throw Error(ErrorKind::RankMismatch, "weight of rank " + std::to_string(lambda.size()) +
                                             " paired with coroot of rank " +
                                             std::to_string(coroot.size()));
  return dot(lambda.span(), coroot.span());
}

Weight rho(int k) { return Weight(IntVector(static_cast<std::size_t>(k), 1)); }

Root highest_root(const RootSystem& rs) {
  // Connectedness straight from the Cartan matrix graph.
  const std::size_t k = static_cast<std::size_t>(rs.rank());
  std::vector<bool> seen(k, false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (std::size_t v = 0; v < k; ++v)
      if (!seen[v] && rs.cartan()(u, v) != 0) {
        seen[v] = true;
        ++reached;
        q.push(v);
      }
  }
  if (reached != k) throw Error(ErrorKind::NotConnected, "diagram is not connected");

  const Root& top = rs.positive_roots().back();
  for (const auto& r : rs.positive_roots())
    for (std::size_t t = 0; t < k; ++t)
      if (r[t] > top[t]) throw std::logic_error("no root dominates all others");
  return top;
}

Root highest_root(const DynkinDiagram& d) {
  if (!d.connected()) throw Error(ErrorKind::NotConnected, d.to_string() + " is not connected");
  return highest_root(RootSystem::generate(d));
}

}  // namespace flagbundle
