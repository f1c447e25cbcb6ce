#include "flagbundle/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "flagbundle/bottsam.hpp"
#include "flagbundle/bundle.hpp"
#include "flagbundle/cohom.hpp"
#include "flagbundle/error.hpp"
#include "flagbundle/lattice.hpp"
#include "flagbundle/rootsys.hpp"
#include "flagbundle/weyl.hpp"

namespace flagbundle {

namespace {

constexpr Int kEnumerateBelow = 200'000;
constexpr Int kSectionsBelow = 1152;

IntVector closed_form(Component c) {
  const Int k = c.rank;
  IntVector b(static_cast<std::size_t>(k));
  auto at = [&](Int i) -> Int& { return b[static_cast<std::size_t>(i - 1)]; };
  switch (c.family) {
    case Family::A:
      for (Int i = 1; i <= k; ++i) at(i) = i * (k - i + 1);
      break;
    case Family::B:
      for (Int i = 1; i <= k; ++i) at(i) = i * (2 * k - i);
      at(k) = k * k;
      break;
    case Family::C:
      for (Int i = 1; i <= k; ++i) at(i) = i * (2 * k - i + 1);
      at(k) = k * (k + 1) / 2;
      break;
    case Family::D:
      for (Int i = 1; i <= k - 2; ++i) at(i) = i * (2 * k - i - 1);
      at(k - 1) = at(k) = k * (k - 1) / 2;
      break;
    case Family::E:
      if (k == 6) b = {16, 22, 30, 42, 30, 16};
      if (k == 7) b = {34, 49, 66, 96, 75, 52, 27};
      if (k == 8) b = {92, 136, 182, 270, 220, 168, 114, 58};
      break;
    case Family::F:
      b = {16, 30, 42, 22};
      break;
    case Family::G:
      b = {10, 6};
      break;
  }
  return b;
}

Int order_of(Component c) {
  auto fact = [](Int m) {
    Int f = 1;
    for (Int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  const Int n = c.rank;
  switch (c.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return (Int{1} << n) * fact(n);
    case Family::D: return (Int{1} << (n - 1)) * fact(n);
    case Family::E: return n == 6 ? 51'840 : n == 7 ? 2'903'040 : 696'729'600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

class Sweep {
 public:
  explicit Sweep(const DynkinDiagram& d) : name_(d.to_string()) {}

  void record(const std::string& check, bool ok, const std::string& detail = {}) {
    out_.push_back({check, name_, ok, ok ? std::string() : detail});
  }

  // Runs `body`, turning any exception into a failed check.
  template <typename F>
  void run(const std::string& check, F&& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const Error& e) {
      detail = std::string(to_string(e.kind())) + ": " + e.what();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    record(check, ok, detail);
  }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string name_;
  std::vector<CheckResult> out_;
};

bool components_met(const RootSystem& rs, const NodeSet& i) {
  for (const auto& comp : diagram_components(rs))
    if (std::none_of(comp.nodes().begin(), comp.nodes().end(), [&](int n) { return i.contains(n); }))
      return false;
  return true;
}

// Every vector in [-r, r]^k.
std::vector<IntVector> box(int k, Int r) {
  std::vector<IntVector> out;
  IntVector v(static_cast<std::size_t>(k), -r);
  for (;;) {
    out.push_back(v);
    std::size_t p = 0;
    while (p < v.size() && v[p] == r) v[p++] = -r;
    if (p == v.size()) break;
    ++v[p];
  }
  return out;
}

}  // namespace

IntVector table1_closed_form(const DynkinDiagram& d) {
  IntVector out;
  for (const auto& c : d.components()) {
    const IntVector b = closed_form(c);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

Int weyl_group_order(const DynkinDiagram& d) {
  Int n = 1;
  for (const auto& c : d.components()) n = checked_mul(n, order_of(c));
  return n;
}

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; }));
}

std::vector<DynkinDiagram> verify_diagrams(int rank_max) {
  std::vector<DynkinDiagram> out = connected_diagrams(rank_max);
  for (const char* extra : {"A1+A1", "A1+A2", "A1+A1+A1", "B2+G2"}) {
    DynkinDiagram d = parse_diagram(extra);
    if (d.rank() <= rank_max) out.push_back(d);
  }
  return out;
}

Mutation pick_mutation(const std::vector<DynkinDiagram>& diagrams, std::uint64_t seed) {
  if (diagrams.empty()) throw Error(ErrorKind::InvalidRank, "no diagrams to mutate");
  std::mt19937_64 gen(seed);
  const auto& d = diagrams[std::uniform_int_distribution<std::size_t>(0, diagrams.size() - 1)(gen)];
  const auto k = static_cast<std::size_t>(d.rank());
  std::uniform_int_distribution<std::size_t> entry(0, k - 1);
  Mutation m;
  m.diagram = d.to_string();
  m.row = entry(gen);
  m.col = entry(gen);
  m.bit = std::uniform_int_distribution<int>(0, 63)(gen);
  m.before = cartan_matrix(d)(m.row, m.col);
  m.after = static_cast<Int>(static_cast<std::uint64_t>(m.before) ^ (std::uint64_t{1} << m.bit));
  return m;
}

std::vector<CheckResult> verify_matrix(const DynkinDiagram& claimed, const IntMatrix& m) {
  Sweep sweep(claimed);
  const int k = claimed.rank();

  const std::string why = cartan_invariant_violation(m);
  sweep.record("cartan-invariants", why.empty(), why);
  if (!why.empty()) return sweep.take();

  bool classified = false;
  sweep.run("classify-round-trip", [&](std::string& detail) {
    const Classification c = classify_cartan(m);
    classified = c.diagram == canonicalize(claimed);
    detail = "matrix classifies as " + c.diagram.to_string();
    return classified;
  });
  if (!classified) return sweep.take();

  const RootSystem rs = RootSystem::generate(CartanMatrix::from_entries(m));
  const Int order = weyl_group_order(claimed);

  sweep.run("table1-closed-form", [&](std::string& detail) {
    const IntVector b = b_coefficients(rs);
    detail = "b = " + to_string(b) + ", closed form " + to_string(table1_closed_form(claimed));
    return b == table1_closed_form(claimed);
  });

  sweep.run("weyl-longest-length", [&](std::string& detail) {
    const auto [w0, word] = longest_element(rs, NodeSet::all(k));
    detail = "l(w0) = " + std::to_string(w0.length()) + ", |Phi+| = " + std::to_string(rs.num_positive());
    if (static_cast<std::size_t>(w0.length()) != rs.num_positive() || word.size() != rs.num_positive())
      return false;
    const Weight image = act_on_weight(rs, w0, Weight(IntVector(static_cast<std::size_t>(k), 2)));
    detail = "w0 (2,...,2) = " + to_string(image.span());
    return image == Weight(IntVector(static_cast<std::size_t>(k), -2));
  });

  if (order <= kEnumerateBelow)
    sweep.run("weyl-enumeration", [&](std::string& detail) {
      const auto all = enumerate(rs, static_cast<std::size_t>(order));
      detail = "enumerated " + std::to_string(all.size()) + ", expected " + std::to_string(order);
      if (static_cast<Int>(all.size()) != order) return false;
      for (std::size_t n = 1; n < all.size(); ++n)
        if (all[n].length() < all[n - 1].length()) return false;
      return static_cast<std::size_t>(all.back().length()) == rs.num_positive();
    });

  if (claimed.connected())
    sweep.run("highest-root", [&](std::string& detail) {
      const Root top = highest_root(rs);
      detail = "highest root " + to_string(top.span());
      for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i)
        if (rs.pair_with_simple_coroot(top, i) < 0) return false;
      return true;
    });

  sweep.run("homogeneity", [&](std::string& detail) {
    for (const auto& i : subsets_in_canonical_order(k, true)) {
      if (i.empty() || !components_met(rs, i)) continue;
      detail = "I = " + i.to_string();
      if (!homogeneity_inequality_1(rs, i) || !homogeneity_inequality_2(rs, i)) return false;
      for (const auto& t : unsplit_tag_solutions(rs, i))
        if (!restricted_trivial(t, i)) return false;
    }
    return rel_canonical_decomposition(rs, NodeSet::all(k)) == b_coefficients(rs);
  });

  sweep.run("lattice-index", [&](std::string& detail) {
    const auto sc = IsogenyLattice::simply_connected(claimed);
    const Int det = std::abs(determinant(m));
    detail = "det " + std::to_string(det) + ", Smith index " + std::to_string(smith_index(sc));
    return smith_index(sc) == det && admissible_index(sc) == det &&
           admissible_index(IsogenyLattice::adjoint(claimed)) == 1;
  });

  sweep.run("cohomology", [&](std::string& detail) {
    const Int r = k <= 4 ? 2 : 1;
    const int top = static_cast<int>(rs.num_positive());
    for (const auto& v : box(k, r)) {
      const LineBundleClass lambda(v);
      detail = "lambda = " + to_string(v);
      const CohomologyResult h = cohomology(rs, lambda);
      const BigInt chi = euler_characteristic(rs, lambda);
      const BigInt alt = h.all_zero ? BigInt(0) : (h.degree % 2 ? BigInt(-h.dimension) : h.dimension);
      if (alt != chi) return false;
      const CohomologyResult dual = cohomology(rs, serre_partner(lambda));
      for (int d = 0; d <= top; ++d)
        if (h.h(d) != dual.h(top - d)) return false;
      if (cohomology(rs, lambda, ReflectionStrategy::LargestIndex) != h ||
          cohomology(rs, lambda, ReflectionStrategy::MostNegative) != h)
        return false;
    }
    return true;
  });

  if (order <= kSectionsBelow)
    sweep.run("fundamental-sections", [&](std::string& detail) {
      const FlagBundleModel model(IsogenyLattice::adjoint(claimed),
                                  Coweight(IntVector(static_cast<std::size_t>(k), 1)));
      const auto sections = fundamental_sections(rs, model);
      detail = std::to_string(sections.size()) + " sections";
      if (static_cast<Int>(sections.size()) != order) return false;
      for (const auto& sd : sections)
        for (int t = 1; t <= k; ++t) {
          const auto other = fundamental_section_degrees(rs, model, times_simple(rs, sd.w, t));
          const auto ti = static_cast<std::size_t>(t - 1);
          if (other.degrees[ti] != -sd.degrees[ti]) return false;
        }
      const auto minimal = minimal_sections(rs, model);
      return minimal.size() == 1 && minimal.front().w.is_identity();
    });

  if (k <= 3)
    sweep.run("bott-samelson", [&](std::string& detail) {
      std::vector<Word> frontier{Word{}};
      for (int len = 0; len <= 4; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
          const int dim = image_dimension(rs, w);
          detail = "word " + w.to_string();
          if (dim > static_cast<int>(w.size())) return false;
          if ((dim == static_cast<int>(w.size())) != is_reduced(rs, w)) return false;
          for (int a = 1; a <= k; ++a) {
            Word x = w;
            x.letters.push_back(a);
            next.push_back(std::move(x));
          }
        }
        frontier = std::move(next);
      }
      return true;
    });

  sweep.run("face-report", [&](std::string& detail) {
    const auto rows = simplicial_face_report(rs);
    detail = std::to_string(rows.size()) + " rows";
    if (rows.size() != (std::size_t{1} << k) - 1) return false;
    for (const auto& a : rows)
      for (const auto& b : rows)
        if (a.nodes.subset_of(b.nodes) && a.dimension > b.dimension) return false;
    return true;
  });

  return sweep.take();
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.rank_max < 1) throw Error(ErrorKind::InvalidRank, "rank bound must be at least 1");
  VerifyReport report;
  const auto diagrams = verify_diagrams(options.rank_max);
  if (options.mutate_seed) report.mutation = pick_mutation(diagrams, *options.mutate_seed);
  for (const auto& d : diagrams) {
    IntMatrix m = cartan_matrix(d);
    if (report.mutation && report.mutation->diagram == d.to_string())
      m(report.mutation->row, report.mutation->col) = report.mutation->after;
    auto r = verify_matrix(d, m);
    report.results.insert(report.results.end(), r.begin(), r.end());
  }
  return report;
}

}  // namespace flagbundle
