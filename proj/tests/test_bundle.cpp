#include <doctest.h>

#include <functional>

#include <random>
#include <set>

#include "flagbundle/bundle.hpp"
#include "flagbundle/error.hpp"
#include "oracles.hpp"

using namespace flagbundle;

namespace {

RootSystem rs_of(const char* spec) { return RootSystem::generate(parse_diagram(spec)); }

FlagBundleModel adjoint_model(const char* spec, IntVector theta) {
  return FlagBundleModel(IsogenyLattice::adjoint(parse_diagram(spec)), Coweight(std::move(theta)));
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::MalformedToken;
}

// Coweight orbit of theta under s_i(theta) = theta - theta_i * (column i of C).
std::set<IntVector> coweight_orbit(const IntMatrix& c, const IntVector& theta) {
  std::set<IntVector> seen{theta};
  std::vector<IntVector> stack{theta};
  while (!stack.empty()) {
    const IntVector v = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < v.size(); ++i) {
      IntVector w = v;
      for (std::size_t j = 0; j < v.size(); ++j) w[j] -= v[i] * c(j, i);
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen;
}

// Brute-force solutions of the degree identity with d_i >= 1 on I.
std::set<IntVector> brute_unsplit(const RootSystem& rs, const NodeSet& i) {
  const auto k = static_cast<std::size_t>(rs.rank());
  const Int dim = dim_GP(rs, i);
  std::set<IntVector> out;
  IntVector t(k, 0);
  for (;;) {
    bool ok = true;
    for (int n : i.nodes()) ok = ok && t[static_cast<std::size_t>(n - 1)] >= 1;
    if (ok && degree_identity_holds(rs, i, Tag(t))) out.insert(t);
    std::size_t p = 0;
    while (p < k && t[p] == dim) t[p++] = 0;
    if (p == k) break;
    ++t[p];
  }
  return out;
}

}  // namespace

TEST_SUITE("bundle") {
  TEST_CASE("model construction") {
    CHECK(kind_of([] { adjoint_model("A2", {1, -1}); }) == ErrorKind::NotDominant);
    CHECK(kind_of([] {
            FlagBundleModel(IsogenyLattice::simply_connected(parse_diagram("A1")), Coweight{1});
          }) == ErrorKind::NotInLattice);
    CHECK(kind_of([] { adjoint_model("A2", {1}); }) == ErrorKind::RankMismatch);
  }

  TEST_CASE("normalize_to_dominant examples") {
    const RootSystem a1 = rs_of("A1");
    const auto [v, w] = normalize_to_dominant(a1, Coweight{-4});
    CHECK(v == Coweight{4});
    CHECK(w == simple_reflection(a1, 1));
    const RootSystem a2 = rs_of("A2");
    const auto [v2, w2] = normalize_to_dominant(a2, Coweight{3, 1});
    CHECK(v2 == Coweight{3, 1});
    CHECK(w2.is_identity());
  }

  TEST_CASE("normalize_to_dominant finds the unique dominant orbit point") {
    std::mt19937 gen(51);
    std::uniform_int_distribution<int> d(-5, 5);
    for (const char* spec : {"A2", "B2", "G2", "A3", "B3", "C3", "A1+A2"}) {
      const RootSystem rs = rs_of(spec);
      const IntMatrix c = rs.cartan().entries();
      const auto k = static_cast<std::size_t>(rs.rank());
      for (int trial = 0; trial < 40; ++trial) {
        IntVector raw(k);
        for (auto& x : raw) x = d(gen);
        if (trial == 0 && k == 2) raw = {-1, 3};
        const auto [v, w] = normalize_to_dominant(rs, Coweight(raw));
        int dominant = 0;
        IntVector found;
        for (const auto& p : coweight_orbit(c, raw))
          if (std::all_of(p.begin(), p.end(), [](Int x) { return x >= 0; })) {
            ++dominant;
            found = p;
          }
        CHECK(dominant == 1);
        CHECK(v.values == found);
        CHECK(act_on_coweight(rs, w, Coweight(raw)) == v);
      }
    }
  }

  TEST_CASE("tag examples") {
    CHECK(tag(adjoint_model("A1", {7})) == Tag{7});
    CHECK(tag(adjoint_model("A2", {0, 0})) == Tag{0, 0});
    CHECK(tag(adjoint_model("A2", {1, 2})) == Tag{1, 2});
  }

  TEST_CASE("fundamental section degree examples") {
    const RootSystem a2 = rs_of("A2");
    const auto m = adjoint_model("A2", {1, 2});
    CHECK(fundamental_section_degrees(a2, m, WeylElement::identity(2)).degrees == IntVector{1, 2});
    CHECK(fundamental_section_degrees(a2, m, simple_reflection(a2, 1)).degrees == IntVector{-1, 3});
    const RootSystem a1 = rs_of("A1");
    CHECK(fundamental_section_degrees(a1, adjoint_model("A1", {5}), simple_reflection(a1, 1)).degrees ==
          IntVector{-5});
  }

  TEST_CASE("section count, antisymmetry and positivity criterion") {
    std::mt19937 gen(52);
    std::uniform_int_distribution<int> d(0, 4);
    for (const char* spec : {"A1", "A2", "A3", "B2", "G2", "B3", "C3", "A1+A2", "A4", "B4", "C4", "D4", "F4"}) {
      CAPTURE(spec);
      const RootSystem rs = rs_of(spec);
      const auto dg = parse_diagram(spec);
      const auto k = static_cast<std::size_t>(rs.rank());
      IntVector theta(k);
      for (auto& x : theta) x = 1 + d(gen);
      const FlagBundleModel m(IsogenyLattice::adjoint(dg), Coweight(theta));
      const auto sections = fundamental_sections(rs, m);
      CHECK(sections.size() == enumerate(rs).size());
      for (const auto& sd : sections)
        for (int t = 1; t <= rs.rank(); ++t) {
          const auto ti = static_cast<std::size_t>(t - 1);
          const auto other = fundamental_section_degrees(rs, m, times_simple(rs, sd.w, t));
          CHECK(other.degrees[ti] == -sd.degrees[ti]);
          CHECK((sd.degrees[ti] >= 0) == rs.is_positive_root(sd.w.image_of_simple(ti)));
        }
      const auto minimal = minimal_sections(rs, m);
      REQUIRE(minimal.size() == 1);
      CHECK(minimal.front().w.is_identity());
      CHECK(minimal.front().degrees == tag(m).values);
    }
  }

  TEST_CASE("minimality examples") {
    const RootSystem a1 = rs_of("A1");
    const auto m = adjoint_model("A1", {1});
    CHECK(is_minimal_section(fundamental_section_degrees(a1, m, WeylElement::identity(1))));
    CHECK_FALSE(is_minimal_section(fundamental_section_degrees(a1, m, simple_reflection(a1, 1))));
    const RootSystem b3 = rs_of("B3");
    CHECK(minimal_sections(b3, adjoint_model("B3", {0, 0, 0})).size() == 48);
  }

  TEST_CASE("degenerate theta: minimal sections form a coset of the stabiliser") {
    const RootSystem a3 = rs_of("A3");
    // theta vanishes on node 2: the stabiliser is {e, s_2}.
    const auto minimal = minimal_sections(a3, adjoint_model("A3", {1, 0, 2}));
    CHECK(minimal.size() == 2);
    const RootSystem b3 = rs_of("B3");
    // Vanishing on nodes 1 and 2 gives W(A2), six elements.
    CHECK(minimal_sections(b3, adjoint_model("B3", {0, 0, 3})).size() == 6);
  }

  TEST_CASE("isomorphism") {
    const auto a = adjoint_model("A1", {1});
    const auto b = adjoint_model("A1", {2});
    CHECK(isomorphic(a, a));
    CHECK_FALSE(isomorphic(a, b));
    CHECK(kind_of([&] { isomorphic(a, adjoint_model("A2", {1, 1})); }) == ErrorKind::DiagramMismatch);
    const FlagBundleModel sc(IsogenyLattice::simply_connected(parse_diagram("A1")), Coweight{2});
    CHECK(kind_of([&] { isomorphic(b, sc); }) == ErrorKind::LatticeMismatch);

    // Normalising theta and any w(theta) gives isomorphic models.
    const RootSystem rs = rs_of("B3");
    const auto dg = parse_diagram("B3");
    const Coweight theta{2, 0, 1};
    const FlagBundleModel base(IsogenyLattice::adjoint(dg), theta);
    for (const auto& w : enumerate(rs)) {
      const Coweight moved = act_on_coweight(rs, w, theta);
      const FlagBundleModel m(IsogenyLattice::adjoint(dg), normalize_to_dominant(rs, moved).first);
      CHECK(isomorphic(base, m));
      CHECK(isomorphic(m, base));
    }
  }

  TEST_CASE("relative canonical decomposition examples") {
    const RootSystem a3 = rs_of("A3");
    CHECK(rel_canonical_decomposition(a3, NodeSet{2}) == IntVector{2, 4, 2});
    CHECK(rel_canonical_decomposition(a3, NodeSet::all(3)) == IntVector{3, 4, 3});
    CHECK(rel_canonical_decomposition(rs_of("A2"), NodeSet{1}) == IntVector{2, 1});
  }

  TEST_CASE("dim G/P examples") {
    const RootSystem a3 = rs_of("A3");
    CHECK(dim_GP(a3, NodeSet{2}) == 4);
    CHECK(dim_GP(a3, NodeSet{}) == 0);
    CHECK(dim_GP(a3, NodeSet::all(3)) == 6);
  }

  TEST_CASE("degree identity examples") {
    const RootSystem a2 = rs_of("A2");
    CHECK(degree_identity_holds(a2, NodeSet{1}, Tag{1, 0}));
    CHECK(degree_identity_holds(a2, NodeSet{1}, Tag{0, 2}));
    CHECK_FALSE(degree_identity_holds(a2, NodeSet{1}, Tag{1, 1}));
    CHECK_FALSE(degree_identity_holds(a2, NodeSet{1}, Tag{0, 0}));
  }

  TEST_CASE("unsplit tag solutions examples") {
    CHECK(unsplit_tag_solutions(rs_of("A2"), NodeSet{1}) == std::vector<Tag>{Tag{1, 0}});
    CHECK(unsplit_tag_solutions(rs_of("A3"), NodeSet{2}) == std::vector<Tag>{Tag{0, 1, 0}});
    CHECK(unsplit_tag_solutions(rs_of("A2"), NodeSet{1, 2}).empty());
    CHECK(kind_of([] { unsplit_tag_solutions(rs_of("A1+A1"), NodeSet{1}); }) == ErrorKind::ComponentMissesI);
  }

  TEST_CASE("unsplit solutions agree with exhaustive search") {
    for (const char* spec : {"A2", "A3", "B2", "G2", "B3", "C3", "A1+A1", "A1+A2"}) {
      const RootSystem rs = rs_of(spec);
      for (const auto& i : subsets_in_canonical_order(rs.rank(), true)) {
        bool meets = true;
        for (const auto& comp : diagram_components(rs))
          meets = meets && std::any_of(comp.nodes().begin(), comp.nodes().end(),
                                       [&](int n) { return i.contains(n); });
        if (!meets) continue;
        std::set<IntVector> got;
        for (const auto& t : unsplit_tag_solutions(rs, i)) got.insert(t.values);
        CHECK(got == brute_unsplit(rs, i));
      }
    }
  }

  TEST_CASE("homogeneity inequality examples") {
    CHECK(homogeneity_inequality_2(rs_of("A3"), NodeSet{2}));
    CHECK(homogeneity_inequality_1(rs_of("A2"), NodeSet{1}));
    for (const auto& d : connected_diagrams(8))
      CHECK(homogeneity_inequality_1(RootSystem::generate(d), NodeSet::all(d.rank())));
    CHECK(kind_of([] { homogeneity_inequality_1(rs_of("A1+A1"), NodeSet{2}); }) == ErrorKind::ComponentMissesI);
  }

  TEST_CASE("restricted triviality examples") {
    CHECK(restricted_trivial(Tag{1, 0}, NodeSet{1}));
    CHECK_FALSE(restricted_trivial(Tag{1, 1}, NodeSet{1}));
    CHECK(restricted_trivial(Tag{0, 0, 0}, NodeSet{}));
  }

  TEST_CASE("diagram components from the Cartan matrix") {
    const auto comps = diagram_components(rs_of("A1+G2+A1"));
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == NodeSet{1});
    CHECK(comps[1] == NodeSet{2, 3});
    CHECK(comps[2] == NodeSet{4});
  }
}
