#include <doctest.h>

#include <set>

#include "flagbundle/error.hpp"
#include "flagbundle/rootsys.hpp"
#include "oracles.hpp"
#include "table1.hpp"

using namespace flagbundle;

namespace {

IntVector table1_row(const DynkinDiagram& d) { return table1::row(d.components().at(0)); }

std::set<IntVector> as_set(const std::vector<Root>& roots) {
  std::set<IntVector> s;
  for (const auto& r : roots) s.insert(r.values);
  return s;
}

}  // namespace

TEST_SUITE("rootsys") {
  TEST_CASE("generate examples") {
    const RootSystem a2 = RootSystem::generate(parse_diagram("A2"));
    CHECK(as_set(a2.positive_roots()) == std::set<IntVector>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(RootSystem::generate(parse_diagram("B3")).num_positive() == 9);
    CHECK(RootSystem::generate(parse_diagram("E8")).num_positive() == 120);
  }

  TEST_CASE("closure equals the Weyl orbit of the simple roots") {
    for (const auto& d : connected_diagrams(8)) {
      CAPTURE(d.to_string());
      const RootSystem rs = RootSystem::generate(d);
      const IntMatrix c = cartan_matrix(d);
      CHECK(as_set(rs.positive_roots()) == oracle::orbit_positive_roots(c));
      std::set<IntVector> coroots;
      for (const auto& cv : rs.positive_coroots()) coroots.insert(cv.values);
      CHECK(coroots == oracle::orbit_positive_coroots(c));
      CHECK(rs.positive_roots().size() == rs.positive_coroots().size());
    }
  }

  TEST_CASE("roots and their coroots pair to 2 and give reflections") {
    for (const auto& d : connected_diagrams(8)) {
      CAPTURE(d.to_string());
      const RootSystem rs = RootSystem::generate(d);
      const IntMatrix c = cartan_matrix(d);
      const std::size_t k = c.rows();
      for (std::size_t n = 0; n < rs.num_positive(); ++n) {
        const Root& beta = rs.positive_roots()[n];
        const Coroot& cv = rs.positive_coroots()[n];
        Int pair = 0;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) pair += beta[i] * cv[j] * c(i, j);
        CHECK(pair == 2);
        // s_beta permutes the roots: alpha_i - <alpha_i, beta^vee> beta stays a root.
        for (std::size_t i = 0; i < k; ++i) {
          IntVector img(k, 0);
          img[i] = 1;
          const Int p = rs.pair_simple_root_with(i, cv);
          for (std::size_t j = 0; j < k; ++j) img[j] -= p * beta[j];
          CHECK(rs.is_root(Root(img)));
        }
      }
    }
  }

  TEST_CASE("simple pairings reproduce the Cartan matrix") {
    const RootSystem rs = RootSystem::generate(parse_diagram("F4"));
    const IntMatrix c = cartan_matrix(parse_diagram("F4"));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        IntVector e(4, 0);
        e[i] = 1;
        CHECK(rs.pair_with_simple_coroot(Root(e), j) == c(i, j));
        CHECK(rs.pair_simple_root_with(i, RootSystem::coroot_of_simple(4, j)) == c(i, j));
      }
  }

  TEST_CASE("simple roots are members and roots are sign-coherent") {
    for (const auto& d : connected_diagrams(6)) {
      const RootSystem rs = RootSystem::generate(d);
      for (int i = 0; i < d.rank(); ++i) {
        IntVector e(static_cast<std::size_t>(d.rank()), 0);
        e[static_cast<std::size_t>(i)] = 1;
        CHECK(rs.is_positive_root(Root(e)));
        for (auto& x : e) x = -x;
        CHECK(rs.is_root(Root(e)));
        CHECK_FALSE(rs.is_positive_root(Root(e)));
      }
      for (const auto& r : rs.positive_roots())
        for (Int x : r.values) CHECK(x >= 0);
    }
  }

  TEST_CASE("positive subsystem examples") {
    const RootSystem a3 = RootSystem::generate(parse_diagram("A3"));
    CHECK(as_set(positive_subsystem(a3, NodeSet{1, 3})) == std::set<IntVector>{{1, 0, 0}, {0, 0, 1}});
    CHECK(positive_subsystem(a3, NodeSet{}).empty());
    CHECK(positive_subsystem(a3, NodeSet::all(3)).size() == 6);
  }

  TEST_CASE("b coefficients examples") {
    CHECK(b_coefficients(parse_diagram("G2")) == IntVector{10, 6});
    CHECK(b_coefficients(parse_diagram("A3")) == IntVector{3, 4, 3});
    CHECK(b_coefficients(parse_diagram("E8")) == IntVector{92, 136, 182, 270, 220, 168, 114, 58});
    CHECK(b_coefficients(parse_diagram("A1+G2")) == IntVector{1, 10, 6});
  }

  TEST_CASE("b coefficients reproduce every row of Table 1") {
    for (const auto& d : connected_diagrams(8)) {
      CAPTURE(d.to_string());
      CHECK(b_coefficients(d) == table1_row(d));
    }
    // Non-canonical names outside the table's ranges still follow its patterns.
    CHECK(b_coefficients(parse_diagram("C2")) == IntVector{4, 3});
    CHECK(b_coefficients(parse_diagram("B2")) == IntVector{3, 4});
  }

  TEST_CASE("c coefficients") {
    CHECK(c_coefficients(parse_diagram("A3"), NodeSet{2}) == IntVector{1, 0, 1});
    for (const auto& d : connected_diagrams(5)) {
      const int k = d.rank();
      CHECK(c_coefficients(d, NodeSet::all(k)) == IntVector(static_cast<std::size_t>(k), 0));
      CHECK(c_coefficients(d, NodeSet{}) == b_coefficients(d));
    }
  }

  TEST_CASE("b dominates c and c vanishes on I") {
    for (const auto& d : connected_diagrams(8)) {
      const RootSystem rs = RootSystem::generate(d);
      const IntVector b = b_coefficients(rs);
      for (const auto& i : subsets_in_canonical_order(d.rank(), true)) {
        const IntVector c = c_coefficients(rs, i);
        for (std::size_t t = 0; t < b.size(); ++t) {
          CHECK(b[t] >= c[t]);
          if (i.contains(static_cast<int>(t) + 1)) CHECK(c[t] == 0);
        }
      }
    }
  }

  TEST_CASE("pairing examples") {
    CHECK(pairing(Weight{1, 1}, Coroot{1, 1}) == 2);
    CHECK(pairing(rho(3), RootSystem::coroot_of_simple(3, 1)) == 1);
    CHECK(pairing(Weight{2, 1}, Coroot{1, 1}) == 3);
    CHECK_THROWS_AS(pairing(Weight{1}, Coroot{1, 1}), Error);
  }

  TEST_CASE("highest root") {
    CHECK(highest_root(parse_diagram("A2")) == Root{1, 1});
    CHECK(highest_root(parse_diagram("G2")) == Root{3, 2});
    CHECK(highest_root(parse_diagram("E8")) == Root{2, 3, 4, 6, 5, 4, 3, 2});
    try {
      highest_root(parse_diagram("A1+A1"));
      FAIL("expected not-connected");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotConnected);
    }
    for (const auto& d : connected_diagrams(8)) {
      const Root top = highest_root(d);
      for (Int x : top.values) CHECK(x >= 1);
    }
  }

  TEST_CASE("rho") { CHECK(rho(3) == Weight{1, 1, 1}); }
}
