#include <doctest.h>

#include <algorithm>
#include <set>

#include "quivernc/errors.hpp"
#include "quivernc/latt.hpp"
#include "support.hpp"

using namespace quivernc;
using quivernc::testing::quiver_named;
using quivernc::testing::root;

namespace {

// Subsets of {0,1} ordered by inclusion.
FinitePoset boolean_square() {
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) leq[a][b] = (a & b) == a;
  return FinitePoset({"{}", "{0}", "{1}", "{0,1}"}, leq);
}

// bottom < a < b < top and bottom < c < top.
FinitePoset pentagon() {
  std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
  const std::vector<std::pair<int, int>> rel{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}, {0, 2}, {0, 4}, {1, 4}};
  for (int i = 0; i < 5; ++i) leq[i][i] = true;
  for (auto [a, b] : rel) leq[a][b] = true;
  return FinitePoset({"0", "a", "b", "c", "1"}, leq);
}

// The diamond M3: three atoms, not distributive, not trim.
FinitePoset diamond() {
  std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
  for (int i = 0; i < 5; ++i) {
    leq[i][i] = true;
    leq[0][i] = true;
    leq[i][4] = true;
  }
  return FinitePoset({"0", "a", "b", "c", "1"}, leq);
}

std::set<IndecSet> as_set(const std::vector<IndecSet>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("poset validation") {
  std::vector<std::vector<bool>> not_reflexive{{false, true}, {false, true}};
  CHECK_THROWS_AS(FinitePoset({"a", "b"}, not_reflexive), DomainError);
  std::vector<std::vector<bool>> not_antisymmetric{{true, true}, {true, true}};
  CHECK_THROWS_AS(FinitePoset({"a", "b"}, not_antisymmetric), DomainError);
  std::vector<std::vector<bool>> not_transitive{{true, true, false}, {false, true, true}, {false, false, true}};
  CHECK_THROWS_AS(FinitePoset({"a", "b", "c"}, not_transitive), DomainError);
}

TEST_CASE("Boolean square") {
  const auto p = boolean_square();
  CHECK(p.join(1, 2) == 3);
  CHECK(p.meet(1, 2) == 0);
  CHECK(p.bottom() == 0);
  CHECK(p.top() == 3);
  CHECK(p.covers().size() == 4);
  const auto r = lattice_analyze(p);
  CHECK(r.is_lattice);
  CHECK(r.join_irreducibles == std::vector<std::size_t>{1, 2});
  CHECK(r.meet_irreducibles == std::vector<std::size_t>{1, 2});
  CHECK(r.longest_chain == 2);
  CHECK(r.is_extremal);
  CHECK(r.is_trim);
  CHECK(r.left_modular_elements.size() == 4);
}

TEST_CASE("pentagon and diamond") {
  const auto r5 = lattice_analyze(pentagon());
  CHECK(r5.is_lattice);
  CHECK(r5.longest_chain == 3);
  CHECK(r5.join_irreducibles.size() == 3);
  CHECK(r5.is_extremal);
  CHECK(r5.is_trim);
  // c is not left modular: (a v c) ^ b = b but a v (c ^ b) = a.
  CHECK_FALSE(is_left_modular_element(pentagon(), 3));
  CHECK(is_left_modular_element(pentagon(), 1));
  const auto r3 = lattice_analyze(diamond());
  CHECK(r3.is_lattice);
  CHECK(r3.join_irreducibles.size() == 3);
  CHECK(r3.longest_chain == 2);
  CHECK_FALSE(r3.is_extremal);
  CHECK_FALSE(r3.is_trim);
}

TEST_CASE("a poset with two maximal elements is not a lattice") {
  std::vector<std::vector<bool>> leq{{true, true, true}, {false, true, false}, {false, false, true}};
  const FinitePoset p({"0", "a", "b"}, leq);
  CHECK_FALSE(p.join(1, 2).has_value());
  CHECK_FALSE(p.top().has_value());
  CHECK_FALSE(lattice_analyze(p).is_lattice);
}

TEST_CASE("noncrossing partition lattices") {
  for (const char* name : {"A2", "A3", "A4", "D4"}) {
    const Quiver q = quiver_named(name);
    const auto p = nc_poset(q);
    CHECK(lattice_analyze(p).is_lattice);
    CHECK(check_nc_lattice(q).passed());
  }
  const auto r = lattice_analyze(nc_poset(quiver_named("A2")));
  CHECK(r.longest_chain == 2);
  CHECK(r.join_irreducibles.size() == 3);
}

TEST_CASE("Cambrian lattice of A2") {
  const RepCategory cat(quiver_named("A2"));
  std::vector<IndecSet> classes;
  const auto p = cambrian_poset(cat, &classes);
  CHECK(classes.size() == 5);
  const auto r = lattice_analyze(p);
  CHECK(r.is_lattice);
  CHECK(r.longest_chain == 3);
  CHECK(r.is_trim);
  std::set<IndecSet> ji;
  for (auto i : r.join_irreducibles) ji.insert(classes[i]);
  CHECK(ji == std::set<IndecSet>{gen(cat, {root("10")}), gen(cat, {root("01")}), gen(cat, {root("11")})});
  CHECK(ji == as_set(principal_torsion_classes(cat)));
}

TEST_CASE("Cambrian lattices are trim") {
  struct Case {
    const char* name;
    std::size_t roots;
  };
  for (const auto& c : {Case{"A3", 6}, Case{"A4", 10}, Case{"D4", 12}}) {
    const RepCategory cat(quiver_named(c.name));
    std::vector<IndecSet> classes;
    const auto r = lattice_analyze(cambrian_poset(cat, &classes));
    CHECK(r.is_lattice);
    CHECK(r.is_trim);
    CHECK(r.join_irreducibles.size() == c.roots);
    CHECK(r.meet_irreducibles.size() == c.roots);
    CHECK(r.longest_chain == c.roots);
    std::set<IndecSet> ji;
    for (auto i : r.join_irreducibles) ji.insert(classes[i]);
    CHECK(ji == as_set(principal_torsion_classes(cat)));
    CHECK(check_cambrian_lattice(cat).passed());
  }
}

TEST_CASE("meets and joins of torsion classes") {
  const RepCategory a2(quiver_named("A2"));
  CHECK(torsion_join(a2, {root("10")}, {root("01")}) == all_indecs(a2));
  CHECK(torsion_meet(a2, {root("01"), root("11")}, all_indecs(a2)) == IndecSet{root("01"), root("11")});
  const RepCategory a3(quiver_named("A3"));
  const auto tors = enumerate_torsion_classes(a3);
  for (const auto& t : tors)
    for (const auto& u : tors) {
      const auto j = torsion_join(a3, t, u);
      const auto m = torsion_meet(a3, t, u);
      CHECK(is_torsion_class(a3, j));
      CHECK(m == set_intersection(t, u));
      // Least upper bound among all torsion classes.
      for (const auto& v : tors)
        if (t.subset_of(v) && u.subset_of(v)) CHECK(j.subset_of(v));
    }
}

TEST_CASE("AR order and splitting chain") {
  const RepCategory a3(quiver_named("A3"));
  const auto order = ar_total_order(a3);
  CHECK(order == std::vector<Root>{root("001"), root("100"), root("111"), root("011"), root("110"), root("010")});
  const auto chain = splitting_chain(a3);
  REQUIRE(chain.size() == 7);
  CHECK(chain.front() == all_indecs(a3));
  CHECK(chain.back().empty());
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    CHECK(chain[k + 1].subset_of(chain[k]));
    CHECK(chain[k].size() == 6 - k);
  }
  for (const char* name : {"A2", "A3", "A4", "D4"}) CHECK(check_splitting_chain(RepCategory(quiver_named(name))).passed());
}

TEST_CASE("the splitting class join law fails") {
  // {10} v {01} contains the extension 11, so it is not the union.
  const RepCategory a2(quiver_named("A2"));
  const IndecSet s{root("01")};
  const auto chain = splitting_chain(a2);
  REQUIRE(std::find(chain.begin(), chain.end(), s) != chain.end());
  CHECK(torsion_join(a2, {root("10")}, s) != set_union(IndecSet{root("10")}, s));
  CHECK_FALSE(check_splitting_join_law(a2).passed());
}

TEST_CASE("principal torsion classes") {
  const RepCategory a3(quiver_named("A3"));
  const auto p = principal_torsion_classes(a3);
  REQUIRE(p.size() == 6);
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i] == gen(a3, {a3.roots()[i]}));
}
