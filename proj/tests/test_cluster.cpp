#include <doctest.h>

#include <set>

#include "quivernc/cluster.hpp"
#include "quivernc/errors.hpp"
#include "support.hpp"

using namespace quivernc;
using quivernc::testing::quiver_named;
using quivernc::testing::root;

namespace {

ClusterTilting ct(std::vector<CCIndec> s) { return ClusterTilting(std::move(s)); }

}  // namespace

TEST_CASE("cluster indecomposables") {
  const RepCategory a2(quiver_named("A2"));
  const auto all = cluster_indecs(a2);
  CHECK(all.size() == 5);
  CHECK(all.front().is_rep());
  CHECK(all.back() == CCIndec::shift(2));
  CHECK(CCIndec::shift(2).to_string() == "P2[1]");
  CHECK(CCIndec::rep(root("11")).to_string() == "11");
}

TEST_CASE("Ext-orthogonality in the cluster category") {
  const RepCategory a2(quiver_named("A2"));
  CHECK(cc_ext_orthogonal(a2, CCIndec::shift(1), CCIndec::shift(2)));
  CHECK_FALSE(cc_ext_orthogonal(a2, CCIndec::shift(1), CCIndec::rep(root("10"))));
  CHECK_FALSE(cc_ext_orthogonal(a2, CCIndec::rep(root("10")), CCIndec::rep(root("01"))));
  CHECK(cc_ext_orthogonal(a2, CCIndec::shift(1), CCIndec::rep(root("01"))));
  // Symmetric, and rep pairs are orthogonal exactly when Ext vanishes both ways.
  const RepCategory a3(quiver_named("A3"));
  for (const auto& x : cluster_indecs(a3))
    for (const auto& y : cluster_indecs(a3)) {
      CHECK(cc_ext_orthogonal(a3, x, y) == cc_ext_orthogonal(a3, y, x));
      if (x.is_rep() && y.is_rep()) {
        const auto i = a3.require_index(x.root);
        const auto j = a3.require_index(y.root);
        CHECK(cc_ext_orthogonal(a3, x, y) == (a3.ext(i, j) == 0 && a3.ext(j, i) == 0));
      }
      if (!x.is_rep() && y.is_rep())
        CHECK(cc_ext_orthogonal(a3, x, y) == (y.root[static_cast<std::size_t>(x.vertex - 1)] == 0));
    }
}

TEST_CASE("cluster tilting counts") {
  const RepCategory a1(quiver_named("A1"));
  const auto c1 = cluster_tilting_objects(a1);
  CHECK(c1 == std::vector<ClusterTilting>{ct({CCIndec::rep(root("1"))}), ct({CCIndec::shift(1)})});
  CHECK(cluster_tilting_objects(RepCategory(quiver_named("A2"))).size() == 5);
  CHECK(cluster_tilting_objects(RepCategory(quiver_named("A3"))).size() == 14);
  CHECK(cluster_tilting_objects(RepCategory(quiver_named("A4"))).size() == 42);
  CHECK(cluster_tilting_objects(RepCategory(quiver_named("D4"))).size() == 50);
}

TEST_CASE("completion and dropping shifts") {
  const RepCategory a2(quiver_named("A2"));
  CHECK(complete_support_tilting(a2, {}) == ct({CCIndec::shift(1), CCIndec::shift(2)}));
  CHECK(complete_support_tilting(a2, {root("01")}) == ct({CCIndec::rep(root("01")), CCIndec::shift(1)}));
  CHECK(complete_support_tilting(a2, {root("11"), root("01")}) ==
        ct({CCIndec::rep(root("11")), CCIndec::rep(root("01"))}));
  CHECK(drop_shifts(ct({CCIndec::rep(root("01")), CCIndec::shift(1)})) == IndecSet{root("01")});
}

TEST_CASE("mutation examples") {
  const RepCategory a2(quiver_named("A2"));
  const auto t = ct({CCIndec::rep(root("11")), CCIndec::rep(root("01"))});
  CHECK(mutate(a2, t, CCIndec::rep(root("01"))) == ct({CCIndec::rep(root("11")), CCIndec::rep(root("10"))}));
  CHECK(exchange_partner(a2, t, CCIndec::rep(root("01"))) == CCIndec::rep(root("10")));
  const auto u = ct({CCIndec::rep(root("01")), CCIndec::shift(1)});
  CHECK(mutate(a2, u, CCIndec::shift(1)) == ct({CCIndec::rep(root("01")), CCIndec::rep(root("11"))}));
  for (const auto& s : t.summands()) {
    const auto v = mutate(a2, t, s);
    CHECK(mutate(a2, v, exchange_partner(a2, t, s)) == t);
  }
  CHECK_THROWS(mutate(a2, t, CCIndec::shift(2)));
}

TEST_CASE("Gen of cluster tilting objects") {
  const RepCategory a2(quiver_named("A2"));
  CHECK(gen_of(a2, ct({CCIndec::shift(1), CCIndec::shift(2)})).empty());
  const auto t = ct({CCIndec::rep(root("11")), CCIndec::rep(root("01"))});
  CHECK(gen_of(a2, t) == IndecSet{root("11"), root("01")});
  CHECK(gen_leq(a2, t, ct({CCIndec::rep(root("11")), CCIndec::rep(root("10"))})));
  CHECK(is_split_in_gen(a2, t, CCIndec::rep(root("11"))));
  CHECK_FALSE(is_split_in_gen(a2, t, CCIndec::rep(root("01"))));
}

TEST_CASE("exchange alternative, mutation order and exchange graph") {
  for (const char* name : {"A2", "A3", "A4", "D4"}) {
    const RepCategory cat(quiver_named(name));
    for (const auto& r : {check_exchange_alternative(cat), check_mutation_order(cat), check_exchange_graph(cat)}) {
      CHECK_MESSAGE(r.passed(), name << " " << r.check);
      CHECK(r.instances > 0);
    }
  }
}

TEST_CASE("every cluster tilting object has n neighbours") {
  const RepCategory cat(quiver_named("A3"));
  const auto all = cluster_tilting_objects(cat);
  const std::set<ClusterTilting> pool(all.begin(), all.end());
  for (const auto& t : all) {
    CHECK(t.size() == 3);
    std::set<ClusterTilting> nbrs;
    for (const auto& x : t.summands()) {
      const auto v = mutate(cat, t, x);
      CHECK(pool.count(v) == 1);
      // Neighbours share all but one summand.
      std::size_t shared = 0;
      for (const auto& y : v.summands()) shared += t.contains(y) ? 1 : 0;
      CHECK(shared == 2);
      nbrs.insert(v);
    }
    CHECK(nbrs.size() == 3);
  }
}
