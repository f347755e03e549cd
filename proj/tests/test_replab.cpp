#include <doctest.h>

#include <algorithm>
#include <set>

#include "quivernc/errors.hpp"
#include "quivernc/replab.hpp"
#include "quivernc/weyl.hpp"
#include "support.hpp"

using namespace quivernc;
using quivernc::testing::quiver_named;
using quivernc::testing::root;

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Number of paths from a to b, by dynamic programming over a topological order.
std::int64_t path_count(const Quiver& q, int a, int b) {
  std::vector<std::int64_t> ways(q.size() + 1, 0);
  ways[static_cast<std::size_t>(a)] = 1;
  for (int v : q.topological_order())
    for (const auto& arr : q.arrows())
      if (arr.source == v) ways[static_cast<std::size_t>(arr.target)] += ways[static_cast<std::size_t>(v)];
  return ways[static_cast<std::size_t>(b)];
}

std::set<std::pair<std::string, std::string>> edge_names(const ARQuiver& ar) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [a, b] : ar.edges) out.emplace(ar.vertices[a].to_string(), ar.vertices[b].to_string());
  return out;
}

}  // namespace

TEST_CASE("simple, projective and injective representations") {
  const Quiver a2 = quiver_named("A2");
  const auto s2 = simple_rep(a2, 2);
  CHECK(s2.dims() == root("01"));
  CHECK(s2.map(0).empty());
  const Quiver a3 = quiver_named("A3");
  CHECK(projective_rep(a3, 2).dims() == root("111"));
  CHECK(injective_rep(a3, 2).dims() == root("010"));
  for (const char* name : {"A3", "A4", "D4"}) {
    const Quiver q = quiver_named(name);
    for (int v = 1; v <= q.vertex_count(); ++v) {
      const auto p = projective_rep(q, v).dims();
      const auto i = injective_rep(q, v).dims();
      for (int w = 1; w <= q.vertex_count(); ++w) {
        CHECK(p[static_cast<std::size_t>(w - 1)] == path_count(q, v, w));
        CHECK(i[static_cast<std::size_t>(w - 1)] == path_count(q, w, v));
      }
      CHECK(projective_dims(q)[static_cast<std::size_t>(v - 1)] == p);
      CHECK(injective_dims(q)[static_cast<std::size_t>(v - 1)] == i);
    }
  }
}

TEST_CASE("Hom and Ext examples") {
  const Quiver a2 = quiver_named("A2");
  CHECK(hom_dim(simple_rep(a2, 2), indecomposable(a2, root("11"))) == 0);
  CHECK(ext_dim(a2, simple_rep(a2, 2), simple_rep(a2, 1)) == 1);
  const Quiver a3 = quiver_named("A3");
  CHECK(hom_dim(indecomposable(a3, root("111")), indecomposable(a3, root("110"))) == 1);
  CHECK(ext_dim(a3, indecomposable(a3, root("011")), indecomposable(a3, root("010"))) == 0);
}

TEST_CASE("indecomposables are bricks without self extensions") {
  for (const char* name : {"A2", "A3", "A4", "D4"}) {
    const RepCategory cat(quiver_named(name));
    for (std::size_t i = 0; i < cat.size(); ++i) {
      CHECK(cat.indec(i).dims() == cat.roots()[i]);
      CHECK(cat.hom(i, i) == 1);
      CHECK(cat.ext(i, i) == 0);
      CHECK(hom_dim(cat.indec(i, Field::gf2()), cat.indec(i, Field::gf2())) == 1);
      const auto proj = projective_dims(cat.quiver());
      CHECK(cat.is_projective(i) == (std::find(proj.begin(), proj.end(), cat.roots()[i]) != proj.end()));
    }
  }
}

TEST_CASE("Hom and Ext agree with GF(2) enumeration and the Euler form") {
  for (const char* name : {"A2", "A3", "D4"}) {
    const RepCategory cat(quiver_named(name));
    const Quiver& q = cat.quiver();
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = 0; j < cat.size(); ++j) {
        const auto& x = cat.indec(i, Field::gf2());
        const auto& y = cat.indec(j, Field::gf2());
        const auto homs = all_morphisms(x, y);
        CHECK(homs.size() == ipow(2, cat.hom(i, j)));
        for (const auto& phi : homs) CHECK(is_morphism(x, y, phi));
        // Middle terms come from the first cohomology of the standard complex.
        CHECK(extension_middle_terms(x, y).size() == ipow(2, cat.ext(i, j)));
        CHECK(static_cast<std::int64_t>(cat.hom(i, j)) - static_cast<std::int64_t>(cat.ext(i, j)) ==
              euler_form(q, cat.roots()[i], cat.roots()[j]));
        if (cat.is_projective(i)) CHECK(cat.ext(i, j) == 0);
      }
  }
}

TEST_CASE("indecomposables of small roots") {
  const Quiver a2 = quiver_named("A2");
  const auto m = indecomposable(a2, root("11"));
  CHECK(m.map(0) == Matrix::identity(1));
  const Quiver a3 = quiver_named("A3");
  const auto m3 = indecomposable(a3, root("111"));
  CHECK(m3.map(0) == Matrix::identity(1));
  CHECK(m3.map(1) == Matrix::identity(1));
  CHECK(indecomposable(a3, root("010")) == simple_rep(a3, 2));
  CHECK_THROWS_AS(indecomposable(a3, root("101")), DomainError);
}

TEST_CASE("reflection functors") {
  const Quiver a2 = quiver_named("A2");
  CHECK(reflect(a2, 1, ReflectDirection::plus, projective_rep(a2, 1)).is_zero());
  const auto r = reflect(a2, 1, ReflectDirection::plus, indecomposable(a2, root("11")));
  CHECK(r.dims() == root("01"));
  CHECK(r.quiver() == a2.reflected_at(1));
  CHECK(reflect(a2, 1, ReflectDirection::plus, simple_rep(a2, 2)).dims() == root("11"));
  // Every non-simple-at-sink indecomposable goes to an indecomposable with the reflected root.
  for (const char* name : {"A3", "D4"}) {
    const Quiver q = quiver_named(name);
    const int sink = q.topological_order().back();
    const RepCategory target(q.reflected_at(sink));
    for (const auto& rt : positive_roots(q)) {
      const auto img = reflect(q, sink, ReflectDirection::plus, indecomposable(q, rt));
      if (rt == DimVector::unit(q.size(), sink)) {
        CHECK(img.is_zero());
        continue;
      }
      CHECK(img.dims() == simple_reflect(q, sink, rt));
      const auto mult = target.decompose(img);
      CHECK(std::count(mult.begin(), mult.end(), std::size_t{1}) == 1);
      const auto back = reflect(q.reflected_at(sink), sink, ReflectDirection::minus, img);
      CHECK(back.dims() == rt);
    }
  }
}

TEST_CASE("subrepresentation dimension vectors") {
  const Quiver a2 = quiver_named("A2");
  auto sorted = [](std::vector<DimVector> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(subrep_dimvectors(simple_rep(a2, 1, Field::gf2()))) == sorted({root("00"), root("10")}));
  CHECK(sorted(subrep_dimvectors(indecomposable(a2, root("11"), Field::gf2()))) ==
        sorted({root("00"), root("10"), root("11")}));
  const Quiver a3 = quiver_named("A3");
  CHECK(sorted(subrep_dimvectors(indecomposable(a3, root("111"), Field::gf2()))) ==
        sorted({root("000"), root("100"), root("001"), root("101"), root("111")}));
  CHECK_THROWS_AS(subrep_dimvectors(indecomposable(a3, root("111"))), DomainError);
}

TEST_CASE("subrepresentation dimension vectors do not depend on the finite field") {
  for (const char* name : {"A3", "A4", "D4"}) {
    const RepCategory cat(quiver_named(name));
    for (std::size_t i = 0; i < cat.size(); ++i) {
      auto a = subrep_dimvectors(cat.indec(i, Field::gf2()));
      auto b = subrep_dimvectors(cat.indec(i, Field::gf3()));
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
      CHECK(a == b);
    }
  }
}

TEST_CASE("quotients, kernels and decomposition") {
  const RepCategory cat(quiver_named("A3"));
  const Quiver& q = cat.quiver();
  const auto m = cat.indec(cat.require_index(root("111")), Field::gf2());
  int seen = 0;
  for_each_subrep(m, [&](const SubspaceBases& u) {
    const auto sub = sub_representation(m, u);
    if (sub.dims() != root("101")) return;
    ++seen;
    CHECK(decompose(cat, quotient_representation(m, u)) == std::vector<Root>{root("010")});
    CHECK(decompose(cat, sub) == std::vector<Root>{root("001"), root("100")});
  });
  CHECK(seen == 1);

  const auto s1 = simple_rep(q, 1);
  CHECK(decompose(cat, direct_sum(s1, s1)) == std::vector<Root>{root("100"), root("100")});

  const Quiver a2 = quiver_named("A2");
  const RepCategory cat2(a2);
  const auto ext = extension_middle_terms(simple_rep(a2, 2, Field::gf2()), simple_rep(a2, 1, Field::gf2()));
  REQUIRE(ext.size() == 2);
  std::set<std::vector<Root>> middles;
  for (const auto& e : ext) middles.insert(decompose(cat2, e));
  CHECK(middles == std::set<std::vector<Root>>{{root("01"), root("10")}, {root("11")}});

  // The map P2 -> S2 has kernel S1 and zero cokernel.
  const auto p2 = cat2.indec(cat2.require_index(root("11")));
  const auto s2 = cat2.indec(cat2.require_index(root("01")));
  const auto& basis = cat2.hom_basis_of(cat2.require_index(root("11")), cat2.require_index(root("01")));
  REQUIRE(basis.dim() == 1);
  CHECK(decompose(cat2, kernel(p2, s2, basis.elements[0])) == std::vector<Root>{root("10")});
  CHECK(cokernel(p2, s2, basis.elements[0]).is_zero());
}

TEST_CASE("decomposition matches endomorphism dimension") {
  const RepCategory cat(quiver_named("A3"));
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = 0; j < cat.size(); ++j) {
      const auto sum = direct_sum(cat.indec(i), cat.indec(j));
      const auto mult = cat.decompose(sum);
      std::size_t end = 0;
      for (std::size_t a = 0; a < cat.size(); ++a)
        for (std::size_t b = 0; b < cat.size(); ++b) end += mult[a] * mult[b] * cat.hom(a, b);
      CHECK(hom_dim(sum, sum) == end);
      CHECK(mult[i] + (i == j ? 0 : mult[j]) == 2);
    }
}

TEST_CASE("Auslander-Reiten translate") {
  const Quiver a2 = quiver_named("A2");
  CHECK(tau(a2, root("01")) == root("10"));
  for (const auto& p : projective_dims(a2)) CHECK_FALSE(tau(a2, p).has_value());
  const Quiver a3 = quiver_named("A3");
  CHECK(tau(a3, root("010")) == root("111"));
  for (const char* name : {"A3", "A4", "D4"}) {
    const Quiver q = quiver_named(name);
    for (const auto& r : positive_roots(q)) {
      const auto t = tau(q, r);
      if (t) CHECK(tau_inverse(q, *t) == r);
    }
  }
}

TEST_CASE("Auslander-Reiten quiver") {
  CHECK(ar_quiver(quiver_named("A1")).edges.empty());
  CHECK(edge_names(ar_quiver(quiver_named("A2"))) ==
        std::set<std::pair<std::string, std::string>>{{"10", "11"}, {"11", "01"}});
  CHECK(edge_names(ar_quiver(quiver_named("A3"))) == std::set<std::pair<std::string, std::string>>{
                                                         {"100", "111"},
                                                         {"001", "111"},
                                                         {"111", "011"},
                                                         {"111", "110"},
                                                         {"011", "010"},
                                                         {"110", "010"},
                                                     });
  // Meshes: dim tau X + dim X equals the sum over the middle of the mesh.
  for (const char* name : {"A3", "A4", "D4"}) {
    const Quiver q = quiver_named(name);
    const auto ar = ar_quiver(q);
    const RepCategory cat(q);
    for (std::size_t v = 0; v < ar.vertices.size(); ++v) {
      const auto t = tau(q, ar.vertices[v]);
      if (!t) continue;
      DimVector mid(q.size());
      for (auto p : ar.predecessors(v)) mid = mid + ar.vertices[p];
      CHECK(mid == *t + ar.vertices[v]);
    }
    // Arrows X -> Y exist only when Hom(X, Y) is nonzero.
    for (auto [a, b] : ar.edges) CHECK(cat.hom(cat.require_index(ar.vertices[a]), cat.require_index(ar.vertices[b])) > 0);
  }
}

TEST_CASE("irreducible maps equal rad/rad^2") {
  // dim rad(X,Y) - dim rad^2(X,Y) computed by composing through the other indecomposables.
  for (const char* name : {"A3", "D4"}) {
    const RepCategory cat(quiver_named(name));
    const auto ar = ar_quiver(cat.quiver());
    const std::size_t n = cat.size();
    const Field f = Field::rationals();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto& x = cat.indec(i);
        const auto& y = cat.indec(j);
        // Flatten morphisms into vectors and span the compositions through Z.
        auto flatten = [&](const Morphism& phi) {
          std::vector<Rational> v;
          for (const auto& m : phi) v.insert(v.end(), m.data().begin(), m.data().end());
          return v;
        };
        std::vector<std::vector<Rational>> rows;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          for (const auto& a : cat.hom_basis_of(i, k).elements)
            for (const auto& b : cat.hom_basis_of(k, j).elements) {
              Morphism c;
              for (std::size_t v = 0; v < a.size(); ++v) c.push_back(multiply(f, b[v], a[v]));
              rows.push_back(flatten(c));
            }
        }
        std::size_t width = 0;
        for (int v = 1; v <= cat.quiver().vertex_count(); ++v) width += x.dim_at(v) * y.dim_at(v);
        const std::size_t rad2 = rows.empty() ? 0 : rank(f, Matrix::from_rows(rows, width));
        std::size_t arrows = 0;
        for (auto [a, b] : ar.edges)
          if (ar.vertices[a] == cat.roots()[i] && ar.vertices[b] == cat.roots()[j]) ++arrows;
        CHECK(cat.hom(i, j) - rad2 == arrows);
      }
  }
}
