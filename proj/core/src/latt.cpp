#include "quivernc/latt.hpp"

#include <algorithm>
#include <set>

#include "quivernc/errors.hpp"

namespace quivernc {

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  const std::size_t n = labels_.size();
  if (leq_.size() != n) throw DomainError("not a poset: relation size mismatch");
  for (const auto& row : leq_)
    if (row.size() != n) throw DomainError("not a poset: relation size mismatch");
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw DomainError("not a poset: relation is not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a]) throw DomainError("not a poset: relation is not antisymmetric");
      if (!leq_[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (leq_[b][c] && !leq_[a][c]) throw DomainError("not a poset: relation is not transitive");
    }
  }
  join_.assign(n, std::vector<std::size_t>(n, none_));
  meet_.assign(n, std::vector<std::size_t>(n, none_));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      join_[a][b] = bound(a, b, true).value_or(none_);
      meet_[a][b] = bound(a, b, false).value_or(none_);
    }
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (less(a, c) && less(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

std::optional<std::size_t> FinitePoset::bound(std::size_t a, std::size_t b, bool upper) const {
  auto rel = [&](std::size_t x, std::size_t y) { return upper ? leq(x, y) : leq(y, x); };
  std::vector<std::size_t> cands;
  for (std::size_t c = 0; c < size(); ++c)
    if (rel(a, c) && rel(b, c)) cands.push_back(c);
  for (auto c : cands)
    if (std::all_of(cands.begin(), cands.end(), [&](std::size_t d) { return rel(c, d); })) return c;
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::join(std::size_t a, std::size_t b) const {
  const std::size_t j = join_[a][b];
  return j == none_ ? std::nullopt : std::optional<std::size_t>(j);
}

std::optional<std::size_t> FinitePoset::meet(std::size_t a, std::size_t b) const {
  const std::size_t m = meet_[a][b];
  return m == none_ ? std::nullopt : std::optional<std::size_t>(m);
}

std::optional<std::size_t> FinitePoset::bottom() const {
  for (std::size_t c = 0; c < size(); ++c) {
    bool ok = true;
    for (std::size_t d = 0; d < size() && ok; ++d) ok = leq(c, d);
    if (ok) return c;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::top() const {
  for (std::size_t c = 0; c < size(); ++c) {
    bool ok = true;
    for (std::size_t d = 0; d < size() && ok; ++d) ok = leq(d, c);
    if (ok) return c;
  }
  return std::nullopt;
}

bool is_left_modular_element(const FinitePoset& p, std::size_t x) {
  const std::size_t n = p.size();
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      if (!p.less(y, z)) continue;
      const auto yx = p.join(y, x);
      const auto xz = p.meet(x, z);
      if (!yx || !xz) return false;
      const auto lhs = p.meet(*yx, z);
      const auto rhs = p.join(y, *xz);
      if (!lhs || !rhs || *lhs != *rhs) return false;
    }
  return true;
}

LatticeReport lattice_analyze(const FinitePoset& p) {
  LatticeReport r;
  const std::size_t n = p.size();
  r.is_lattice = n > 0;
  for (std::size_t a = 0; a < n && r.is_lattice; ++a)
    for (std::size_t b = a + 1; b < n && r.is_lattice; ++b)
      if (!p.join(a, b) || !p.meet(a, b)) r.is_lattice = false;

  const auto covers = p.covers();
  std::vector<std::vector<std::size_t>> up(n);
  for (auto [a, b] : covers) up[a].push_back(b);

  // Longest path over covers, processing elements by number of predecessors.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  auto below = [&](std::size_t x) {
    std::size_t k = 0;
    for (std::size_t y = 0; y < n; ++y) k += p.less(y, x);
    return k;
  };
  std::vector<std::size_t> depth_key(n);
  for (std::size_t i = 0; i < n; ++i) depth_key[i] = below(i);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return depth_key[a] < depth_key[b]; });
  std::vector<std::size_t> dist(n, 0);
  for (auto a : order)
    for (auto b : up[a]) dist[b] = std::max(dist[b], dist[a] + 1);
  for (auto d : dist) r.longest_chain = std::max(r.longest_chain, d);

  if (!r.is_lattice) return r;

  const std::size_t bot = *p.bottom();
  const std::size_t top = *p.top();
  for (std::size_t x = 0; x < n; ++x) {
    bool ji = x != bot;
    bool mi = x != top;
    for (std::size_t a = 0; a < n && (ji || mi); ++a)
      for (std::size_t b = 0; b < n && (ji || mi); ++b) {
        if (ji && p.less(a, x) && p.less(b, x) && *p.join(a, b) == x) ji = false;
        if (mi && p.less(x, a) && p.less(x, b) && *p.meet(a, b) == x) mi = false;
      }
    if (ji) r.join_irreducibles.push_back(x);
    if (mi) r.meet_irreducibles.push_back(x);
  }

  std::vector<bool> lm(n, false);
  for (std::size_t x = 0; x < n; ++x)
    if (is_left_modular_element(p, x)) {
      lm[x] = true;
      r.left_modular_elements.push_back(x);
    }

  // Longest maximal chain through left modular elements only.
  std::vector<long> best(n, -1);
  std::vector<std::size_t> prev(n, n);
  if (lm[bot]) best[bot] = 0;
  for (auto a : order) {
    if (best[a] < 0) continue;
    for (auto b : up[a])
      if (lm[b] && best[a] + 1 > best[b]) {
        best[b] = best[a] + 1;
        prev[b] = a;
      }
  }
  if (best[top] >= 0) {
    std::vector<std::size_t> chain;
    for (std::size_t x = top; x != n; x = prev[x]) chain.push_back(x);
    std::reverse(chain.begin(), chain.end());
    r.left_modular_chain = std::move(chain);
  }

  r.is_extremal = r.join_irreducibles.size() == r.longest_chain && r.meet_irreducibles.size() == r.longest_chain;
  r.is_trim = r.is_extremal && r.left_modular_chain.has_value() &&
              r.left_modular_chain->size() == r.longest_chain + 1;
  return r;
}

FinitePoset cambrian_poset(const RepCategory& cat, std::vector<IndecSet>* classes) {
  const auto ts = enumerate_torsion_classes(cat);
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(ts.size(), std::vector<bool>(ts.size()));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    labels.push_back(ts[i].to_string());
    for (std::size_t j = 0; j < ts.size(); ++j) leq[i][j] = ts[i].subset_of(ts[j]);
  }
  if (classes) *classes = ts;
  return FinitePoset(std::move(labels), std::move(leq));
}

FinitePoset nc_poset(const Quiver& q) {
  const NCPoset nc = noncrossing_partitions(q);
  std::vector<std::string> labels;
  for (const auto& w : nc.elements) labels.push_back(describe(q, w));
  return FinitePoset(std::move(labels), nc.leq);
}

IndecSet torsion_meet(const RepCategory& cat, const IndecSet& t1, const IndecSet& t2) {
  IndecSet m = set_intersection(t1, t2);
  if (!is_torsion_class(cat, m)) throw InvariantError("intersection of torsion classes is not a torsion class");
  return m;
}

IndecSet torsion_join(const RepCategory& cat, const IndecSet& t1, const IndecSet& t2) {
  const auto& o = cat.oracle();
  RootMask cur = to_mask(cat, t1) | to_mask(cat, t2);
  for (;;) {
    RootMask next = cur;
    for (std::size_t i = 0; i < cat.size(); ++i) {
      if (!((cur >> i) & 1u)) continue;
      next |= o.quotient_summands[i];
      for (std::size_t j = 0; j < cat.size(); ++j)
        if ((cur >> j) & 1u) next |= o.extension_summands[i][j];
    }
    if (next == cur) break;
    cur = next;
  }
  return from_mask(cat, cur);
}

std::vector<IndecSet> principal_torsion_classes(const RepCategory& cat) {
  std::vector<IndecSet> out;
  for (const auto& r : cat.roots()) out.push_back(gen(cat, IndecSet{r}));
  return out;
}

std::vector<Root> ar_total_order(const RepCategory& cat) {
  const ARQuiver ar = ar_quiver(cat.quiver());
  const std::size_t n = ar.vertices.size();
  std::vector<std::size_t> indeg(n, 0);
  for (auto [a, b] : ar.edges) ++indeg[b];
  std::set<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.insert(v);
  std::vector<Root> out;
  while (!ready.empty()) {
    const std::size_t v = *ready.begin();
    ready.erase(ready.begin());
    out.push_back(ar.vertices[v]);
    for (auto [a, b] : ar.edges)
      if (a == v && --indeg[b] == 0) ready.insert(b);
  }
  if (out.size() != n) throw InvariantError("AR quiver has an oriented cycle");
  return out;
}

std::vector<IndecSet> splitting_chain(const RepCategory& cat) {
  const auto order = ar_total_order(cat);
  std::vector<IndecSet> out;
  for (std::size_t k = 0; k <= order.size(); ++k)
    out.emplace_back(std::vector<Root>(order.begin() + static_cast<std::ptrdiff_t>(k), order.end()));
  return out;
}

Report check_nc_lattice(const Quiver& q) {
  Report r{"nc-lattice", 0, {}};
  r.record(lattice_analyze(nc_poset(q)).is_lattice, "NC is not a lattice");
  return r;
}

Report check_cambrian_lattice(const RepCategory& cat) {
  Report r{"cambrian-lattice", 0, {}};
  std::vector<IndecSet> ts;
  const FinitePoset p = cambrian_poset(cat, &ts);
  const LatticeReport lr = lattice_analyze(p);
  const std::size_t roots = cat.size();
  r.record(lr.is_lattice, "not a lattice");
  r.record(lr.is_trim, "not trim");
  r.record(lr.join_irreducibles.size() == roots, "|JI| = " + std::to_string(lr.join_irreducibles.size()));
  r.record(lr.meet_irreducibles.size() == roots, "|MI| = " + std::to_string(lr.meet_irreducibles.size()));
  r.record(lr.longest_chain == roots, "longest chain " + std::to_string(lr.longest_chain));
  std::set<IndecSet> ji;
  for (auto i : lr.join_irreducibles) ji.insert(ts[i]);
  const auto principal = principal_torsion_classes(cat);
  r.record(ji == std::set<IndecSet>(principal.begin(), principal.end()) && ji.size() == principal.size(),
           "join irreducibles differ from principal torsion classes");
  if (!lr.is_lattice) return r;
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j) {
      r.record(ts[*p.meet(i, j)] == torsion_meet(cat, ts[i], ts[j]),
               "meet is not intersection: " + ts[i].to_string() + " " + ts[j].to_string());
      r.record(ts[*p.join(i, j)] == torsion_join(cat, ts[i], ts[j]),
               "join differs from closure: " + ts[i].to_string() + " " + ts[j].to_string());
    }
  return r;
}

Report check_splitting_chain(const RepCategory& cat) {
  Report r{"splitting-chain", 0, {}};
  std::vector<IndecSet> ts;
  const FinitePoset p = cambrian_poset(cat, &ts);
  const IndecSet all = all_indecs(cat);
  for (const auto& s : splitting_chain(cat)) {
    const auto it = std::find(ts.begin(), ts.end(), s);
    r.record(it != ts.end(), "not a torsion class: " + s.to_string());
    if (it == ts.end()) continue;
    r.record(set_union(s, torsion_free_complement(cat, s)) == all, "not splitting: " + s.to_string());
    r.record(is_left_modular_element(p, static_cast<std::size_t>(it - ts.begin())), "not left modular: " + s.to_string());
  }
  return r;
}

Report check_splitting_join_law(const RepCategory& cat) {
  Report r{"splitting-join-law", 0, {}};
  const auto ts = enumerate_torsion_classes(cat);
  for (const auto& s : splitting_chain(cat))
    for (const auto& t : ts)
      r.record(torsion_join(cat, t, s) == set_union(t, s), "T=" + t.to_string() + " S=" + s.to_string() +
                                                               " join=" + torsion_join(cat, t, s).to_string());
  return r;
}

}  // namespace quivernc
