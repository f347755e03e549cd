#include "quivernc/cluster.hpp"

#include <algorithm>
#include <set>

#include "quivernc/errors.hpp"

namespace quivernc {

std::string CCIndec::to_string() const {
  if (is_rep()) return root.to_string();
  return "P" + std::to_string(vertex) + "[1]";
}

ClusterTilting::ClusterTilting(std::vector<CCIndec> summands) : summands_(std::move(summands)) {
  std::sort(summands_.begin(), summands_.end());
  summands_.erase(std::unique(summands_.begin(), summands_.end()), summands_.end());
}

bool ClusterTilting::contains(const CCIndec& x) const {
  return std::binary_search(summands_.begin(), summands_.end(), x);
}

IndecSet ClusterTilting::rep_part() const {
  std::vector<Root> out;
  for (const auto& s : summands_)
    if (s.is_rep()) out.push_back(s.root);
  return IndecSet(std::move(out));
}

std::string ClusterTilting::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    if (i) out += ',';
    out += summands_[i].to_string();
  }
  return out + "}";
}

std::vector<CCIndec> cluster_indecs(const RepCategory& cat) {
  std::vector<CCIndec> out;
  for (const auto& r : cat.roots()) out.push_back(CCIndec::rep(r));
  for (int v = 1; v <= cat.quiver().vertex_count(); ++v) out.push_back(CCIndec::shift(v));
  return out;
}

bool cc_ext_orthogonal(const RepCategory& cat, const CCIndec& x, const CCIndec& y) {
  if (!x.is_rep() && !y.is_rep()) return true;
  if (x.is_rep() && y.is_rep()) {
    const auto i = cat.require_index(x.root);
    const auto j = cat.require_index(y.root);
    return cat.ext(i, j) == 0 && cat.ext(j, i) == 0;
  }
  const CCIndec& r = x.is_rep() ? x : y;
  const CCIndec& s = x.is_rep() ? y : x;
  cat.require_index(r.root);
  if (!cat.quiver().has_vertex(s.vertex)) throw DomainError("unknown vertex " + std::to_string(s.vertex));
  // Hom(P_v, M) is the space M_v.
  return r.root[static_cast<std::size_t>(s.vertex - 1)] == 0;
}

std::vector<ClusterTilting> cluster_tilting_objects(const RepCategory& cat) {
  const auto all = cluster_indecs(cat);
  const std::size_t n = cat.quiver().size();
  std::vector<std::vector<bool>> ok(all.size(), std::vector<bool>(all.size()));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) ok[i][j] = cc_ext_orthogonal(cat, all[i], all[j]);

  std::vector<ClusterTilting> out;
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() == n) {
      for (std::size_t k = 0; k < all.size(); ++k) {
        if (std::find(chosen.begin(), chosen.end(), k) != chosen.end()) continue;
        if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return ok[c][k]; })) {
          throw InvariantError("orthogonal set of size n is not maximal");
        }
      }
      std::vector<CCIndec> s;
      for (auto c : chosen) s.push_back(all[c]);
      out.emplace_back(std::move(s));
      return;
    }
    for (std::size_t j = start; j < all.size(); ++j) {
      if (!ok[j][j]) continue;
      if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return ok[c][j]; })) continue;
      chosen.push_back(j);
      self(self, j + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

ClusterTilting complete_support_tilting(const RepCategory& cat, const IndecSet& c) {
  if (!is_support_tilting(cat, c)) throw DomainError("not support tilting: " + c.to_string());
  std::vector<CCIndec> s;
  for (const auto& r : c) s.push_back(CCIndec::rep(r));
  const auto supp = c.support(cat.quiver().size());
  for (int v = 1; v <= cat.quiver().vertex_count(); ++v)
    if (!std::binary_search(supp.begin(), supp.end(), v)) s.push_back(CCIndec::shift(v));
  return ClusterTilting(std::move(s));
}

IndecSet drop_shifts(const ClusterTilting& t) { return t.rep_part(); }

CCIndec exchange_partner(const RepCategory& cat, const ClusterTilting& t, const CCIndec& x) {
  if (!t.contains(x)) throw DomainError(x.to_string() + " is not a summand of " + t.to_string());
  std::vector<CCIndec> found;
  for (const auto& y : cluster_indecs(cat)) {
    if (t.contains(y)) continue;
    bool ok = true;
    for (const auto& s : t.summands())
      if (!(s == x) && !cc_ext_orthogonal(cat, s, y)) ok = false;
    if (ok) found.push_back(y);
  }
  if (found.size() != 1) {
    throw InvariantError("almost tilting object " + t.to_string() + " minus " + x.to_string() + " has " +
                         std::to_string(found.size() + 1) + " complements");
  }
  return found.front();
}

ClusterTilting mutate(const RepCategory& cat, const ClusterTilting& t, const CCIndec& x) {
  const CCIndec y = exchange_partner(cat, t, x);
  std::vector<CCIndec> s;
  for (const auto& z : t.summands())
    if (!(z == x)) s.push_back(z);
  s.push_back(y);
  return ClusterTilting(std::move(s));
}

IndecSet gen_of(const RepCategory& cat, const ClusterTilting& t) { return gen(cat, t.rep_part()); }

bool gen_leq(const RepCategory& cat, const ClusterTilting& t, const ClusterTilting& v) {
  return gen_of(cat, t).subset_of(gen_of(cat, v));
}

bool is_split_in_gen(const RepCategory& cat, const ClusterTilting& t, const CCIndec& x) {
  if (!x.is_rep()) return false;
  return split_projectives(cat, gen_of(cat, t)).contains(x.root);
}

Report check_exchange_alternative(const RepCategory& cat) {
  Report r{"exchange-alternative", 0, {}};
  for (const auto& t : cluster_tilting_objects(cat)) {
    for (const auto& m : t.summands()) {
      const ClusterTilting v = mutate(cat, t, m);
      const CCIndec mstar = exchange_partner(cat, t, m);
      const bool a = is_split_in_gen(cat, t, m);
      const bool b = is_split_in_gen(cat, v, mstar);
      r.record(a != b, t.to_string() + " at " + m.to_string());
    }
  }
  return r;
}

Report check_mutation_order(const RepCategory& cat) {
  Report r{"mutation-order", 0, {}};
  for (const auto& t : cluster_tilting_objects(cat)) {
    const IndecSet gt = gen_of(cat, t);
    for (const auto& x : t.summands()) {
      const IndecSet gv = gen_of(cat, mutate(cat, t, x));
      const bool split = is_split_in_gen(cat, t, x);
      const bool ok = split ? (gv.subset_of(gt) && !(gv == gt)) : (gt.subset_of(gv) && !(gv == gt));
      r.record(ok, t.to_string() + " at " + x.to_string());
    }
  }
  return r;
}

Report check_exchange_graph(const RepCategory& cat) {
  Report r{"exchange-graph", 0, {}};
  const auto all = cluster_tilting_objects(cat);
  const std::set<ClusterTilting> known(all.begin(), all.end());
  for (const auto& t : all) {
    std::set<ClusterTilting> neighbours;
    bool ok = t.size() == cat.quiver().size();
    for (const auto& x : t.summands()) {
      const ClusterTilting v = mutate(cat, t, x);
      const CCIndec y = exchange_partner(cat, t, x);
      ok = ok && known.contains(v) && mutate(cat, v, y) == t;
      neighbours.insert(v);
    }
    ok = ok && neighbours.size() == cat.quiver().size();
    r.record(ok, t.to_string());
  }
  return r;
}

}  // namespace quivernc
