#include "quivernc/tors.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "quivernc/errors.hpp"

namespace quivernc {

namespace {

bool has(RootMask m, std::size_t i) { return (m >> i) & 1u; }
RootMask bit(std::size_t i) { return RootMask{1} << i; }

std::vector<std::size_t> members(RootMask m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

/// Trace criterion: X_x is a quotient of a sum of copies of objects in s.
bool generated_by(const RepCategory& cat, RootMask s, std::size_t x) {
  const Field f = Field::rationals();
  const Representation& target = cat.indec(x);
  const Quiver& q = cat.quiver();
  for (int v = 1; v <= q.vertex_count(); ++v) {
    const std::size_t d = target.dim_at(v);
    if (d == 0) continue;
    Matrix span(d, 0);
    for (auto i : members(s))
      for (const auto& phi : cat.hom_basis_of(i, x).elements) span = hstack(span, phi[static_cast<std::size_t>(v - 1)]);
    if (rank(f, span) != d) return false;
  }
  return true;
}

RootMask gen_mask(const RepCategory& cat, RootMask s) {
  RootMask out = 0;
  for (std::size_t x = 0; x < cat.size(); ++x)
    if (has(s, x) || (s != 0 && generated_by(cat, s, x))) out |= bit(x);
  return out;
}

bool torsion_mask(const RepCategory& cat, RootMask s) {
  const auto& o = cat.oracle();
  for (auto i : members(s)) {
    if ((o.quotient_summands[i] & ~s) != 0) return false;
    for (auto j : members(s))
      if ((o.extension_summands[i][j] & ~s) != 0) return false;
  }
  return true;
}

bool wide_mask(const RepCategory& cat, RootMask s) {
  const auto& o = cat.oracle();
  for (auto i : members(s))
    for (auto j : members(s)) {
      if (((o.kernel_summands[i][j] | o.cokernel_summands[i][j] | o.extension_summands[i][j]) & ~s) != 0) return false;
    }
  return true;
}

bool partial_tilting_mask(const RepCategory& cat, RootMask s) {
  for (auto i : members(s))
    for (auto j : members(s))
      if (cat.ext(i, j) != 0) return false;
  return true;
}

RootMask ext_projective_mask(const RepCategory& cat, RootMask t) {
  RootMask out = 0;
  for (auto i : members(t)) {
    bool ok = true;
    for (auto j : members(t))
      if (cat.ext(i, j) != 0) ok = false;
    if (ok) out |= bit(i);
  }
  return out;
}

void require_torsion(const RepCategory& cat, RootMask t) {
  if (!torsion_mask(cat, t)) throw DomainError("input is not a torsion class: " + from_mask(cat, t).to_string());
}

}  // namespace

IndecSet::IndecSet(std::vector<Root> roots) : roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end());
  roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
}

bool IndecSet::contains(const Root& r) const { return std::binary_search(roots_.begin(), roots_.end(), r); }

bool IndecSet::subset_of(const IndecSet& other) const {
  return std::includes(other.roots_.begin(), other.roots_.end(), roots_.begin(), roots_.end());
}

std::vector<int> IndecSet::support(std::size_t n) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& r : roots_) {
      if (r[v] != 0) {
        out.push_back(static_cast<int>(v) + 1);
        break;
      }
    }
  }
  return out;
}

bool operator<(const IndecSet& a, const IndecSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.roots_ < b.roots_;
}

std::string IndecSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (i) out += ',';
    out += roots_[i].to_string();
  }
  return out + "}";
}

IndecSet set_union(const IndecSet& a, const IndecSet& b) {
  std::vector<Root> out(a.roots());
  out.insert(out.end(), b.begin(), b.end());
  return IndecSet(std::move(out));
}

IndecSet set_intersection(const IndecSet& a, const IndecSet& b) {
  std::vector<Root> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IndecSet(std::move(out));
}

IndecSet set_difference(const IndecSet& a, const IndecSet& b) {
  std::vector<Root> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IndecSet(std::move(out));
}

RootMask to_mask(const RepCategory& cat, const IndecSet& s) {
  RootMask m = 0;
  for (const auto& r : s) m |= bit(cat.require_index(r));
  return m;
}

IndecSet from_mask(const RepCategory& cat, RootMask m) {
  std::vector<Root> out;
  for (auto i : members(m)) out.push_back(cat.roots()[i]);
  return IndecSet(std::move(out));
}

IndecSet all_indecs(const RepCategory& cat) { return IndecSet(cat.roots()); }

IndecSet gen(const RepCategory& cat, const IndecSet& s) {
  const RootMask sm = to_mask(cat, s);
  const RootMask out = gen_mask(cat, sm);
  if ((partial_tilting_mask(cat, sm) || wide_mask(cat, sm)) && !torsion_mask(cat, out)) {
    throw InvariantError("Gen of " + s.to_string() + " failed the torsion class oracle");
  }
  return from_mask(cat, out);
}

bool is_torsion_class(const RepCategory& cat, const IndecSet& s) { return torsion_mask(cat, to_mask(cat, s)); }

bool is_wide(const RepCategory& cat, const IndecSet& s) { return wide_mask(cat, to_mask(cat, s)); }

bool is_partial_tilting(const RepCategory& cat, const IndecSet& s) {
  return partial_tilting_mask(cat, to_mask(cat, s));
}

bool is_support_tilting(const RepCategory& cat, const IndecSet& c) {
  return is_partial_tilting(cat, c) && c.size() == c.support(cat.quiver().size()).size();
}

IndecSet ext_projectives(const RepCategory& cat, const IndecSet& t) {
  const RootMask tm = to_mask(cat, t);
  require_torsion(cat, tm);
  return from_mask(cat, ext_projective_mask(cat, tm));
}

IndecSet split_projectives(const RepCategory& cat, const IndecSet& t) {
  const RootMask tm = to_mask(cat, t);
  require_torsion(cat, tm);
  RootMask cur = ext_projective_mask(cat, tm);
  for (auto x : members(cur)) {
    const RootMask rest = cur & ~bit(x);
    if (has(gen_mask(cat, rest), x)) cur = rest;
  }
  return from_mask(cat, cur);
}

IndecSet a_of(const RepCategory& cat, const IndecSet& t) {
  const RootMask tm = to_mask(cat, t);
  const RootMask ep = to_mask(cat, ext_projectives(cat, t));
  const RootMask nonsplit = ep & ~to_mask(cat, split_projectives(cat, t));
  RootMask out = 0;
  for (auto x : members(tm)) {
    bool ok = true;
    for (auto p : members(nonsplit))
      if (cat.hom(p, x) != 0) ok = false;
    if (ok) out |= bit(x);
  }
  return from_mask(cat, out);
}

std::vector<IndecSet> enumerate_support_tilting(const RepCategory& cat) {
  const std::size_t n = cat.size();
  const std::size_t rank = cat.quiver().size();
  std::vector<IndecSet> out;
  std::vector<std::size_t> chosen;
  auto compatible = [&](std::size_t j) {
    for (auto i : chosen)
      if (cat.ext(i, j) != 0 || cat.ext(j, i) != 0) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t start) -> void {
    RootMask m = 0;
    for (auto i : chosen) m |= bit(i);
    const IndecSet c = from_mask(cat, m);
    if (c.size() == c.support(rank).size()) out.push_back(c);
    if (chosen.size() == rank) return;
    for (std::size_t j = start; j < n; ++j) {
      if (!compatible(j)) continue;
      chosen.push_back(j);
      self(self, j + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndecSet> enumerate_torsion_classes(const RepCategory& cat) {
  std::vector<IndecSet> out;
  for (const auto& c : enumerate_support_tilting(cat)) out.push_back(gen(cat, c));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndecSet> enumerate_wide_subcategories(const RepCategory& cat) {
  std::vector<IndecSet> out;
  for (const auto& t : enumerate_torsion_classes(cat)) out.push_back(a_of(cat, t));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Root> wide_simples(const RepCategory& cat, const IndecSet& a) {
  const RootMask am = to_mask(cat, a);
  const auto& o = cat.oracle();
  RootMask simples = 0;
  for (auto x : members(am)) {
    bool simple = true;
    for (auto sub : o.subobject_summands[x])
      if ((sub & ~am) == 0) simple = false;
    if (simple) simples |= bit(x);
  }
  std::vector<Root> order;
  RootMask remaining = simples;
  while (remaining) {
    bool placed = false;
    for (auto x : members(remaining)) {
      bool first = true;
      for (auto y : members(remaining))
        if (y != x && (cat.hom(y, x) != 0 || cat.ext(y, x) != 0)) first = false;
      if (first) {
        order.push_back(cat.roots()[x]);
        remaining &= ~bit(x);
        placed = true;
        break;
      }
    }
    if (!placed) throw DomainError("simples of " + a.to_string() + " admit no exceptional order");
  }
  return order;
}

IndecSet torsion_free_complement(const RepCategory& cat, const IndecSet& t) {
  const RootMask tm = to_mask(cat, t);
  require_torsion(cat, tm);
  RootMask out = 0;
  for (std::size_t x = 0; x < cat.size(); ++x) {
    bool ok = true;
    for (auto y : members(tm))
      if (cat.hom(y, x) != 0) ok = false;
    if (ok) out |= bit(x);
  }
  return from_mask(cat, out);
}

Representation torsion_subobject(const RepCategory& cat, const IndecSet& t, const Representation& m) {
  const RootMask tm = to_mask(cat, t);
  require_torsion(cat, tm);
  const auto& reps = cat.indecs(m.field());
  std::vector<std::pair<const Representation*, Morphism>> maps;
  for (auto i : members(tm)) {
    for (auto& phi : hom_basis(reps[i], m).elements) maps.emplace_back(&reps[i], std::move(phi));
  }
  return sub_representation(m, image_span(m, maps));
}

Report check_torsion_oracle(const RepCategory& cat) {
  Report r{"torsion-oracle", 0, {}};
  const std::size_t n = cat.size();
  if (n > 16) throw CapExceededError("subset scan limited to 16 roots");
  std::set<RootMask> torsion;
  for (const auto& t : enumerate_torsion_classes(cat)) torsion.insert(to_mask(cat, t));
  std::set<RootMask> wide;
  for (const auto& a : enumerate_wide_subcategories(cat)) wide.insert(to_mask(cat, a));
  auto right_perp = [&](RootMask s) {
    RootMask out = 0;
    for (std::size_t x = 0; x < n; ++x) {
      bool ok = true;
      for (auto y : members(s)) ok = ok && cat.hom(y, x) == 0;
      if (ok) out |= bit(x);
    }
    return out;
  };
  auto left_perp = [&](RootMask f) {
    RootMask out = 0;
    for (std::size_t x = 0; x < n; ++x) {
      bool ok = true;
      for (auto y : members(f)) ok = ok && cat.hom(x, y) == 0;
      if (ok) out |= bit(x);
    }
    return out;
  };
  for (RootMask s = 0; s < (RootMask{1} << n); ++s) {
    const bool oracle = torsion_mask(cat, s);
    const bool hom_side = left_perp(right_perp(s)) == s;
    const std::string tag = from_mask(cat, s).to_string();
    r.record(oracle == torsion.contains(s), "torsion oracle vs enumeration at " + tag);
    r.record(oracle == hom_side, "torsion oracle vs Hom characterization at " + tag);
    r.record(wide_mask(cat, s) == wide.contains(s), "wide oracle vs a_of images at " + tag);
  }
  return r;
}

}  // namespace quivernc
