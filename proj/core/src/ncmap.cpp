#include "quivernc/ncmap.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "quivernc/errors.hpp"

namespace quivernc {

namespace {

std::vector<int> drop_front(std::vector<int> w) {
  w.erase(w.begin());
  return w;
}

std::vector<int> rotate_front(std::vector<int> w) {
  std::rotate(w.begin(), w.begin() + 1, w.end());
  return w;
}

bool is_cover(const Quiver& q, const GroupElement& w, const GroupElement& s) {
  const auto covers = cover_reflections(q, w);
  return std::find(covers.begin(), covers.end(), s) != covers.end();
}

Root positive(const Root& r) { return r.is_nonpositive() ? -r : r; }

std::string seq_string(const ExceptionalSequence& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += seq[i].to_string();
  }
  return out + ")";
}

}  // namespace

GroupElement cox_of_wide(const RepCategory& cat, const IndecSet& a) {
  return reflection_product(cat.quiver(), wide_simples(cat, a));
}

GroupElement nc_of_torsion(const RepCategory& cat, const IndecSet& t) { return cox_of_wide(cat, a_of(cat, t)); }

GroupElement sortable_of_torsion(const RepCategory& cat, const IndecSet& t) {
  const Quiver& q = cat.quiver();
  GroupElement w = GroupElement::identity(q.size());
  // I(ws) = I(w) + {w(e_s)} whenever w(e_s) is positive.
  for (std::size_t step = 0; step < t.size(); ++step) {
    bool grown = false;
    for (int s = 1; s <= q.vertex_count() && !grown; ++s) {
      const Root r = w.apply(DimVector::unit(q.size(), s));
      if (r.is_nonnegative() && t.contains(r)) {
        w = w * simple_reflection(q, s);
        grown = true;
      }
    }
    if (!grown) break;
  }
  if (IndecSet(inversion_set(q, w)) != t) throw DomainError("no element has inversion set " + t.to_string());
  return w;
}

IndecSet torsion_of_sortable(const RepCategory& cat, const GroupElement& w) {
  IndecSet t(inversion_set(cat.quiver(), w));
  if (!is_torsion_class(cat, t)) throw DomainError("inversion set " + t.to_string() + " is not a torsion class");
  return t;
}

std::vector<GroupElement> sortable_elements(const RepCategory& cat) {
  const Quiver& q = cat.quiver();
  const auto c = coxeter_element_word(q);
  std::vector<GroupElement> out;
  const CoxeterGroup group(q);
  for (const auto& w : group.elements())
    if (is_c_sortable(q, w, c)) out.push_back(w);
  return out;
}

GroupElement reading_nc(const Quiver& q, const GroupElement& w, const std::vector<int>& c_word) {
  if (w.is_identity()) return w;
  if (c_word.empty()) throw DomainError("element is not sortable for the given word");
  const int v = c_word.front();
  const GroupElement s = simple_reflection(q, v);
  const GroupElement sw = s * w;
  if (length_S(q, sw) > length_S(q, w)) return reading_nc(q, w, drop_front(c_word));
  const GroupElement inner = reading_nc(q, sw, rotate_front(c_word));
  if (is_cover(q, w, s)) return inner * s;
  return s * inner * s;
}

IndecSet reading_cl(const Quiver& q, const GroupElement& w, const std::vector<int>& c_word) {
  if (w.is_identity()) return {};
  if (c_word.empty()) throw DomainError("element is not sortable for the given word");
  const int v = c_word.front();
  const GroupElement sw = simple_reflection(q, v) * w;
  if (length_S(q, sw) > length_S(q, w)) return reading_cl(q, w, drop_front(c_word));
  const IndecSet inner = reading_cl(q.reflected_at(v), sw, rotate_front(c_word));
  const Root ev = DimVector::unit(q.size(), v);
  std::vector<Root> out;
  for (const auto& r : inner)
    if (r != ev) out.push_back(simple_reflect(q, v, r));
  const auto supp = inner.support(q.size());
  if (!std::binary_search(supp.begin(), supp.end(), v)) out.push_back(ev);
  return IndecSet(std::move(out));
}

bool is_exceptional_sequence(const RepCategory& cat, const ExceptionalSequence& seq) {
  std::vector<std::size_t> idx;
  for (const auto& r : seq) {
    const auto i = cat.index_of(r);
    if (!i) return false;
    if (cat.ext(*i, *i) != 0) return false;
    idx.push_back(*i);
  }
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (cat.hom(idx[j], idx[i]) != 0 || cat.ext(idx[j], idx[i]) != 0) return false;
  return true;
}

GroupElement reflection_product(const Quiver& q, const ExceptionalSequence& seq) {
  GroupElement g = GroupElement::identity(q.size());
  for (const auto& r : seq) g = g * reflection(q, r);
  return g;
}

ExceptionalSequence braid_act(const RepCategory& cat, std::size_t i, const ExceptionalSequence& seq,
                              BraidDirection dir) {
  if (i < 1 || i >= seq.size()) throw DomainError("braid position " + std::to_string(i) + " out of range");
  const Quiver& q = cat.quiver();
  ExceptionalSequence out = seq;
  const Root& x = seq[i - 1];
  const Root& y = seq[i];
  if (dir == BraidDirection::forward) {
    out[i - 1] = y;
    out[i] = positive(root_reflect(q, y, x));
  } else {
    out[i - 1] = positive(root_reflect(q, x, y));
    out[i] = x;
  }
  if (!is_exceptional_sequence(cat, out)) throw InvariantError("braid move left the exceptional sequences: " + seq_string(out));
  return out;
}

std::vector<ExceptionalSequence> complete_exceptional_sequences(const RepCategory& cat) {
  const std::size_t n = cat.quiver().size();
  if (n > 3) throw CapExceededError("exceptional sequence enumeration limited to rank 3");
  std::vector<ExceptionalSequence> out;
  ExceptionalSequence cur;
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (const auto& r : cat.roots()) {
      cur.push_back(r);
      if (is_exceptional_sequence(cat, cur)) self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExceptionalSequence> braid_orbit(const RepCategory& cat, const ExceptionalSequence& seq) {
  std::set<ExceptionalSequence> seen{seq};
  std::deque<ExceptionalSequence> queue{seq};
  while (!queue.empty()) {
    const ExceptionalSequence cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 1; i < cur.size(); ++i) {
      for (auto dir : {BraidDirection::forward, BraidDirection::inverse}) {
        ExceptionalSequence next = braid_act(cat, i, cur, dir);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<CCIndec> upper_indecs(const RepCategory& cat, const ClusterTilting& t) {
  const IndecSet gt = gen_of(cat, t);
  std::vector<CCIndec> out;
  for (const auto& x : t.summands()) {
    const IndecSet gv = gen_of(cat, mutate(cat, t, x));
    if (gv.subset_of(gt) && gv != gt) out.push_back(x);
  }
  return out;
}

Report rs_check(const RepCategory& cat, const ClusterTilting& t) {
  Report r{"rs-fixed-space", 0, {}};
  const Quiver& q = cat.quiver();
  const Field f = Field::rationals();
  const std::size_t n = q.size();
  const Matrix fix = fixed_space(q, nc_of_torsion(cat, gen_of(cat, t)));
  Matrix rows(0, n);
  for (const auto& x : upper_indecs(cat, t)) {
    if (!x.is_rep()) continue;
    Matrix row(1, n);
    for (int v = 1; v <= q.vertex_count(); ++v)
      row(0, static_cast<std::size_t>(v - 1)) = Rational(symmetrized_form(q, x.root, DimVector::unit(n, v)));
    rows = vstack(rows, row);
  }
  const Matrix perp = rows.rows() == 0 ? Matrix::identity(n) : nullspace(f, rows);
  const std::size_t rf = rank(f, fix);
  const bool same = rf == rank(f, perp) && rank(f, hstack(fix, perp)) == rf;
  r.record(same, t.to_string() + " fixed dim " + std::to_string(fix.cols()) + " perpendicular dim " +
                     std::to_string(perp.cols()));
  return r;
}

Report cover_criterion_check(const RepCategory& cat, const IndecSet& t, const std::vector<int>& c_word) {
  Report r{"cover-criterion", 0, {}};
  const Quiver& q = cat.quiver();
  if (c_word.empty()) return r;
  const int v = c_word.front();
  const GroupElement w = sortable_of_torsion(cat, t);
  const GroupElement s = simple_reflection(q, v);
  if (length_S(q, s * w) > length_S(q, w)) return r;
  const bool cover = is_cover(q, w, s);
  const bool in_a = a_of(cat, t).contains(DimVector::unit(q.size(), v));
  r.record(cover == in_a, "T=" + t.to_string() + " s=s" + std::to_string(v));
  return r;
}

Report check_reading_coincidence(const RepCategory& cat) {
  Report r{"reading", 0, {}};
  const Quiver& q = cat.quiver();
  const auto c = coxeter_element_word(q);
  for (const auto& w : sortable_elements(cat)) {
    const IndecSet t = torsion_of_sortable(cat, w);
    const std::string tag = "w=" + describe(q, w) + " T=" + t.to_string();
    r.record(reading_nc(q, w, c) == nc_of_torsion(cat, t), "nc mismatch " + tag);
    r.record(reading_cl(q, w, c) == ext_projectives(cat, t), "cl mismatch " + tag);
    r.record(sortable_of_torsion(cat, t) == w, "sortable round trip " + tag);
  }
  for (const auto& t : enumerate_torsion_classes(cat)) r.merge(cover_criterion_check(cat, t, c));
  return r;
}

Report check_exceptional_sequences(const RepCategory& cat) {
  Report r{"exceptional", 0, {}};
  const Quiver& q = cat.quiver();
  const GroupElement cox = coxeter_element(q);
  const auto all = complete_exceptional_sequences(cat);
  for (const auto& seq : all) {
    r.record(reflection_product(q, seq) == cox, "product is not cox: " + seq_string(seq));
    for (std::size_t i = 1; i < seq.size(); ++i) {
      const auto fwd = braid_act(cat, i, seq);
      r.record(reflection_product(q, fwd) == cox, "braid changed product: " + seq_string(seq));
      r.record(braid_act(cat, i, fwd, BraidDirection::inverse) == seq, "braid inverse failed: " + seq_string(seq));
    }
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
      const auto lhs = braid_act(cat, i, braid_act(cat, i + 1, braid_act(cat, i, seq)));
      const auto rhs = braid_act(cat, i + 1, braid_act(cat, i, braid_act(cat, i + 1, seq)));
      r.record(lhs == rhs, "braid relation failed at " + std::to_string(i) + ": " + seq_string(seq));
    }
  }
  if (!all.empty()) r.record(braid_orbit(cat, all.front()) == all, "braid action is not transitive");
  return r;
}

Report check_order_isomorphism(const RepCategory& cat) {
  Report r{"order-isomorphism", 0, {}};
  const Quiver& q = cat.quiver();
  const NCPoset nc = noncrossing_partitions(q);
  const auto ts = enumerate_torsion_classes(cat);
  std::vector<IndecSet> wides;
  std::vector<GroupElement> images;
  for (const auto& t : ts) {
    wides.push_back(a_of(cat, t));
    images.push_back(cox_of_wide(cat, wides.back()));
    r.record(absolute_length(q, images.back()) == static_cast<int>(wide_simples(cat, wides.back()).size()),
             "absolute length differs from simple count at " + t.to_string());
  }
  std::set<GroupElement> image_set(images.begin(), images.end());
  std::set<GroupElement> nc_set(nc.elements.begin(), nc.elements.end());
  r.record(image_set.size() == ts.size(), "nc_of_torsion is not injective");
  r.record(image_set == nc_set, "image of nc_of_torsion differs from NC");
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j) {
      const bool sub = wides[i].subset_of(wides[j]);
      const bool leq = absolute_leq(q, images[i], images[j]);
      r.record(sub == leq, "a(T)=" + wides[i].to_string() + " a(T')=" + wides[j].to_string());
    }
  return r;
}

Report check_torsion_order_preservation(const RepCategory& cat) {
  Report r{"torsion-order-preservation", 0, {}};
  const Quiver& q = cat.quiver();
  const auto ts = enumerate_torsion_classes(cat);
  std::vector<GroupElement> images;
  for (const auto& t : ts) images.push_back(nc_of_torsion(cat, t));
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j) {
      const bool sub = ts[i].subset_of(ts[j]);
      const bool leq = absolute_leq(q, images[i], images[j]);
      r.record(sub == leq, "T=" + ts[i].to_string() + " T'=" + ts[j].to_string() + " nc=" + describe(q, images[i]) +
                               "," + describe(q, images[j]));
    }
  return r;
}

Report check_rs_theorem(const RepCategory& cat) {
  Report r{"rs-fixed-space", 0, {}};
  for (const auto& t : cluster_tilting_objects(cat)) r.merge(rs_check(cat, t));
  return r;
}

Report check_cox_of_wide_independence(const RepCategory& cat) {
  Report r{"cox-of-wide", 0, {}};
  const Quiver& q = cat.quiver();
  for (const auto& a : enumerate_wide_subcategories(cat)) {
    const GroupElement expected = cox_of_wide(cat, a);
    const std::size_t len = wide_simples(cat, a).size();
    ExceptionalSequence cur;
    auto rec = [&](auto&& self) -> void {
      if (cur.size() == len) {
        r.record(reflection_product(q, cur) == expected, "A=" + a.to_string() + " seq=" + seq_string(cur));
        return;
      }
      for (const auto& x : a) {
        cur.push_back(x);
        if (is_exceptional_sequence(cat, cur)) self(self);
        cur.pop_back();
      }
    };
    rec(rec);
  }
  return r;
}

Report check_bijections(const RepCategory& cat) {
  Report r{"bijections", 0, {}};
  const auto ts = enumerate_torsion_classes(cat);
  const auto sts = enumerate_support_tilting(cat);
  const auto cts = cluster_tilting_objects(cat);
  const auto ws = enumerate_wide_subcategories(cat);
  const std::size_t nc = noncrossing_partitions(cat.quiver()).size();
  const std::size_t sortables = sortable_elements(cat).size();
  const std::size_t k = ts.size();
  r.record(sts.size() == k && cts.size() == k && ws.size() == k && nc == k && sortables == k,
           "counts torsion=" + std::to_string(k) + " support-tilting=" + std::to_string(sts.size()) + " clusters=" +
               std::to_string(cts.size()) + " wide=" + std::to_string(ws.size()) + " nc=" + std::to_string(nc) +
               " sortables=" + std::to_string(sortables));
  r.record(std::adjacent_find(ts.begin(), ts.end()) == ts.end(), "duplicate torsion classes");
  for (const auto& t : ts) {
    r.record(gen(cat, ext_projectives(cat, t)) == t, "gen(P(T)) != T for T=" + t.to_string());
    r.record(gen(cat, a_of(cat, t)) == t, "gen(a(T)) != T for T=" + t.to_string());
  }
  for (const auto& c : sts) {
    r.record(ext_projectives(cat, gen(cat, c)) == c, "P(gen C) != C for C=" + c.to_string());
    r.record(drop_shifts(complete_support_tilting(cat, c)) == c, "drop(complete C) != C for C=" + c.to_string());
  }
  for (const auto& a : ws) r.record(a_of(cat, gen(cat, a)) == a, "a(gen A) != A for A=" + a.to_string());
  for (const auto& t : cts)
    r.record(complete_support_tilting(cat, drop_shifts(t)) == t, "complete(drop T) != T for T=" + t.to_string());
  return r;
}

}  // namespace quivernc
