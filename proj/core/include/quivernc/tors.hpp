#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "quivernc/replab.hpp"
#include "quivernc/report.hpp"

namespace quivernc {

/// Finite set of positive roots standing for the additive closure of the
/// corresponding indecomposables. Kept sorted and duplicate free.
class IndecSet {
 public:
  IndecSet() = default;
  explicit IndecSet(std::vector<Root> roots);
  IndecSet(std::initializer_list<Root> roots) : IndecSet(std::vector<Root>(roots)) {}

  const std::vector<Root>& roots() const noexcept { return roots_; }
  std::size_t size() const noexcept { return roots_.size(); }
  bool empty() const noexcept { return roots_.empty(); }
  bool contains(const Root& r) const;
  bool subset_of(const IndecSet& other) const;
  /// 1-based labels of vertices in the support of some member.
  std::vector<int> support(std::size_t n) const;

  auto begin() const { return roots_.begin(); }
  auto end() const { return roots_.end(); }

  friend bool operator==(const IndecSet&, const IndecSet&) = default;
  /// Canonical order: by size, then lexicographically on the sorted roots.
  friend bool operator<(const IndecSet& a, const IndecSet& b);

  /// "{011,111}".
  std::string to_string() const;

 private:
  std::vector<Root> roots_;
};

IndecSet set_union(const IndecSet& a, const IndecSet& b);
IndecSet set_intersection(const IndecSet& a, const IndecSet& b);
IndecSet set_difference(const IndecSet& a, const IndecSet& b);

using RootMask = std::uint64_t;
RootMask to_mask(const RepCategory& cat, const IndecSet& s);
IndecSet from_mask(const RepCategory& cat, RootMask m);
IndecSet all_indecs(const RepCategory& cat);

/// Indecomposables X with the images of all maps from members of s spanning X.
IndecSet gen(const RepCategory& cat, const IndecSet& s);

/// Brute-force checks against the oracle tables.
bool is_torsion_class(const RepCategory& cat, const IndecSet& s);
bool is_wide(const RepCategory& cat, const IndecSet& s);
/// Pairwise and self Ext vanishing.
bool is_partial_tilting(const RepCategory& cat, const IndecSet& s);
bool is_support_tilting(const RepCategory& cat, const IndecSet& c);

IndecSet ext_projectives(const RepCategory& cat, const IndecSet& t);
IndecSet split_projectives(const RepCategory& cat, const IndecSet& t);
IndecSet a_of(const RepCategory& cat, const IndecSet& t);

/// Canonically ordered.
std::vector<IndecSet> enumerate_support_tilting(const RepCategory& cat);
std::vector<IndecSet> enumerate_torsion_classes(const RepCategory& cat);
std::vector<IndecSet> enumerate_wide_subcategories(const RepCategory& cat);

/// Simple objects of a wide subcategory in the least exceptional order.
std::vector<Root> wide_simples(const RepCategory& cat, const IndecSet& a);

IndecSet torsion_free_complement(const RepCategory& cat, const IndecSet& t);
/// Largest subrepresentation of m lying in the torsion class t.
Representation torsion_subobject(const RepCategory& cat, const IndecSet& t, const Representation& m);

/// Exhaustive over all root subsets (at most 2^16): the torsion oracle
/// accepts exactly the enumerated torsion classes and exactly the sets with
/// S = left-perp(right-perp(S)); the wide oracle accepts exactly the a_of images.
Report check_torsion_oracle(const RepCategory& cat);

}  // namespace quivernc
