#pragma once

#include <string>
#include <vector>

#include "quivernc/report.hpp"
#include "quivernc/tors.hpp"

namespace quivernc {

/// Indecomposable of the cluster category: a representation M_root or a
/// shifted projective P_vertex[1]. Representations sort before shifts.
struct CCIndec {
  enum class Kind { rep, shift };
  Kind kind = Kind::rep;
  Root root;
  int vertex = 0;

  static CCIndec rep(Root r) { return {Kind::rep, std::move(r), 0}; }
  static CCIndec shift(int v) { return {Kind::shift, Root{}, v}; }
  bool is_rep() const noexcept { return kind == Kind::rep; }

  friend bool operator==(const CCIndec&, const CCIndec&) = default;
  friend auto operator<=>(const CCIndec&, const CCIndec&) = default;

  /// "110" or "P2[1]".
  std::string to_string() const;
};

/// Basic cluster tilting object, summands kept sorted.
class ClusterTilting {
 public:
  ClusterTilting() = default;
  explicit ClusterTilting(std::vector<CCIndec> summands);

  const std::vector<CCIndec>& summands() const noexcept { return summands_; }
  std::size_t size() const noexcept { return summands_.size(); }
  bool contains(const CCIndec& x) const;
  /// Summands lying in rep Q.
  IndecSet rep_part() const;

  friend bool operator==(const ClusterTilting&, const ClusterTilting&) = default;
  friend auto operator<=>(const ClusterTilting&, const ClusterTilting&) = default;

  std::string to_string() const;

 private:
  std::vector<CCIndec> summands_;
};

/// All indecomposables of the cluster category: reps in root order, then shifts.
std::vector<CCIndec> cluster_indecs(const RepCategory& cat);

bool cc_ext_orthogonal(const RepCategory& cat, const CCIndec& x, const CCIndec& y);

/// Canonically ordered.
std::vector<ClusterTilting> cluster_tilting_objects(const RepCategory& cat);

ClusterTilting complete_support_tilting(const RepCategory& cat, const IndecSet& c);
IndecSet drop_shifts(const ClusterTilting& t);

ClusterTilting mutate(const RepCategory& cat, const ClusterTilting& t, const CCIndec& x);
/// The summand that replaced x when mutating t at x.
CCIndec exchange_partner(const RepCategory& cat, const ClusterTilting& t, const CCIndec& x);

IndecSet gen_of(const RepCategory& cat, const ClusterTilting& t);
bool gen_leq(const RepCategory& cat, const ClusterTilting& t, const ClusterTilting& v);

/// x is a representation that is split projective in gen_of(t).
bool is_split_in_gen(const RepCategory& cat, const ClusterTilting& t, const CCIndec& x);

/// For every cluster tilting object and summand: exactly one of the two
/// complements is split projective in the Gen of its own completion.
Report check_exchange_alternative(const RepCategory& cat);
/// For every mutation T -> V at X: Gen V is strictly smaller than Gen T
/// exactly when X is split projective in Gen T.
Report check_mutation_order(const RepCategory& cat);
/// Each cluster tilting object has n distinct mutation neighbours and mutation is an involution.
Report check_exchange_graph(const RepCategory& cat);

}  // namespace quivernc
