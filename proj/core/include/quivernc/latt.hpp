#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quivernc/report.hpp"
#include "quivernc/tors.hpp"
#include "quivernc/weyl.hpp"

namespace quivernc {

/// Finite poset on element ids 0..size-1 with printable payloads.
class FinitePoset {
 public:
  /// Throws DomainError unless leq is reflexive, antisymmetric and transitive.
  FinitePoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);

  std::size_t size() const noexcept { return labels_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq_[a][b]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<bool>>& relation() const noexcept { return leq_; }

  /// Pairs (a, b) with b covering a.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

 private:
  std::optional<std::size_t> bound(std::size_t a, std::size_t b, bool upper) const;

  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
  static constexpr std::size_t none_ = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> join_;
  std::vector<std::vector<std::size_t>> meet_;
};

struct LatticeReport {
  bool is_lattice = false;
  std::vector<std::size_t> join_irreducibles;
  std::vector<std::size_t> meet_irreducibles;
  /// Number of cover steps in a longest chain.
  std::size_t longest_chain = 0;
  std::vector<std::size_t> left_modular_elements;
  /// Maximal chain of left modular elements, bottom first, if one exists.
  std::optional<std::vector<std::size_t>> left_modular_chain;
  bool is_extremal = false;
  bool is_trim = false;
};

LatticeReport lattice_analyze(const FinitePoset& p);
bool is_left_modular_element(const FinitePoset& p, std::size_t x);

/// Torsion classes ordered by inclusion, canonically ordered.
FinitePoset cambrian_poset(const RepCategory& cat, std::vector<IndecSet>* classes = nullptr);
FinitePoset nc_poset(const Quiver& q);

IndecSet torsion_meet(const RepCategory& cat, const IndecSet& t1, const IndecSet& t2);
/// Closure of the union under quotients and extensions.
IndecSet torsion_join(const RepCategory& cat, const IndecSet& t1, const IndecSet& t2);

/// gen({alpha}) for each positive root, in root order.
std::vector<IndecSet> principal_torsion_classes(const RepCategory& cat);

/// Lexicographically least topological order of the AR quiver.
std::vector<Root> ar_total_order(const RepCategory& cat);
/// all = S_1, S_2, ..., S_{N+1} = empty, S_k the suffix of the AR order from position k.
std::vector<IndecSet> splitting_chain(const RepCategory& cat);

Report check_nc_lattice(const Quiver& q);
/// Lattice, trim, |JI| = |MI| = |roots| = longest chain, JI = principal classes,
/// meet = intersection, join = closure.
Report check_cambrian_lattice(const RepCategory& cat);
/// Chain members are splitting torsion classes and left modular elements.
Report check_splitting_chain(const RepCategory& cat);
/// T v S = T u S for every torsion class T and chain member S. This law does
/// not hold in general: in A2 with 2 -> 1, {10} v {01} is everything.
Report check_splitting_join_law(const RepCategory& cat);

}  // namespace quivernc
