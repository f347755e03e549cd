#pragma once

#include <optional>
#include <vector>

#include "quivernc/cluster.hpp"
#include "quivernc/report.hpp"
#include "quivernc/tors.hpp"
#include "quivernc/weyl.hpp"

namespace quivernc {

/// Product of the reflections of the simples of A in exceptional order.
GroupElement cox_of_wide(const RepCategory& cat, const IndecSet& a);
/// cox_of_wide(a_of(t)).
GroupElement nc_of_torsion(const RepCategory& cat, const IndecSet& t);

/// Element whose inversion set is the root set of t.
GroupElement sortable_of_torsion(const RepCategory& cat, const IndecSet& t);
/// Torsion class whose root set is I(w). Throws DomainError if it is not one.
IndecSet torsion_of_sortable(const RepCategory& cat, const GroupElement& w);
/// All cox(Q)-sortable elements in group order.
std::vector<GroupElement> sortable_elements(const RepCategory& cat);

/// Reading's recursions, driven by the word c_word of a Coxeter element.
GroupElement reading_nc(const Quiver& q, const GroupElement& w, const std::vector<int>& c_word);
IndecSet reading_cl(const Quiver& q, const GroupElement& w, const std::vector<int>& c_word);

using ExceptionalSequence = std::vector<Root>;

bool is_exceptional_sequence(const RepCategory& cat, const ExceptionalSequence& seq);
/// s_{X_1} ... s_{X_k}.
GroupElement reflection_product(const Quiver& q, const ExceptionalSequence& seq);

enum class BraidDirection { forward, inverse };
/// sigma_i for 1 <= i < |seq|.
ExceptionalSequence braid_act(const RepCategory& cat, std::size_t i, const ExceptionalSequence& seq,
                              BraidDirection dir = BraidDirection::forward);

/// Lexicographically sorted. Rank at most 3.
std::vector<ExceptionalSequence> complete_exceptional_sequences(const RepCategory& cat);
/// Braid orbit of seq under all sigma_i and their inverses, sorted.
std::vector<ExceptionalSequence> braid_orbit(const RepCategory& cat, const ExceptionalSequence& seq);

/// Summands X of t with gen_of(mutate(t, X)) strictly contained in gen_of(t).
std::vector<CCIndec> upper_indecs(const RepCategory& cat, const ClusterTilting& t);
/// Fixed space of nc_of_torsion(gen_of(t)) against the common perpendicular of the upper roots.
Report rs_check(const RepCategory& cat, const ClusterTilting& t);
/// Cover-reflection criterion for the initial letter of c_word; vacuous pairs count as not applicable.
Report cover_criterion_check(const RepCategory& cat, const IndecSet& t, const std::vector<int>& c_word);

/// Exhaustive suites.
/// Equal counts of torsion classes, support tilting objects, cluster tilting
/// objects, NC elements and sortable elements, plus the round trips
/// gen/ext_projectives, a_of/gen and complete/drop_shifts.
Report check_bijections(const RepCategory& cat);
Report check_reading_coincidence(const RepCategory& cat);
Report check_exceptional_sequences(const RepCategory& cat);
Report check_order_isomorphism(const RepCategory& cat);
/// The same pair check with torsion-class inclusion as the source order.
Report check_torsion_order_preservation(const RepCategory& cat);
Report check_rs_theorem(const RepCategory& cat);
Report check_cox_of_wide_independence(const RepCategory& cat);

}  // namespace quivernc
