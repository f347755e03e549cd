#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "quivernc/report.hpp"
#include "quivernc/tors.hpp"

namespace quivernc {

/// Integer linear functional theta(v) = coeffs . v on the root lattice.
struct Stability {
  std::vector<std::int64_t> coeffs;

  std::int64_t operator()(const DimVector& v) const;
  bool is_zero() const;
  friend bool operator==(const Stability&, const Stability&) = default;
  std::string to_string() const;
};

/// a is indexed by the summands of C in sorted order, b by the vertices
/// outside supp C in increasing order.
struct ThetaCoefficients {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
};

/// a = 1 on non-split summands, 0 on split ones, b = -1.
ThetaCoefficients default_coefficients(const RepCategory& cat, const IndecSet& c);
/// a drawn from {1,2,3} on non-split summands, b from {-1,-2}.
ThetaCoefficients random_coefficients(const RepCategory& cat, const IndecSet& c, std::mt19937& rng);

/// sum a_i <T_i, -> + sum b_j e_j^*. Throws DomainError on a sign violation.
Stability theta_of_support_tilting(const RepCategory& cat, const IndecSet& c, const ThetaCoefficients& k);

/// theta(M) = 0 and theta(W) <= 0 for every subrepresentation W.
bool is_semistable(const Stability& theta, const Representation& m, int cap = 12);
/// theta(M) = 0 and theta(W) >= 0 for every quotient W.
bool is_semistable_by_quotients(const Stability& theta, const Representation& m, int cap = 12);

IndecSet semistable_indecs(const RepCategory& cat, const Stability& theta);

/// Compares semistable_indecs(theta) with a_of(gen(C)).
Report verify_semistable_theorem(const RepCategory& cat, const IndecSet& c, const ThetaCoefficients& k);

/// Every support tilting object with default coefficients and `random_draws`
/// seeded random choices; also checks the quotient-side membership and the
/// wide-subcategory oracle on every semistable set.
Report stability_suite(const RepCategory& cat, std::uint64_t seed, int random_draws = 3);

}  // namespace quivernc
