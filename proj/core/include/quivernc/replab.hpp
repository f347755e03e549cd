#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "quivernc/matrix.hpp"
#include "quivernc/quiver.hpp"

namespace quivernc {

/// Vector spaces at the vertices and a matrix per arrow. The map of arrow k
/// (source s, target t) has shape dims[t] x dims[s].
class Representation {
 public:
  Representation() = default;
  Representation(Quiver q, Field f, DimVector dims, std::vector<Matrix> maps);
  static Representation zero(const Quiver& q, Field f = Field::rationals());

  const Quiver& quiver() const noexcept { return q_; }
  const Field& field() const noexcept { return f_; }
  const DimVector& dims() const noexcept { return dims_; }
  std::size_t dim_at(int vertex) const { return static_cast<std::size_t>(dims_[static_cast<std::size_t>(vertex - 1)]); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }
  const Matrix& map(std::size_t arrow) const { return maps_.at(arrow); }
  std::int64_t total_dim() const noexcept { return dims_.total(); }
  bool is_zero() const noexcept { return dims_.is_zero(); }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  Quiver q_;
  Field f_;
  DimVector dims_;
  std::vector<Matrix> maps_;
};

Representation direct_sum(const Representation& a, const Representation& b);

/// One morphism: a matrix per vertex, shape dim N_v x dim M_v.
using Morphism = std::vector<Matrix>;

struct HomBasis {
  std::vector<Morphism> elements;
  std::size_t dim() const noexcept { return elements.size(); }
};

Representation simple_rep(const Quiver& q, int vertex, Field f = Field::rationals());
/// Path basis: paths starting at the vertex.
Representation projective_rep(const Quiver& q, int vertex, Field f = Field::rationals());
/// Dual path basis: paths ending at the vertex.
Representation injective_rep(const Quiver& q, int vertex, Field f = Field::rationals());

HomBasis hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);
std::int64_t ext_dim(const Quiver& q, const Representation& m, const Representation& n);
bool is_morphism(const Representation& m, const Representation& n, const Morphism& phi);

enum class ReflectDirection { plus, minus };

/// BGP reflection functor at a sink (plus) or a source (minus). The result is a
/// representation of q.reflected_at(vertex), arrow indices preserved.
Representation reflect(const Quiver& q, int vertex, ReflectDirection dir, const Representation& m);

/// Indecomposable representation with the given positive root as dimension vector.
Representation indecomposable(const Quiver& q, const Root& root, Field f = Field::rationals());

/// Subrepresentation given by column bases of the vertex subspaces.
using SubspaceBases = std::vector<Matrix>;

/// Visits every subrepresentation of m (finite field only). Total dimension
/// must not exceed cap.
void for_each_subrep(const Representation& m, const std::function<void(const SubspaceBases&)>& visit, int cap = 12);
std::vector<DimVector> subrep_dimvectors(const Representation& m, int cap = 12);

/// Subrepresentation and quotient determined by vertex subspaces.
Representation sub_representation(const Representation& m, const SubspaceBases& u);
Representation quotient_representation(const Representation& m, const SubspaceBases& u);

Representation kernel(const Representation& m, const Representation& n, const Morphism& phi);
Representation cokernel(const Representation& m, const Representation& n, const Morphism& phi);
/// Sum of the images of all given morphisms into n, as vertex subspaces.
SubspaceBases image_span(const Representation& n, const std::vector<std::pair<const Representation*, Morphism>>& maps);

/// Middle terms of all extensions 0 -> y -> E -> x -> 0, one per class of Ext^1(x, y).
/// Finite field only.
std::vector<Representation> extension_middle_terms(const Representation& x, const Representation& y);

/// Dimension vectors of indecomposable projectives, indexed by vertex - 1.
std::vector<DimVector> projective_dims(const Quiver& q);
std::vector<DimVector> injective_dims(const Quiver& q);

/// Dimension vector of tau of the indecomposable with this root, or none if it is projective.
std::optional<Root> tau(const Quiver& q, const Root& root);
std::optional<Root> tau_inverse(const Quiver& q, const Root& root);

struct ARQuiver {
  std::vector<Root> vertices;
  /// Edges between vertex indices, repeated for multiplicity.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> predecessors(std::size_t v) const;
  std::vector<std::size_t> successors(std::size_t v) const;
};

/// Knitted from the projectives; vertices in canonical root order.
ARQuiver ar_quiver(const Quiver& q);

/// Brute-force data over the oracle field, indexed by root position. Masks have bit i set
/// when the i-th root occurs as a summand.
struct OracleTables {
  int cap = 12;
  /// Summands of quotients of X_i.
  std::vector<std::uint64_t> quotient_summands;
  /// Summand masks of the proper nonzero subrepresentations of X_i.
  std::vector<std::vector<std::uint64_t>> subobject_summands;
  /// Summands of middle terms of extensions 0 -> X_i -> E -> X_j -> 0.
  std::vector<std::vector<std::uint64_t>> extension_summands;
  /// Summands of kernels and cokernels of maps X_i -> X_j.
  std::vector<std::vector<std::uint64_t>> kernel_summands;
  std::vector<std::vector<std::uint64_t>> cokernel_summands;
};

/// Every element of the span of a Hom basis over a finite field, including zero.
std::vector<Morphism> all_morphisms(const Representation& m, const Representation& n);

/// Indecomposables of a finite type quiver with cached Hom and Ext dimensions.
/// Immutable after construction apart from lazily built caches guarded by
/// call_once, so a single instance can be shared across threads.
class RepCategory {
 public:
  explicit RepCategory(Quiver q, int oracle_cap = 12);
  RepCategory(const RepCategory&) = delete;
  RepCategory& operator=(const RepCategory&) = delete;

  const Quiver& quiver() const noexcept { return q_; }
  const std::vector<Root>& roots() const noexcept { return roots_; }
  std::size_t size() const noexcept { return roots_.size(); }
  std::optional<std::size_t> index_of(const Root& r) const;
  std::size_t require_index(const Root& r) const;

  /// Indecomposables over the given field, aligned with roots().
  const std::vector<Representation>& indecs(Field f = Field::rationals()) const;
  const Representation& indec(std::size_t i, Field f = Field::rationals()) const { return indecs(f)[i]; }

  std::size_t hom(std::size_t i, std::size_t j) const { return hom_[i][j]; }
  std::size_t ext(std::size_t i, std::size_t j) const { return ext_[i][j]; }
  bool is_projective(std::size_t i) const { return projective_[i]; }

  /// Hom basis between indecomposables over the rationals.
  const HomBasis& hom_basis_of(std::size_t i, std::size_t j) const { return hom_bases_[i][j]; }

  /// Brute-force tables, built on first use.
  const OracleTables& oracle() const;
  /// GF(2) when every root is thin, else GF(3). GF(2) has too few lines to
  /// realise every quotient of a non-thin indecomposable (1112 -> 1111 in D4).
  Field oracle_field() const;
  int oracle_cap() const noexcept { return cap_; }

  /// Bit mask of the roots that occur in a decomposition.
  std::uint64_t summand_mask(const Representation& m) const;

  /// Krull-Schmidt decomposition by Hom fingerprint; multiplicities aligned with roots().
  std::vector<std::size_t> decompose(const Representation& m) const;

 private:
  Quiver q_;
  std::vector<Root> roots_;
  std::vector<std::vector<std::size_t>> hom_;
  std::vector<std::vector<std::size_t>> ext_;
  std::vector<bool> projective_;
  std::vector<std::vector<Rational>> hom_inverse_;
  std::vector<std::vector<HomBasis>> hom_bases_;
  int cap_ = 12;

  mutable std::once_flag oracle_once_;
  mutable std::unique_ptr<OracleTables> oracle_;

  mutable std::array<std::once_flag, 3> once_;
  mutable std::array<std::vector<Representation>, 3> by_field_;
};

/// Multiset of roots of a decomposition, sorted canonically.
std::vector<Root> decompose(const RepCategory& cat, const Representation& m);

}  // namespace quivernc
