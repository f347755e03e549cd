#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "quivernc/matrix.hpp"

namespace quivernc {

/// Integer vector in the basis of simple roots. Coordinate i belongs to vertex i+1.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::size_t n) : coords_(n, 0) {}
  explicit DimVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  DimVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  /// Simple root e_v for the 1-based vertex label v.
  static DimVector unit(std::size_t n, int vertex);

  std::size_t size() const noexcept { return coords_.size(); }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  bool is_nonnegative() const noexcept;
  bool is_nonpositive() const noexcept;
  std::int64_t total() const noexcept;
  /// 1-based labels of vertices with a nonzero coordinate.
  std::vector<int> support() const;

  DimVector operator-() const;
  friend DimVector operator+(const DimVector& a, const DimVector& b);
  friend DimVector operator-(const DimVector& a, const DimVector& b);
  friend DimVector operator*(std::int64_t k, const DimVector& a);

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;

  /// Compact form "111" when every coordinate is a single digit, otherwise "1,10,2".
  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

using Root = DimVector;

struct Arrow {
  int source = 0;
  int target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

enum class QuiverType { finite, affine, wild };

/// Finite acyclic quiver with vertices 1..n. Arrows keep their input order,
/// which also fixes arrow indices for representation maps.
class Quiver {
 public:
  Quiver() = default;
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const noexcept { return n_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(n_); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  bool has_vertex(int v) const noexcept { return v >= 1 && v <= n_; }
  bool is_sink(int v) const;
  bool is_source(int v) const;
  /// Quiver with every arrow incident to v reversed.
  Quiver reflected_at(int v) const;
  /// Number of arrows i -> j.
  int arrow_count(int i, int j) const;

  /// Lexicographically least topological order (smallest available label first).
  std::vector<int> topological_order() const;

  /// Matrix of the Euler form: <a,b> = a^T E b.
  const std::vector<std::vector<std::int64_t>>& euler_matrix() const noexcept { return euler_; }

  std::string to_dsl() const;

  friend bool operator==(const Quiver& a, const Quiver& b) { return a.n_ == b.n_ && a.arrows_ == b.arrows_; }

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::int64_t>> euler_;
};

Quiver parse_quiver(std::string_view text);

std::int64_t euler_form(const Quiver& q, const DimVector& a, const DimVector& b);
std::int64_t symmetrized_form(const Quiver& q, const DimVector& a, const DimVector& b);

QuiverType classify(const Quiver& q);
std::string_view to_string(QuiverType t);

/// Positive roots in lexicographic order. Throws NotFiniteTypeError unless finite.
std::vector<Root> positive_roots(const Quiver& q);
bool is_positive_root(const Quiver& q, const DimVector& v);

/// A Coxeter word: sources before targets along every arrow.
std::vector<int> coxeter_element_word(const Quiver& q);

/// Simple reflection s_v applied to a vector (vertex label v).
DimVector simple_reflect(const Quiver& q, int v, const DimVector& x);
/// s_r(x) = x - (r,x) r.
DimVector root_reflect(const Quiver& q, const DimVector& r, const DimVector& x);

}  // namespace quivernc

template <>
struct std::hash<quivernc::DimVector> {
  std::size_t operator()(const quivernc::DimVector& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto c : v.coords()) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
    return h;
  }
};
