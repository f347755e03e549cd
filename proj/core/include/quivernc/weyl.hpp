#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "quivernc/matrix.hpp"
#include "quivernc/quiver.hpp"

namespace quivernc {

/// Integer matrix acting on dimension vectors by w(v) = mat * v.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::size_t n);
  GroupElement(std::size_t n, std::vector<std::int64_t> row_major);

  static GroupElement identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const std::vector<std::int64_t>& data() const noexcept { return data_; }

  bool is_identity() const;
  DimVector apply(const DimVector& v) const;
  GroupElement inverse() const;
  Matrix to_matrix() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace quivernc

template <>
struct std::hash<quivernc::GroupElement> {
  std::size_t operator()(const quivernc::GroupElement& g) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto c : g.data()) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
    return h;
  }
};

namespace quivernc {

GroupElement simple_reflection(const Quiver& q, int vertex);
/// s_v(w) = w - (v,w) v. Throws DomainError unless (v,v) = 2.
GroupElement reflection(const Quiver& q, const DimVector& v);
/// s_{v1} * ... * s_{vk}; the rightmost letter acts first.
GroupElement word_element(const Quiver& q, const std::vector<int>& word);
GroupElement coxeter_element(const Quiver& q);

std::vector<Root> inversion_set(const Quiver& q, const GroupElement& w);
int length_S(const Quiver& q, const GroupElement& w);
/// Rational basis (as columns) of ker(w - 1).
Matrix fixed_space(const Quiver& q, const GroupElement& w);
int absolute_length(const Quiver& q, const GroupElement& w);
bool absolute_leq(const Quiver& q, const GroupElement& u, const GroupElement& v);

/// Vertices s with l(ws) < l(w).
std::vector<int> right_descents(const Quiver& q, const GroupElement& w);
/// {w s w^-1 : s a right descent of w}.
std::vector<GroupElement> cover_reflections(const Quiver& q, const GroupElement& w);
/// The root r with s_r = t, for a reflection t.
std::optional<Root> reflection_root(const Quiver& q, const GroupElement& t);

/// Shortest word for w via descents.
std::vector<int> reduced_word(const Quiver& q, const GroupElement& w);

/// Checks that a word lists distinct vertex labels of q.
void validate_coxeter_word(const Quiver& q, const std::vector<int>& c_word, bool require_all);
bool is_c_sortable(const Quiver& q, const GroupElement& w, const std::vector<int>& c_word);

/// Minimum number of letters to delete from a word for w to reach the identity.
/// Exhaustive; intended only as an independent check on absolute_length.
int deletion_length(const Quiver& q, const std::vector<int>& word);

/// Finite Coxeter group, enumerated breadth first by right multiplication with
/// simple reflections. Element 0 is the identity.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(const Quiver& q);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  const std::vector<int>& word(std::size_t i) const { return words_[i]; }
  std::optional<std::size_t> index_of(const GroupElement& w) const;
  std::size_t longest_index() const;

 private:
  std::vector<GroupElement> elements_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<GroupElement, std::size_t> index_;
};

/// The interval [e, cox(Q)] in absolute order.
struct NCPoset {
  std::vector<GroupElement> elements;
  /// leq[i][j] iff elements[i] <= elements[j].
  std::vector<std::vector<bool>> leq;

  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> index_of(const GroupElement& w) const;
  std::vector<std::pair<std::size_t, std::size_t>> cover_relations() const;
};

NCPoset noncrossing_partitions(const Quiver& q);

/// "s[110]" for reflections, a reduced word like "s2 s1" otherwise, "e" for the identity.
std::string describe(const Quiver& q, const GroupElement& w);

}  // namespace quivernc
