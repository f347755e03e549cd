#include "quivernc/weyl.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <sstream>

#include "quivernc/errors.hpp"

namespace quivernc {

namespace {

void require_finite(const Quiver& q) {
  if (classify(q) != QuiverType::finite) throw NotFiniteTypeError("operation requires a finite type quiver");
}

}  // namespace

GroupElement::GroupElement(std::size_t n) : n_(n), data_(n * n, 0) {}

GroupElement::GroupElement(std::size_t n, std::vector<std::int64_t> row_major) : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) throw DomainError("group element must be a square matrix");
}

GroupElement GroupElement::identity(std::size_t n) {
  GroupElement g(n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = 1;
  return g;
}

bool GroupElement::is_identity() const { return *this == identity(n_); }

DimVector GroupElement::apply(const DimVector& v) const {
  if (v.size() != n_) throw DomainError("vector length does not match group element");
  DimVector out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < n_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

Matrix GroupElement::to_matrix() const {
  Matrix m(n_, n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) m(r, c) = Rational((*this)(r, c));
  return m;
}

GroupElement GroupElement::inverse() const {
  const Matrix inv = quivernc::inverse(Field::rationals(), to_matrix());
  GroupElement g(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (!inv(r, c).is_integer()) throw InvariantError("group element is not invertible over the integers");
      g(r, c) = inv(r, c).num();
    }
  }
  return g;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.n_ != b.n_) throw DomainError("group element size mismatch");
  GroupElement out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < n_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < n_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

GroupElement reflection(const Quiver& q, const DimVector& v) {
  if (v.size() != q.size() || symmetrized_form(q, v, v) != 2) {
    throw DomainError("reflection requires a root, got " + v.to_string());
  }
  GroupElement g(q.size());
  for (std::size_t c = 0; c < q.size(); ++c) {
    const DimVector img = root_reflect(q, v, DimVector::unit(q.size(), static_cast<int>(c) + 1));
    for (std::size_t r = 0; r < q.size(); ++r) g(r, c) = img[r];
  }
  return g;
}

GroupElement simple_reflection(const Quiver& q, int vertex) {
  if (!q.has_vertex(vertex)) throw DomainError("unknown vertex " + std::to_string(vertex));
  return reflection(q, DimVector::unit(q.size(), vertex));
}

GroupElement word_element(const Quiver& q, const std::vector<int>& word) {
  GroupElement g = GroupElement::identity(q.size());
  for (int v : word) g = g * simple_reflection(q, v);
  return g;
}

GroupElement coxeter_element(const Quiver& q) { return word_element(q, coxeter_element_word(q)); }

std::vector<Root> inversion_set(const Quiver& q, const GroupElement& w) {
  require_finite(q);
  const GroupElement inv = w.inverse();
  std::vector<Root> out;
  for (const auto& a : positive_roots(q)) {
    if (inv.apply(a).is_nonpositive()) out.push_back(a);
  }
  return out;
}

int length_S(const Quiver& q, const GroupElement& w) { return static_cast<int>(inversion_set(q, w).size()); }

Matrix fixed_space(const Quiver& q, const GroupElement& w) {
  if (w.dim() != q.size()) throw DomainError("group element size mismatch");
  const Field f = Field::rationals();
  return nullspace(f, subtract(f, w.to_matrix(), Matrix::identity(q.size())));
}

int absolute_length(const Quiver& q, const GroupElement& w) {
  require_finite(q);
  return static_cast<int>(q.size() - fixed_space(q, w).cols());
}

bool absolute_leq(const Quiver& q, const GroupElement& u, const GroupElement& v) {
  return absolute_length(q, u) + absolute_length(q, u.inverse() * v) == absolute_length(q, v);
}

std::vector<int> right_descents(const Quiver& q, const GroupElement& w) {
  // l(ws) < l(w) iff w(e_s) is negative.
  require_finite(q);
  std::vector<int> out;
  for (int s = 1; s <= q.vertex_count(); ++s) {
    if (w.apply(DimVector::unit(q.size(), s)).is_nonpositive()) out.push_back(s);
  }
  return out;
}

std::vector<GroupElement> cover_reflections(const Quiver& q, const GroupElement& w) {
  std::vector<GroupElement> out;
  const GroupElement inv = w.inverse();
  for (int s : right_descents(q, w)) out.push_back(w * simple_reflection(q, s) * inv);
  return out;
}

std::optional<Root> reflection_root(const Quiver& q, const GroupElement& t) {
  for (const auto& r : positive_roots(q)) {
    if (reflection(q, r) == t) return r;
  }
  return std::nullopt;
}

std::vector<int> reduced_word(const Quiver& q, const GroupElement& w) {
  std::vector<int> word;
  GroupElement cur = w;
  while (!cur.is_identity()) {
    auto d = right_descents(q, cur);
    if (d.empty()) throw InvariantError("non-identity element without descents");
    word.push_back(d.front());
    cur = cur * simple_reflection(q, d.front());
  }
  std::reverse(word.begin(), word.end());
  return word;
}

void validate_coxeter_word(const Quiver& q, const std::vector<int>& c_word, bool require_all) {
  std::set<int> seen;
  for (int v : c_word) {
    if (!q.has_vertex(v)) throw DomainError("Coxeter word uses unknown vertex " + std::to_string(v));
    if (!seen.insert(v).second) throw DomainError("Coxeter word repeats vertex " + std::to_string(v));
  }
  if (require_all && seen.size() != q.size()) throw DomainError("Coxeter word must use every vertex once");
}

namespace {

bool sortable_rec(const Quiver& q, const GroupElement& w, std::vector<int> word) {
  if (w.is_identity()) return true;
  if (word.empty()) return false;
  const int s = word.front();
  const GroupElement sw = simple_reflection(q, s) * w;
  if (length_S(q, sw) > length_S(q, w)) {
    for (const auto& r : inversion_set(q, w))
      if (r[static_cast<std::size_t>(s - 1)] != 0) return false;
    word.erase(word.begin());
    return sortable_rec(q, w, std::move(word));
  }
  std::rotate(word.begin(), word.begin() + 1, word.end());
  return sortable_rec(q, sw, std::move(word));
}

}  // namespace

bool is_c_sortable(const Quiver& q, const GroupElement& w, const std::vector<int>& c_word) {
  require_finite(q);
  validate_coxeter_word(q, c_word, true);
  return sortable_rec(q, w, c_word);
}

int deletion_length(const Quiver& q, const std::vector<int>& word) {
  const std::size_t k = word.size();
  if (k > 24) throw CapExceededError("deletion search limited to words of length 24");
  int best = static_cast<int>(k);
  std::vector<GroupElement> gens;
  for (int v : word) gens.push_back(simple_reflection(q, v));
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    const int deleted = static_cast<int>(k) - std::popcount(mask);
    if (deleted >= best) continue;
    GroupElement g = GroupElement::identity(q.size());
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) g = g * gens[i];
    if (g.is_identity()) best = deleted;
  }
  return best;
}

CoxeterGroup::CoxeterGroup(const Quiver& q) {
  require_finite(q);
  std::vector<GroupElement> gens;
  for (int v = 1; v <= q.vertex_count(); ++v) gens.push_back(simple_reflection(q, v));
  elements_.push_back(GroupElement::identity(q.size()));
  words_.push_back({});
  index_.emplace(elements_.front(), 0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (int v = 1; v <= q.vertex_count(); ++v) {
      GroupElement g = elements_[i] * gens[static_cast<std::size_t>(v - 1)];
      if (index_.contains(g)) continue;
      index_.emplace(g, elements_.size());
      auto w = words_[i];
      w.push_back(v);
      elements_.push_back(std::move(g));
      words_.push_back(std::move(w));
    }
  }
}

std::optional<std::size_t> CoxeterGroup::index_of(const GroupElement& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CoxeterGroup::longest_index() const { return elements_.size() - 1; }

std::optional<std::size_t> NCPoset::index_of(const GroupElement& w) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == w) return i;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> NCPoset::cover_relations() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = elements.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && leq[i][k] && leq[k][j]) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

NCPoset noncrossing_partitions(const Quiver& q) {
  const CoxeterGroup group(q);
  const GroupElement c = coxeter_element(q);
  const int lc = absolute_length(q, c);
  struct Entry {
    int length;
    std::size_t index;
  };
  std::vector<Entry> keep;
  for (std::size_t i = 0; i < group.size(); ++i) {
    const auto& w = group.element(i);
    const int lw = absolute_length(q, w);
    if (lw + absolute_length(q, w.inverse() * c) == lc) keep.push_back({lw, i});
  }
  std::stable_sort(keep.begin(), keep.end(), [](const Entry& a, const Entry& b) { return a.length < b.length; });
  NCPoset p;
  for (const auto& e : keep) p.elements.push_back(group.element(e.index));
  const std::size_t n = p.elements.size();
  p.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.leq[i][j] = absolute_leq(q, p.elements[i], p.elements[j]);
  return p;
}

std::string describe(const Quiver& q, const GroupElement& w) {
  if (w.is_identity()) return "e";
  if (auto r = reflection_root(q, w)) return "s[" + r->to_string() + "]";
  std::string out;
  for (int v : reduced_word(q, w)) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(v);
  }
  return out;
}

}  // namespace quivernc
