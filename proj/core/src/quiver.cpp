#include "quivernc/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

#include "quivernc/errors.hpp"

namespace quivernc {

DimVector DimVector::unit(std::size_t n, int vertex) {
  DimVector v(n);
  v[static_cast<std::size_t>(vertex - 1)] = 1;
  return v;
}

bool DimVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

bool DimVector::is_nonnegative() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c >= 0; });
}

bool DimVector::is_nonpositive() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c <= 0; });
}

std::int64_t DimVector::total() const noexcept {
  std::int64_t s = 0;
  for (auto c : coords_) s += c;
  return s;
}

std::vector<int> DimVector::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) out.push_back(static_cast<int>(i) + 1);
  return out;
}

DimVector DimVector::operator-() const {
  DimVector out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw DomainError("dimension vector length mismatch");
  DimVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

DimVector operator-(const DimVector& a, const DimVector& b) { return a + (-b); }

DimVector operator*(std::int64_t k, const DimVector& a) {
  DimVector out(a);
  for (auto& c : out.coords_) c *= k;
  return out;
}

std::string DimVector::to_string() const {
  const bool compact = std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c >= 0 && c <= 9; });
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out;
}

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows) : n_(vertex_count), arrows_(std::move(arrows)) {
  if (n_ < 0) throw ParseError(ParseErrorKind::syntax, "negative vertex count");
  for (const auto& a : arrows_) {
    if (!has_vertex(a.source) || !has_vertex(a.target)) {
      throw ParseError(ParseErrorKind::syntax,
                       "arrow " + std::to_string(a.source) + " -> " + std::to_string(a.target) +
                           " uses an undeclared vertex");
    }
    if (a.source == a.target) throw ParseError(ParseErrorKind::loop, "loop at vertex " + std::to_string(a.source));
  }
  if (topological_order().size() != size()) throw ParseError(ParseErrorKind::oriented_cycle, "quiver has an oriented cycle");
  euler_.assign(size(), std::vector<std::int64_t>(size(), 0));
  for (std::size_t i = 0; i < size(); ++i) euler_[i][i] = 1;
  for (const auto& a : arrows_) euler_[a.source - 1][a.target - 1] -= 1;
}

bool Quiver::is_sink(int v) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.source == v; });
}

bool Quiver::is_source(int v) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.target == v; });
}

Quiver Quiver::reflected_at(int v) const {
  std::vector<Arrow> arrows = arrows_;
  for (auto& a : arrows)
    if (a.source == v || a.target == v) std::swap(a.source, a.target);
  return Quiver(n_, std::move(arrows));
}

int Quiver::arrow_count(int i, int j) const {
  return static_cast<int>(
      std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.source == i && a.target == j; }));
}

std::vector<int> Quiver::topological_order() const {
  std::vector<int> indeg(size() + 1, 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::set<int> ready;
  for (int v = 1; v <= n_; ++v)
    if (indeg[v] == 0) ready.insert(v);
  std::vector<int> order;
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (const auto& a : arrows_) {
      if (a.source == v && --indeg[a.target] == 0) ready.insert(a.target);
    }
  }
  return order;
}

std::string Quiver::to_dsl() const {
  std::ostringstream os;
  os << "vertices " << n_ << '\n';
  for (const auto& a : arrows_) os << "arrow " << a.source << ' ' << a.target << '\n';
  return os.str();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view tok, int line_no) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(ParseErrorKind::syntax,
                     "line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
  int n = -1;
  std::vector<Arrow> arrows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of("\n;", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (toks[0] == "vertices") {
      if (toks.size() != 2) throw ParseError(ParseErrorKind::syntax, where + "expected 'vertices N'");
      if (n >= 0) throw ParseError(ParseErrorKind::duplicate_vertex, where + "vertices declared twice");
      n = parse_int(toks[1], line_no);
      if (n < 1) throw ParseError(ParseErrorKind::syntax, where + "vertex count must be positive");
    } else if (toks[0] == "arrow") {
      if (toks.size() != 3) throw ParseError(ParseErrorKind::syntax, where + "expected 'arrow S T'");
      if (n < 0) throw ParseError(ParseErrorKind::syntax, where + "arrow before vertices declaration");
      Arrow a{parse_int(toks[1], line_no), parse_int(toks[2], line_no)};
      if (a.source < 1 || a.source > n || a.target < 1 || a.target > n) {
        throw ParseError(ParseErrorKind::syntax, where + "arrow endpoint is not a declared vertex");
      }
      if (a.source == a.target) throw ParseError(ParseErrorKind::loop, where + "loops are not allowed");
      arrows.push_back(a);
    } else {
      throw ParseError(ParseErrorKind::syntax, where + "unknown directive '" + std::string(toks[0]) + "'");
    }
  }
  if (n < 0) throw ParseError(ParseErrorKind::syntax, "missing 'vertices N' line");
  return Quiver(n, std::move(arrows));
}

std::int64_t euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  if (a.size() != q.size() || b.size() != q.size()) throw DomainError("dimension vector length mismatch");
  const auto& e = q.euler_matrix();
  std::int64_t s = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < q.size(); ++j) s += a[i] * e[i][j] * b[j];
  }
  return s;
}

std::int64_t symmetrized_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  return euler_form(q, a, b) + euler_form(q, b, a);
}

QuiverType classify(const Quiver& q) {
  // Symmetric elimination on the Cartan matrix (a, b) = a^T C b.
  const std::size_t n = q.size();
  Matrix c(n, n);
  const auto& e = q.euler_matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = Rational(e[i][j] + e[j][i]);
  const Field f = Field::rationals();
  bool definite = true;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational p = c(k, k);
    if (p < Rational(0)) return QuiverType::wild;
    if (p.is_zero()) {
      for (std::size_t j = k; j < n; ++j)
        if (!c(k, j).is_zero()) return QuiverType::wild;
      definite = false;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (c(i, k).is_zero()) continue;
      const Rational factor = f.div(c(i, k), p);
      for (std::size_t j = k; j < n; ++j) c(i, j) = c(i, j) - factor * c(k, j);
    }
    for (std::size_t j = k + 1; j < n; ++j) c(k, j) = Rational(0);
  }
  return definite ? QuiverType::finite : QuiverType::affine;
}

std::string_view to_string(QuiverType t) {
  switch (t) {
    case QuiverType::finite:
      return "finite";
    case QuiverType::affine:
      return "affine";
    default:
      return "wild";
  }
}

DimVector simple_reflect(const Quiver& q, int v, const DimVector& x) {
  return root_reflect(q, DimVector::unit(q.size(), v), x);
}

DimVector root_reflect(const Quiver& q, const DimVector& r, const DimVector& x) {
  return x - symmetrized_form(q, r, x) * r;
}

std::vector<Root> positive_roots(const Quiver& q) {
  if (classify(q) != QuiverType::finite) throw NotFiniteTypeError("positive roots require a finite type quiver");
  std::set<Root> seen;
  std::deque<Root> queue;
  for (int v = 1; v <= q.vertex_count(); ++v) {
    auto e = DimVector::unit(q.size(), v);
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int v = 1; v <= q.vertex_count(); ++v) {
      Root s = simple_reflect(q, v, r);
      if (s.is_nonnegative() && !s.is_zero() && seen.insert(s).second) queue.push_back(s);
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_positive_root(const Quiver& q, const DimVector& v) {
  return v.size() == q.size() && v.is_nonnegative() && !v.is_zero() && symmetrized_form(q, v, v) == 2;
}

std::vector<int> coxeter_element_word(const Quiver& q) { return q.topological_order(); }

}  // namespace quivernc
