#include "quivernc/replab.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quivernc/errors.hpp"
#include "quivernc/weyl.hpp"

namespace quivernc {

namespace {

std::size_t idx(int vertex) { return static_cast<std::size_t>(vertex - 1); }

std::size_t field_slot(const Field& f) {
  switch (f.kind()) {
    case FieldKind::gf2:
      return 1;
    case FieldKind::gf3:
      return 2;
    default:
      return 0;
  }
}

void require_compatible(const Representation& m, const Representation& n) {
  if (!(m.quiver() == n.quiver())) throw DomainError("representations of different quivers");
  if (!(m.field() == n.field())) throw DomainError("representations over different fields");
}

/// Unit vectors completing the columns of b (full column rank) to a basis.
Matrix complement_basis(const Field& f, const Matrix& b, std::size_t d) {
  std::vector<bool> taken(d, false);
  if (b.cols() > 0) {
    for (auto p : rref(f, b.transpose()).pivots) taken[p] = true;
  }
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < d; ++j)
    if (!taken[j]) free.push_back(j);
  Matrix c(d, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) c(free[k], k) = 1;
  return c;
}

/// X with a X = y, for a of full column rank.
Matrix solve_full_rank(const Field& f, const Matrix& a, const Matrix& y) {
  const std::size_t u = a.cols();
  const RowEchelon e = rref(f, hstack(a, y));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] >= u) throw InvariantError("subspace is not invariant under the arrow map");
  }
  if (e.pivots.size() < u) throw InvariantError("subspace basis is not of full rank");
  Matrix x(u, y.cols());
  for (std::size_t r = 0; r < u; ++r)
    for (std::size_t c = 0; c < y.cols(); ++c) x(r, c) = e.reduced(r, u + c);
  return x;
}

struct Path {
  int end = 0;
  std::vector<std::size_t> arrows;
};

std::vector<Path> paths_from(const Quiver& q, int vertex) {
  std::vector<Path> out{{vertex, {}}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
      if (q.arrows()[k].source != out[i].end) continue;
      Path p = out[i];
      p.end = q.arrows()[k].target;
      p.arrows.push_back(k);
      out.push_back(std::move(p));
    }
  }
  return out;
}

/// Paths ending at the vertex; Path::end holds the starting vertex here.
std::vector<Path> paths_to(const Quiver& q, int vertex) {
  std::vector<Path> out{{vertex, {}}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
      if (q.arrows()[k].target != out[i].end) continue;
      Path p = out[i];
      p.end = q.arrows()[k].source;
      p.arrows.insert(p.arrows.begin(), k);
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

Representation::Representation(Quiver q, Field f, DimVector dims, std::vector<Matrix> maps)
    : q_(std::move(q)), f_(f), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.size() != q_.size()) throw DomainError("dimension vector length does not match quiver");
  if (!dims_.is_nonnegative()) throw DomainError("negative dimension");
  if (maps_.size() != q_.arrows().size()) throw DomainError("one matrix per arrow is required");
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const auto& a = q_.arrows()[k];
    if (maps_[k].rows() != dim_at(a.target) || maps_[k].cols() != dim_at(a.source)) {
      throw DomainError("matrix shape of arrow " + std::to_string(k) + " does not match dimensions");
    }
    for (const auto& x : maps_[k].data()) {
      if (!(f_.reduce(x) == x)) throw DomainError("matrix entry outside the field");
    }
  }
}

Representation Representation::zero(const Quiver& q, Field f) {
  std::vector<Matrix> maps(q.arrows().size());
  return Representation(q, f, DimVector(q.size()), std::move(maps));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  require_compatible(a, b);
  const Quiver& q = a.quiver();
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Matrix& x = a.map(k);
    const Matrix& y = b.map(k);
    Matrix m(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) m(r, c) = x(r, c);
    for (std::size_t r = 0; r < y.rows(); ++r)
      for (std::size_t c = 0; c < y.cols(); ++c) m(x.rows() + r, x.cols() + c) = y(r, c);
    maps.push_back(std::move(m));
  }
  return Representation(q, a.field(), a.dims() + b.dims(), std::move(maps));
}

Representation simple_rep(const Quiver& q, int vertex, Field f) {
  if (!q.has_vertex(vertex)) throw DomainError("unknown vertex " + std::to_string(vertex));
  const DimVector d = DimVector::unit(q.size(), vertex);
  std::vector<Matrix> maps;
  for (const auto& a : q.arrows())
    maps.emplace_back(static_cast<std::size_t>(d[idx(a.target)]), static_cast<std::size_t>(d[idx(a.source)]));
  return Representation(q, f, d, std::move(maps));
}

Representation projective_rep(const Quiver& q, int vertex, Field f) {
  if (!q.has_vertex(vertex)) throw DomainError("unknown vertex " + std::to_string(vertex));
  const auto paths = paths_from(q, vertex);
  DimVector d(q.size());
  std::map<std::vector<std::size_t>, std::size_t> position;
  for (const auto& p : paths) position[p.arrows] = static_cast<std::size_t>(d[idx(p.end)]++);
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& a = q.arrows()[k];
    Matrix m(static_cast<std::size_t>(d[idx(a.target)]), static_cast<std::size_t>(d[idx(a.source)]));
    for (const auto& p : paths) {
      if (p.end != a.source) continue;
      auto ext = p.arrows;
      ext.push_back(k);
      m(position.at(ext), position.at(p.arrows)) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation(q, f, d, std::move(maps));
}

Representation injective_rep(const Quiver& q, int vertex, Field f) {
  if (!q.has_vertex(vertex)) throw DomainError("unknown vertex " + std::to_string(vertex));
  const auto paths = paths_to(q, vertex);
  DimVector d(q.size());
  std::map<std::vector<std::size_t>, std::size_t> position;
  for (const auto& p : paths) position[p.arrows] = static_cast<std::size_t>(d[idx(p.end)]++);
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& a = q.arrows()[k];
    Matrix m(static_cast<std::size_t>(d[idx(a.target)]), static_cast<std::size_t>(d[idx(a.source)]));
    for (const auto& p : paths) {
      if (p.end != a.target) continue;
      std::vector<std::size_t> ext{k};
      ext.insert(ext.end(), p.arrows.begin(), p.arrows.end());
      m(position.at(p.arrows), position.at(ext)) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation(q, f, d, std::move(maps));
}

HomBasis hom_basis(const Representation& m, const Representation& n) {
  require_compatible(m, n);
  const Quiver& q = m.quiver();
  const Field& f = m.field();
  std::vector<std::size_t> offset(q.size() + 1, 0);
  for (int v = 1; v <= q.vertex_count(); ++v) offset[idx(v) + 1] = offset[idx(v)] + n.dim_at(v) * m.dim_at(v);
  const std::size_t unknowns = offset.back();
  auto var = [&](int v, std::size_t r, std::size_t c) { return offset[idx(v)] + r * m.dim_at(v) + c; };

  std::size_t equations = 0;
  for (const auto& a : q.arrows()) equations += n.dim_at(a.target) * m.dim_at(a.source);
  Matrix sys(equations, unknowns);
  std::size_t row = 0;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& a = q.arrows()[k];
    const Matrix& ma = m.map(k);
    const Matrix& na = n.map(k);
    for (std::size_t r = 0; r < n.dim_at(a.target); ++r) {
      for (std::size_t c = 0; c < m.dim_at(a.source); ++c, ++row) {
        for (std::size_t j = 0; j < m.dim_at(a.target); ++j) {
          if (!ma(j, c).is_zero()) sys(row, var(a.target, r, j)) = f.add(sys(row, var(a.target, r, j)), ma(j, c));
        }
        for (std::size_t j = 0; j < n.dim_at(a.source); ++j) {
          if (!na(r, j).is_zero()) sys(row, var(a.source, j, c)) = f.sub(sys(row, var(a.source, j, c)), na(r, j));
        }
      }
    }
  }
  const Matrix basis = nullspace(f, sys);
  HomBasis out;
  for (std::size_t b = 0; b < basis.cols(); ++b) {
    Morphism phi;
    for (int v = 1; v <= q.vertex_count(); ++v) {
      Matrix pv(n.dim_at(v), m.dim_at(v));
      for (std::size_t r = 0; r < pv.rows(); ++r)
        for (std::size_t c = 0; c < pv.cols(); ++c) pv(r, c) = basis(var(v, r, c), b);
      phi.push_back(std::move(pv));
    }
    out.elements.push_back(std::move(phi));
  }
  return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) { return hom_basis(m, n).dim(); }

std::int64_t ext_dim(const Quiver& q, const Representation& m, const Representation& n) {
  const auto e = static_cast<std::int64_t>(hom_dim(m, n)) - euler_form(q, m.dims(), n.dims());
  if (e < 0) throw InvariantError("negative Ext dimension");
  return e;
}

bool is_morphism(const Representation& m, const Representation& n, const Morphism& phi) {
  require_compatible(m, n);
  const Quiver& q = m.quiver();
  const Field& f = m.field();
  if (phi.size() != q.size()) return false;
  for (int v = 1; v <= q.vertex_count(); ++v) {
    if (phi[idx(v)].rows() != n.dim_at(v) || phi[idx(v)].cols() != m.dim_at(v)) return false;
  }
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& a = q.arrows()[k];
    if (!(multiply(f, phi[idx(a.target)], m.map(k)) == multiply(f, n.map(k), phi[idx(a.source)]))) return false;
  }
  return true;
}

Representation reflect(const Quiver& q, int vertex, ReflectDirection dir, const Representation& m) {
  if (!(m.quiver() == q)) throw DomainError("representation is not over the given quiver");
  const Field& f = m.field();
  const Quiver rq = q.reflected_at(vertex);
  std::vector<std::size_t> incident;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& a = q.arrows()[k];
    if (a.source == vertex || a.target == vertex) incident.push_back(k);
  }
  std::vector<Matrix> maps = m.maps();
  DimVector dims = m.dims();
  const std::size_t dv = m.dim_at(vertex);

  if (dir == ReflectDirection::plus) {
    if (!q.is_sink(vertex)) throw DomainError("vertex " + std::to_string(vertex) + " is not a sink");
    Matrix h(dv, 0);
    std::vector<std::size_t> offset;
    for (auto k : incident) {
      offset.push_back(h.cols());
      h = hstack(h, m.map(k));
    }
    const Matrix ker = nullspace(f, h);
    for (std::size_t i = 0; i < incident.size(); ++i) {
      const std::size_t ds = m.dim_at(q.arrows()[incident[i]].source);
      Matrix proj(ds, ker.cols());
      for (std::size_t r = 0; r < ds; ++r)
        for (std::size_t c = 0; c < ker.cols(); ++c) proj(r, c) = ker(offset[i] + r, c);
      maps[incident[i]] = std::move(proj);
    }
    dims[idx(vertex)] = static_cast<std::int64_t>(ker.cols());
  } else {
    if (!q.is_source(vertex)) throw DomainError("vertex " + std::to_string(vertex) + " is not a source");
    Matrix g(0, dv);
    std::vector<std::size_t> offset;
    for (auto k : incident) {
      offset.push_back(g.rows());
      g = vstack(g, m.map(k));
    }
    const Matrix coker = left_nullspace(f, g);
    for (std::size_t i = 0; i < incident.size(); ++i) {
      const std::size_t dt = m.dim_at(q.arrows()[incident[i]].target);
      Matrix part(coker.rows(), dt);
      for (std::size_t r = 0; r < coker.rows(); ++r)
        for (std::size_t c = 0; c < dt; ++c) part(r, c) = coker(r, offset[i] + c);
      maps[incident[i]] = std::move(part);
    }
    dims[idx(vertex)] = static_cast<std::int64_t>(coker.rows());
  }
  return Representation(rq, f, std::move(dims), std::move(maps));
}

Representation indecomposable(const Quiver& q, const Root& root, Field f) {
  if (classify(q) != QuiverType::finite) throw NotFiniteTypeError("indecomposables require a finite type quiver");
  if (!is_positive_root(q, root)) throw DomainError("not a positive root: " + root.to_string());

  auto order = q.topological_order();
  std::reverse(order.begin(), order.end());
  Quiver cur = q;
  DimVector x = root;
  std::vector<int> chain;
  int top = 0;
  const std::size_t limit = 64 * q.size() * q.size() + 64;
  for (std::size_t step = 0;; ++step) {
    if (step > limit) throw InvariantError("reflection sequence did not reach a simple root");
    const int v = order[step % order.size()];
    if (!cur.is_sink(v)) throw InvariantError("admissible sink sequence broken");
    if (x == DimVector::unit(q.size(), v)) {
      top = v;
      break;
    }
    x = simple_reflect(cur, v, x);
    if (!x.is_nonnegative()) throw InvariantError("root left the positive cone");
    cur = cur.reflected_at(v);
    chain.push_back(v);
  }
  Representation m = simple_rep(cur, top, f);
  while (!chain.empty()) {
    const int u = chain.back();
    chain.pop_back();
    m = reflect(cur, u, ReflectDirection::minus, m);
    cur = cur.reflected_at(u);
  }
  if (!(m.dims() == root)) throw InvariantError("reflection chain produced the wrong dimension vector");
  return m;
}

namespace {

/// Enumerates k-dimensional subspaces of F^m as m x k column bases in RREF shape.
void for_each_subspace(const Field& f, std::size_t m, const std::function<void(const Matrix&)>& visit) {
  const int p = f.characteristic();
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> free;  // (row of basis vector, coordinate)
      std::vector<bool> is_piv(m, false);
      for (auto c : piv) is_piv[c] = true;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = piv[i] + 1; j < m; ++j)
          if (!is_piv[j]) free.emplace_back(i, j);
      std::vector<int> digits(free.size(), 0);
      while (true) {
        Matrix w(m, k);
        for (std::size_t i = 0; i < k; ++i) w(piv[i], i) = 1;
        for (std::size_t t = 0; t < free.size(); ++t) w(free[t].second, free[t].first) = digits[t];
        visit(w);
        std::size_t t = 0;
        while (t < digits.size() && ++digits[t] == p) digits[t++] = 0;
        if (t == digits.size()) break;
      }
      // next combination
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == m - k + (i - 1)) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}

}  // namespace

void for_each_subrep(const Representation& m, const std::function<void(const SubspaceBases&)>& visit, int cap) {
  const Field& f = m.field();
  if (!f.is_finite()) throw DomainError("subrepresentation enumeration needs a finite field");
  if (m.total_dim() > cap) {
    throw CapExceededError("total dimension " + std::to_string(m.total_dim()) + " exceeds the oracle cap " +
                           std::to_string(cap));
  }
  const Quiver& q = m.quiver();
  const auto order = q.topological_order();
  SubspaceBases bases(q.size());
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == order.size()) {
      visit(bases);
      return;
    }
    const int t = order[pos];
    const std::size_t d = m.dim_at(t);
    Matrix req(d, 0);
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
      if (q.arrows()[k].target != t) continue;
      req = hstack(req, multiply(f, m.map(k), bases[idx(q.arrows()[k].source)]));
    }
    const Matrix rb = column_space(f, req);
    const Matrix comp = complement_basis(f, rb, d);
    for_each_subspace(f, comp.cols(), [&](const Matrix& w) {
      bases[idx(t)] = hstack(rb, multiply(f, comp, w));
      rec(pos + 1);
    });
  };
  rec(0);
}

std::vector<DimVector> subrep_dimvectors(const Representation& m, int cap) {
  std::set<DimVector> out;
  for_each_subrep(
      m,
      [&](const SubspaceBases& u) {
        DimVector d(m.quiver().size());
        for (std::size_t v = 0; v < u.size(); ++v) d[v] = static_cast<std::int64_t>(u[v].cols());
        out.insert(d);
      },
      cap);
  return {out.begin(), out.end()};
}

Representation sub_representation(const Representation& m, const SubspaceBases& u) {
  const Quiver& q = m.quiver();
  const Field& f = m.field();
  DimVector dims(q.size());
  for (std::size_t v = 0; v < q.size(); ++v) dims[v] = static_cast<std::int64_t>(u[v].cols());
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& a = q.arrows()[k];
    maps.push_back(solve_full_rank(f, u[idx(a.target)], multiply(f, m.map(k), u[idx(a.source)])));
  }
  return Representation(q, f, std::move(dims), std::move(maps));
}

Representation quotient_representation(const Representation& m, const SubspaceBases& u) {
  const Quiver& q = m.quiver();
  const Field& f = m.field();
  DimVector dims(q.size());
  std::vector<Matrix> comp(q.size());
  std::vector<Matrix> pinv(q.size());
  for (int v = 1; v <= q.vertex_count(); ++v) {
    comp[idx(v)] = complement_basis(f, u[idx(v)], m.dim_at(v));
    pinv[idx(v)] = inverse(f, hstack(u[idx(v)], comp[idx(v)]));
    dims[idx(v)] = static_cast<std::int64_t>(comp[idx(v)].cols());
  }
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& a = q.arrows()[k];
    const Matrix full = multiply(f, pinv[idx(a.target)], multiply(f, m.map(k), comp[idx(a.source)]));
    const std::size_t skip = u[idx(a.target)].cols();
    Matrix part(full.rows() - skip, full.cols());
    for (std::size_t r = 0; r < part.rows(); ++r)
      for (std::size_t c = 0; c < part.cols(); ++c) part(r, c) = full(skip + r, c);
    maps.push_back(std::move(part));
  }
  return Representation(q, f, std::move(dims), std::move(maps));
}

Representation kernel(const Representation& m, const Representation& n, const Morphism& phi) {
  if (!is_morphism(m, n, phi)) throw DomainError("not a morphism");
  SubspaceBases u;
  for (const auto& p : phi) u.push_back(nullspace(m.field(), p));
  return sub_representation(m, u);
}

Representation cokernel(const Representation& m, const Representation& n, const Morphism& phi) {
  if (!is_morphism(m, n, phi)) throw DomainError("not a morphism");
  SubspaceBases u;
  for (const auto& p : phi) u.push_back(column_space(n.field(), p));
  return quotient_representation(n, u);
}

SubspaceBases image_span(const Representation& n, const std::vector<std::pair<const Representation*, Morphism>>& maps) {
  const Quiver& q = n.quiver();
  SubspaceBases out;
  for (int v = 1; v <= q.vertex_count(); ++v) {
    Matrix span(n.dim_at(v), 0);
    for (const auto& [src, phi] : maps) span = hstack(span, phi[idx(v)]);
    out.push_back(column_space(n.field(), span));
  }
  return out;
}

std::vector<Representation> extension_middle_terms(const Representation& x, const Representation& y) {
  require_compatible(x, y);
  const Quiver& q = x.quiver();
  const Field& f = x.field();
  if (!f.is_finite()) throw DomainError("extension enumeration needs a finite field");

  // Cochains c_a in Hom_k(X_s, Y_t), flattened per arrow.
  std::vector<std::size_t> coff(q.arrows().size() + 1, 0);
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& a = q.arrows()[k];
    coff[k + 1] = coff[k] + y.dim_at(a.target) * x.dim_at(a.source);
  }
  std::vector<std::size_t> hoff(q.size() + 1, 0);
  for (int v = 1; v <= q.vertex_count(); ++v) hoff[idx(v) + 1] = hoff[idx(v)] + y.dim_at(v) * x.dim_at(v);

  // Coboundary h -> (Y_a h_s - h_t X_a).
  Matrix delta(coff.back(), hoff.back());
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& a = q.arrows()[k];
    const std::size_t xs = x.dim_at(a.source);
    const std::size_t xt = x.dim_at(a.target);
    const std::size_t ys = y.dim_at(a.source);
    const std::size_t yt = y.dim_at(a.target);
    for (std::size_t r = 0; r < yt; ++r)
      for (std::size_t c = 0; c < xs; ++c) {
        const std::size_t row = coff[k] + r * xs + c;
        for (std::size_t j = 0; j < ys; ++j) {
          const std::size_t col = hoff[idx(a.source)] + j * xs + c;
          delta(row, col) = f.add(delta(row, col), y.map(k)(r, j));
        }
        for (std::size_t j = 0; j < xt; ++j) {
          const std::size_t col = hoff[idx(a.target)] + r * xt + j;
          delta(row, col) = f.sub(delta(row, col), x.map(k)(j, c));
        }
      }
  }
  const Matrix comp = complement_basis(f, column_space(f, delta), coff.back());
  const std::size_t e = comp.cols();
  const int p = f.characteristic();
  std::vector<Representation> out;
  std::vector<int> coeff(e, 0);
  while (true) {
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
      const auto& a = q.arrows()[k];
      const std::size_t xs = x.dim_at(a.source);
      const std::size_t xt = x.dim_at(a.target);
      const std::size_t ys = y.dim_at(a.source);
      const std::size_t yt = y.dim_at(a.target);
      Matrix ea(yt + xt, ys + xs);
      for (std::size_t r = 0; r < yt; ++r)
        for (std::size_t c = 0; c < ys; ++c) ea(r, c) = y.map(k)(r, c);
      for (std::size_t r = 0; r < xt; ++r)
        for (std::size_t c = 0; c < xs; ++c) ea(yt + r, ys + c) = x.map(k)(r, c);
      for (std::size_t r = 0; r < yt; ++r)
        for (std::size_t c = 0; c < xs; ++c) {
          Rational v(0);
          for (std::size_t b = 0; b < e; ++b)
            if (coeff[b] != 0) v = f.add(v, f.mul(f.from_int(coeff[b]), comp(coff[k] + r * xs + c, b)));
          ea(r, ys + c) = v;
        }
      maps.push_back(std::move(ea));
    }
    out.emplace_back(q, f, x.dims() + y.dims(), std::move(maps));
    std::size_t t = 0;
    while (t < e && ++coeff[t] == p) coeff[t++] = 0;
    if (t == e) break;
  }
  return out;
}

std::vector<DimVector> projective_dims(const Quiver& q) {
  std::vector<DimVector> out;
  for (int v = 1; v <= q.vertex_count(); ++v) {
    DimVector d(q.size());
    for (const auto& p : paths_from(q, v)) ++d[idx(p.end)];
    out.push_back(d);
  }
  return out;
}

std::vector<DimVector> injective_dims(const Quiver& q) {
  std::vector<DimVector> out;
  for (int v = 1; v <= q.vertex_count(); ++v) {
    DimVector d(q.size());
    for (const auto& p : paths_to(q, v)) ++d[idx(p.end)];
    out.push_back(d);
  }
  return out;
}

std::optional<Root> tau(const Quiver& q, const Root& root) {
  if (!is_positive_root(q, root)) throw DomainError("not a positive root: " + root.to_string());
  const auto proj = projective_dims(q);
  if (std::find(proj.begin(), proj.end(), root) != proj.end()) return std::nullopt;
  const Root r = coxeter_element(q).apply(root);
  if (!r.is_nonnegative()) throw InvariantError("tau of a non-projective root is not positive");
  return r;
}

std::optional<Root> tau_inverse(const Quiver& q, const Root& root) {
  if (!is_positive_root(q, root)) throw DomainError("not a positive root: " + root.to_string());
  const auto inj = injective_dims(q);
  if (std::find(inj.begin(), inj.end(), root) != inj.end()) return std::nullopt;
  const Root r = coxeter_element(q).inverse().apply(root);
  if (!r.is_nonnegative()) throw InvariantError("inverse tau of a non-injective root is not positive");
  return r;
}

std::vector<std::size_t> ARQuiver::predecessors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& [s, t] : edges)
    if (t == v) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> ARQuiver::successors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& [s, t] : edges)
    if (s == v) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

ARQuiver ar_quiver(const Quiver& q) {
  ARQuiver ar;
  ar.vertices = positive_roots(q);
  const GroupElement cinv = coxeter_element(q).inverse();
  std::map<std::pair<int, int>, std::size_t> position;
  std::vector<bool> covered(ar.vertices.size(), false);
  const auto proj = projective_dims(q);
  for (int v = 1; v <= q.vertex_count(); ++v) {
    DimVector x = proj[idx(v)];
    for (int k = 0; x.is_nonnegative() && !x.is_zero(); ++k) {
      auto it = std::lower_bound(ar.vertices.begin(), ar.vertices.end(), x);
      if (it == ar.vertices.end() || !(*it == x)) throw InvariantError("knitting produced a non-root");
      const auto i = static_cast<std::size_t>(it - ar.vertices.begin());
      if (covered[i]) throw InvariantError("knitting reached a root twice");
      covered[i] = true;
      position[{v, k}] = i;
      x = cinv.apply(x);
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw InvariantError("knitting missed a root");
  }
  for (const auto& a : q.arrows()) {
    for (int k = 0;; ++k) {
      auto ik = position.find({a.source, k});
      auto jk = position.find({a.target, k});
      auto jk1 = position.find({a.target, k + 1});
      if (jk != position.end() && ik != position.end()) ar.edges.emplace_back(jk->second, ik->second);
      if (ik != position.end() && jk1 != position.end()) ar.edges.emplace_back(ik->second, jk1->second);
      if (ik == position.end() && jk == position.end()) break;
    }
  }
  std::sort(ar.edges.begin(), ar.edges.end());
  return ar;
}

RepCategory::RepCategory(Quiver q, int oracle_cap) : q_(std::move(q)), roots_(positive_roots(q_)), cap_(oracle_cap) {
  if (roots_.size() > 64) throw CapExceededError("at most 64 positive roots are supported");
  const auto& reps = indecs(Field::rationals());
  const std::size_t n = roots_.size();
  hom_.assign(n, std::vector<std::size_t>(n, 0));
  ext_.assign(n, std::vector<std::size_t>(n, 0));
  hom_bases_.assign(n, std::vector<HomBasis>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      hom_bases_[i][j] = hom_basis(reps[i], reps[j]);
      hom_[i][j] = hom_bases_[i][j].dim();
      const auto e = static_cast<std::int64_t>(hom_[i][j]) - euler_form(q_, roots_[i], roots_[j]);
      if (e < 0) throw InvariantError("negative Ext dimension");
      ext_[i][j] = static_cast<std::size_t>(e);
    }
  const auto proj = projective_dims(q_);
  projective_.assign(n, false);
  for (std::size_t i = 0; i < n; ++i)
    projective_[i] = std::find(proj.begin(), proj.end(), roots_[i]) != proj.end();

  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = Rational(static_cast<std::int64_t>(hom_[i][j]));
  const Matrix hinv = inverse(Field::rationals(), h);
  hom_inverse_.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hom_inverse_[i][j] = hinv(i, j);
}

std::optional<std::size_t> RepCategory::index_of(const Root& r) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), r);
  if (it == roots_.end() || !(*it == r)) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

std::size_t RepCategory::require_index(const Root& r) const {
  auto i = index_of(r);
  if (!i) throw DomainError("not a positive root: " + r.to_string());
  return *i;
}

const std::vector<Representation>& RepCategory::indecs(Field f) const {
  const std::size_t slot = field_slot(f);
  std::call_once(once_[slot], [&] {
    std::vector<Representation> reps;
    for (const auto& r : roots_) reps.push_back(indecomposable(q_, r, f));
    by_field_[slot] = std::move(reps);
  });
  return by_field_[slot];
}

std::vector<std::size_t> RepCategory::decompose(const Representation& m) const {
  if (!(m.quiver() == q_)) throw DomainError("representation is not over this quiver");
  const std::size_t n = roots_.size();
  const auto& reps = indecs(m.field());
  std::vector<Rational> finger(n);
  for (std::size_t i = 0; i < n; ++i) finger[i] = Rational(static_cast<std::int64_t>(hom_dim(reps[i], m)));
  std::vector<std::size_t> mult(n, 0);
  DimVector total(q_.size());
  for (std::size_t i = 0; i < n; ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < n; ++j) s = s + hom_inverse_[i][j] * finger[j];
    if (!s.is_integer() || s.num() < 0) throw InvariantError("Hom fingerprint does not match a decomposition");
    mult[i] = static_cast<std::size_t>(s.num());
    total = total + s.num() * roots_[i];
  }
  if (!(total == m.dims())) throw InvariantError("Hom fingerprint does not match the dimension vector");
  return mult;
}

std::uint64_t RepCategory::summand_mask(const Representation& m) const {
  const auto mult = decompose(m);
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] > 0) mask |= std::uint64_t{1} << i;
  return mask;
}

std::vector<Morphism> all_morphisms(const Representation& m, const Representation& n) {
  const Field& f = m.field();
  if (!f.is_finite()) throw DomainError("morphism enumeration needs a finite field");
  const HomBasis basis = hom_basis(m, n);
  const int p = f.characteristic();
  std::vector<Morphism> out;
  std::vector<int> coeff(basis.dim(), 0);
  while (true) {
    Morphism phi;
    for (int v = 1; v <= m.quiver().vertex_count(); ++v) {
      Matrix pv(n.dim_at(v), m.dim_at(v));
      for (std::size_t b = 0; b < basis.dim(); ++b)
        if (coeff[b] != 0) pv = add(f, pv, scale(f, f.from_int(coeff[b]), basis.elements[b][idx(v)]));
      phi.push_back(std::move(pv));
    }
    out.push_back(std::move(phi));
    std::size_t t = 0;
    while (t < coeff.size() && ++coeff[t] == p) coeff[t++] = 0;
    if (t == coeff.size()) break;
  }
  return out;
}

Field RepCategory::oracle_field() const {
  for (const auto& r : roots_)
    for (auto c : r.coords())
      if (c > 1) return Field::gf3();
  return Field::gf2();
}

const OracleTables& RepCategory::oracle() const {
  std::call_once(oracle_once_, [&] {
    auto t = std::make_unique<OracleTables>();
    t->cap = cap_;
    const std::size_t n = roots_.size();
    const auto& reps = indecs(oracle_field());
    t->quotient_summands.assign(n, 0);
    t->subobject_summands.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      std::set<std::uint64_t> subs;
      for_each_subrep(
          reps[i],
          [&](const SubspaceBases& u) {
            t->quotient_summands[i] |= summand_mask(quotient_representation(reps[i], u));
            std::int64_t d = 0;
            for (const auto& b : u) d += static_cast<std::int64_t>(b.cols());
            if (d > 0 && d < reps[i].total_dim()) subs.insert(summand_mask(sub_representation(reps[i], u)));
          },
          cap_);
      t->subobject_summands[i].assign(subs.begin(), subs.end());
    }
    t->extension_summands.assign(n, std::vector<std::uint64_t>(n, 0));
    t->kernel_summands.assign(n, std::vector<std::uint64_t>(n, 0));
    t->cokernel_summands.assign(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (reps[i].total_dim() + reps[j].total_dim() > cap_) {
          throw CapExceededError("extension of total dimension above the oracle cap " + std::to_string(cap_));
        }
        for (const auto& e : extension_middle_terms(reps[j], reps[i])) t->extension_summands[i][j] |= summand_mask(e);
        for (const auto& phi : all_morphisms(reps[i], reps[j])) {
          t->kernel_summands[i][j] |= summand_mask(kernel(reps[i], reps[j], phi));
          t->cokernel_summands[i][j] |= summand_mask(cokernel(reps[i], reps[j], phi));
        }
      }
    oracle_ = std::move(t);
  });
  return *oracle_;
}

std::vector<Root> decompose(const RepCategory& cat, const Representation& m) {
  const auto mult = cat.decompose(m);
  std::vector<Root> out;
  for (std::size_t i = 0; i < mult.size(); ++i)
    for (std::size_t k = 0; k < mult[i]; ++k) out.push_back(cat.roots()[i]);
  return out;
}

}  // namespace quivernc
