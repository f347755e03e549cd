#include "quivernc/stab.hpp"

#include <algorithm>

#include "quivernc/errors.hpp"

namespace quivernc {

namespace {

std::vector<int> off_support(const RepCategory& cat, const IndecSet& c) {
  const auto supp = c.support(cat.quiver().size());
  std::vector<int> out;
  for (int v = 1; v <= cat.quiver().vertex_count(); ++v)
    if (!std::binary_search(supp.begin(), supp.end(), v)) out.push_back(v);
  return out;
}

std::vector<bool> split_flags(const RepCategory& cat, const IndecSet& c) {
  const IndecSet split = split_projectives(cat, gen(cat, c));
  std::vector<bool> out;
  for (const auto& r : c) out.push_back(split.contains(r));
  return out;
}

}  // namespace

std::int64_t Stability::operator()(const DimVector& v) const {
  if (v.size() != coeffs.size()) throw DomainError("stability/dimension vector size mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * v[i];
  return s;
}

bool Stability::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t x) { return x == 0; });
}

std::string Stability::to_string() const { return DimVector(coeffs).to_string(); }

ThetaCoefficients default_coefficients(const RepCategory& cat, const IndecSet& c) {
  ThetaCoefficients k;
  for (bool s : split_flags(cat, c)) k.a.push_back(s ? 0 : 1);
  k.b.assign(off_support(cat, c).size(), -1);
  return k;
}

ThetaCoefficients random_coefficients(const RepCategory& cat, const IndecSet& c, std::mt19937& rng) {
  std::uniform_int_distribution<int> pos(1, 3);
  std::uniform_int_distribution<int> neg(1, 2);
  ThetaCoefficients k;
  for (bool s : split_flags(cat, c)) k.a.push_back(s ? 0 : pos(rng));
  for (std::size_t j = 0; j < off_support(cat, c).size(); ++j) k.b.push_back(-neg(rng));
  return k;
}

Stability theta_of_support_tilting(const RepCategory& cat, const IndecSet& c, const ThetaCoefficients& k) {
  if (!is_support_tilting(cat, c)) throw DomainError("not support tilting: " + c.to_string());
  const auto off = off_support(cat, c);
  if (k.a.size() != c.size() || k.b.size() != off.size()) throw DomainError("coefficient count mismatch");
  const auto split = split_flags(cat, c);
  const auto& e = cat.quiver().euler_matrix();
  const std::size_t n = cat.quiver().size();
  Stability theta{std::vector<std::int64_t>(n, 0)};
  std::size_t i = 0;
  for (const auto& t : c) {
    const std::int64_t a = k.a[i];
    if (split[i] ? a != 0 : a <= 0) {
      throw DomainError("coefficient " + std::to_string(a) + " invalid for " + (split[i] ? "split" : "non-split") +
                        " summand " + t.to_string());
    }
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t row = 0; row < n; ++row) theta.coeffs[col] += a * t[row] * e[row][col];
    ++i;
  }
  for (std::size_t j = 0; j < off.size(); ++j) {
    if (k.b[j] >= 0) throw DomainError("off-support coefficient must be negative");
    theta.coeffs[static_cast<std::size_t>(off[j] - 1)] += k.b[j];
  }
  return theta;
}

bool is_semistable(const Stability& theta, const Representation& m, int cap) {
  if (theta(m.dims()) != 0) return false;
  for (const auto& d : subrep_dimvectors(m, cap))
    if (theta(d) > 0) return false;
  return true;
}

bool is_semistable_by_quotients(const Stability& theta, const Representation& m, int cap) {
  if (theta(m.dims()) != 0) return false;
  bool ok = true;
  for_each_subrep(
      m,
      [&](const SubspaceBases& u) {
        if (ok && theta(quotient_representation(m, u).dims()) < 0) ok = false;
      },
      cap);
  return ok;
}

IndecSet semistable_indecs(const RepCategory& cat, const Stability& theta) {
  std::vector<Root> out;
  const auto& reps = cat.indecs(Field::gf2());
  for (std::size_t i = 0; i < cat.size(); ++i)
    if (is_semistable(theta, reps[i], cat.oracle_cap())) out.push_back(cat.roots()[i]);
  return IndecSet(std::move(out));
}

Report verify_semistable_theorem(const RepCategory& cat, const IndecSet& c, const ThetaCoefficients& k) {
  Report r{"semistable-theorem", 0, {}};
  const Stability theta = theta_of_support_tilting(cat, c, k);
  const IndecSet ss = semistable_indecs(cat, theta);
  const IndecSet a = a_of(cat, gen(cat, c));
  r.record(ss == a, "C=" + c.to_string() + " theta=" + theta.to_string() + " semistable=" + ss.to_string() +
                        " a(Gen C)=" + a.to_string());
  return r;
}

Report stability_suite(const RepCategory& cat, std::uint64_t seed, int random_draws) {
  Report r{"stability", 0, {}};
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  const auto& reps = cat.indecs(Field::gf2());
  for (const auto& c : enumerate_support_tilting(cat)) {
    std::vector<ThetaCoefficients> choices{default_coefficients(cat, c)};
    for (int d = 0; d < random_draws; ++d) choices.push_back(random_coefficients(cat, c, rng));
    for (const auto& k : choices) {
      r.merge(verify_semistable_theorem(cat, c, k));
      const Stability theta = theta_of_support_tilting(cat, c, k);
      const IndecSet ss = semistable_indecs(cat, theta);
      r.record(is_wide(cat, ss), "semistable set not wide: " + ss.to_string());
      for (std::size_t i = 0; i < cat.size(); ++i) {
        const bool sub = ss.contains(cat.roots()[i]);
        const bool quo = is_semistable_by_quotients(theta, reps[i], cat.oracle_cap());
        r.record(sub == quo, "quotient-side mismatch at " + cat.roots()[i].to_string() + " theta=" + theta.to_string());
      }
    }
  }
  return r;
}

}  // namespace quivernc
