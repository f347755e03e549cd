#include "quivernc/arith.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "quivernc/errors.hpp"

namespace quivernc {

namespace {

using wide = __int128;

constexpr wide kMax = std::numeric_limits<std::int64_t>::max();
constexpr wide kMin = std::numeric_limits<std::int64_t>::min();

wide wide_gcd(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod_p(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t inverse_mod_p(std::int64_t v, std::int64_t p) {
  v = mod_p(v, p);
  if (v == 0) throw DomainError("division by zero in finite field");
  for (std::int64_t x = 1; x < p; ++x) {
    if ((v * x) % p == 1) return x;
  }
  throw InvariantError("no inverse in prime field");
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(wide num, wide den) {
  if (den == 0) throw DomainError("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < kMin || den > kMax) throw OverflowError("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::operator-() const { return from_wide(-static_cast<wide>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(wide{a.num_} + b.num_, 1);
  return Rational::from_wide(wide{a.num_} * b.den_ + wide{b.num_} * a.den_, wide{a.den_} * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(wide{a.num_} - b.num_, 1);
  return Rational::from_wide(wide{a.num_} * b.den_ - wide{b.num_} * a.den_, wide{a.den_} * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(wide{a.num_} * b.num_, wide{a.den_} * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("division by zero");
  return Rational::from_wide(wide{a.num_} * b.den_, wide{a.den_} * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  wide lhs = wide{a.num_} * b.den_;
  wide rhs = wide{b.num_} * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw DomainError("invalid rational: " + std::string(s));
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

int Field::characteristic() const noexcept {
  switch (kind_) {
    case FieldKind::gf2:
      return 2;
    case FieldKind::gf3:
      return 3;
    default:
      return 0;
  }
}

Rational Field::reduce(const Rational& a) const {
  if (!is_finite()) return a;
  const std::int64_t p = characteristic();
  std::int64_t num = mod_p(a.num(), p);
  if (a.den() == 1) return Rational(num);
  return Rational(mod_p(num * inverse_mod_p(a.den(), p), p));
}

Rational Field::from_int(std::int64_t v) const {
  if (!is_finite()) return Rational(v);
  return Rational(mod_p(v, characteristic()));
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (!is_finite()) return a + b;
  return Rational((a.num() + b.num()) % characteristic());
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (!is_finite()) return a - b;
  return Rational(mod_p(a.num() - b.num(), characteristic()));
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (!is_finite()) return a * b;
  return Rational((a.num() * b.num()) % characteristic());
}

Rational Field::div(const Rational& a, const Rational& b) const {
  if (!is_finite()) return a / b;
  const std::int64_t p = characteristic();
  return Rational((a.num() * inverse_mod_p(b.num(), p)) % p);
}

Rational Field::neg(const Rational& a) const {
  if (!is_finite()) return -a;
  return Rational(mod_p(-a.num(), characteristic()));
}

std::string_view Field::name() const noexcept {
  switch (kind_) {
    case FieldKind::gf2:
      return "GF2";
    case FieldKind::gf3:
      return "GF3";
    default:
      return "Q";
  }
}

Field Field::from_name(std::string_view name) {
  if (name == "Q") return rationals();
  if (name == "GF2") return gf2();
  if (name == "GF3") return gf3();
  throw DomainError("unknown field: " + std::string(name));
}

}  // namespace quivernc
