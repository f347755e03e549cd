#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace quivernc {

/// Exact fraction with 64-bit numerator and denominator. Always kept in lowest
/// terms with a positive denominator. Intermediate products use 128-bit
/// integers; results that do not fit in 64 bits raise OverflowError.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class FieldKind { rationals, gf2, gf3 };

/// Scalar field for representation matrices. Elements of GF(p) are stored as
/// integral Rationals in [0, p), so every matrix shares one element type.
class Field {
 public:
  constexpr Field() = default;
  constexpr explicit Field(FieldKind kind) : kind_(kind) {}

  static constexpr Field rationals() { return Field(FieldKind::rationals); }
  static constexpr Field gf2() { return Field(FieldKind::gf2); }
  static constexpr Field gf3() { return Field(FieldKind::gf3); }

  FieldKind kind() const noexcept { return kind_; }
  /// 0 for the rationals.
  int characteristic() const noexcept;
  bool is_finite() const noexcept { return kind_ != FieldKind::rationals; }
  /// Number of elements of a finite field; 0 for the rationals.
  int order() const noexcept { return characteristic(); }

  Rational from_int(std::int64_t v) const;
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational div(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  /// Maps an arbitrary rational into the field (denominators must be invertible).
  Rational reduce(const Rational& a) const;

  /// "Q", "GF2" or "GF3".
  std::string_view name() const noexcept;
  static Field from_name(std::string_view name);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  FieldKind kind_ = FieldKind::rationals;
};

}  // namespace quivernc

template <>
struct std::hash<quivernc::Rational> {
  std::size_t operator()(const quivernc::Rational& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 31u + std::hash<std::int64_t>{}(r.den());
  }
};
