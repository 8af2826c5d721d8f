#pragma once

// Exact arithmetic in prime fields GF(p) and binary extension fields GF(2^e).
//
// Elements are canonical integers in [0, q). For GF(2^e) the base-2 digits of
// the value are the polynomial coefficients, reduced modulo the field's
// irreducible modulus.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "lrc/bigint.hpp"

namespace lrc::gf {

enum class Preference { Prime, Binary };

inline constexpr std::uint64_t kDefaultFieldCeiling = std::uint64_t{1} << 31;
inline constexpr int kMaxBinaryDegree = 31;

bool is_prime(std::uint64_t n) noexcept;

/// True iff `poly` (bitmask, bit i = coefficient of x^i) has degree >= 1 and no
/// nontrivial factor over GF(2).
bool is_irreducible_gf2(std::uint64_t poly) noexcept;

/// Fixed modulus for GF(2^degree), 2 <= degree <= 16; smallest irreducible by
/// search for 17 <= degree <= 31.
std::uint64_t default_modulus(int degree);

class Element;

class Field {
 public:
  /// Throws CompositeCharacteristic, ReduciblePolynomial, UnsupportedExtension,
  /// BoundTooLarge (characteristic beyond 32 bits).
  static Field make(std::uint64_t characteristic, int degree = 1,
                    std::optional<std::uint64_t> modulus_poly = std::nullopt);

  std::uint32_t characteristic() const noexcept;
  int degree() const noexcept;
  /// 0 for prime fields.
  std::uint64_t modulus_poly() const noexcept;
  std::uint64_t order() const noexcept;
  bool is_prime_field() const noexcept { return degree() == 1; }

  std::uint32_t canonical(std::uint64_t raw) const noexcept;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg(std::uint32_t a) const noexcept;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t inv(std::uint32_t a) const;  // DivisionByZero on 0
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::int64_t e) const;

  /// dst += c * src, elementwise. Spans must have equal length.
  void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
            std::uint32_t c) const;
  void scale(std::span<std::uint32_t> dst, std::uint32_t c) const;
  /// Sum of a[i] * b[i].
  std::uint32_t dot(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const;

  Element element(std::uint64_t raw) const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) noexcept;

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Smallest prime >= bound, or smallest 2^e >= bound. BoundTooLarge past `ceiling`.
Field field_at_least(const BigInt& bound, Preference prefer,
                     std::uint64_t ceiling = kDefaultFieldCeiling);

class Element {
 public:
  Element(Field field, std::uint64_t raw) : field_(std::move(field)), value_(field_.canonical(raw)) {}

  const Field& field() const noexcept { return field_; }
  std::uint32_t value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Element inv() const;
  Element pow(std::int64_t e) const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  friend bool operator==(const Element& a, const Element& b);

 private:
  Field field_;
  std::uint32_t value_;
};

enum class Op { Add, Sub, Mul, Div, Neg, Inv, Pow };

/// Single entry point over the field operations. `b` is an element for the
/// binary operators, an integer exponent for Pow, and ignored for Neg/Inv.
Element arith(Op op, const Element& a, const std::variant<Element, std::int64_t>& b = std::int64_t{0});

}  // namespace lrc::gf
