#include "lrc/gf.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <sstream>
#include <utility>
#include <vector>

#include "lrc/error.hpp"
#include "lrc/simd.hpp"

namespace lrc {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace lrc

namespace lrc::gf {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

int poly_degree(u64 poly) { return poly == 0 ? -1 : 63 - std::countl_zero(poly); }

u64 gf2_mod(u64 a, u64 m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

// Built-in moduli, one per degree; bit i is the coefficient of x^i.
constexpr std::array<u64, 17> kBuiltinModuli = {
    0,       0,
    0x7,      // x^2+x+1
    0xB,      // x^3+x+1
    0x13,     // x^4+x+1
    0x25,     // x^5+x^2+1
    0x43,     // x^6+x+1
    0x83,     // x^7+x+1
    0x11D,    // x^8+x^4+x^3+x^2+1
    0x211,    // x^9+x^4+1
    0x409,    // x^10+x^3+1
    0x805,    // x^11+x^2+1
    0x1053,   // x^12+x^6+x^4+x+1
    0x201B,   // x^13+x^4+x^3+x+1
    0x4443,   // x^14+x^10+x^6+x+1
    0x8003,   // x^15+x+1
    0x1100B,  // x^16+x^12+x^3+x+1
};

constexpr int kTableMaxDegree = 16;

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n with these bases.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_irreducible_gf2(u64 poly) noexcept {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  if (d == 1) return true;
  for (u64 f = 2; poly_degree(f) <= d / 2; ++f) {
    if (gf2_mod(poly, f) == 0) return false;
  }
  return true;
}

u64 default_modulus(int degree) {
  if (degree < 2 || degree > kMaxBinaryDegree)
    throw Error(ErrorKind::UnsupportedExtension, "no default modulus for degree " + std::to_string(degree));
  if (degree <= kTableMaxDegree) return kBuiltinModuli[static_cast<std::size_t>(degree)];
  const u64 top = u64{1} << degree;
  for (u64 low = 1; low < top; low += 2) {
    if (is_irreducible_gf2(top | low)) return top | low;
  }
  throw Error(ErrorKind::UnsupportedExtension, "no irreducible polynomial found");
}

struct Field::Impl {
  std::uint32_t p = 0;
  int e = 1;
  u64 poly = 0;
  u64 q = 0;
  // GF(2^e) with e <= 16: exp has 2(q-1) entries so log sums need no reduction.
  std::vector<std::uint32_t> exp;
  std::vector<std::uint32_t> log;

  std::uint32_t binary_mul_slow(std::uint32_t a, std::uint32_t b) const {
    u64 x = a;
    u64 r = 0;
    const u64 high = u64{1} << e;
    for (u64 y = b; y != 0; y >>= 1) {
      if (y & 1) r ^= x;
      x <<= 1;
      if (x & high) x ^= poly;
    }
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (e == 1) return static_cast<std::uint32_t>(static_cast<u64>(a) * b % p);
    if (a == 0 || b == 0) return 0;
    if (!exp.empty()) return exp[log[a] + log[b]];
    return binary_mul_slow(a, b);
  }

  void build_tables() {
    const auto order = static_cast<std::uint32_t>(q - 1);
    // The modulus need not be primitive, so search for a generator.
    for (std::uint32_t g = 2; g < q; ++g) {
      std::vector<std::uint32_t> powers;
      powers.reserve(order);
      std::uint32_t x = 1;
      do {
        powers.push_back(x);
        x = binary_mul_slow(x, g);
      } while (x != 1 && powers.size() <= order);
      if (powers.size() != order) continue;
      exp.assign(2 * static_cast<std::size_t>(order), 0);
      log.assign(q, 0);
      for (std::uint32_t i = 0; i < order; ++i) {
        exp[i] = powers[i];
        exp[i + order] = powers[i];
        log[powers[i]] = i;
      }
      return;
    }
    // GF(2) never reaches here (e >= 2); GF(4) and up always have a generator.
    assert(false);
  }
};

Field Field::make(u64 characteristic, int degree, std::optional<u64> modulus_poly) {
  if (degree < 1) throw Error(ErrorKind::UnsupportedExtension, "degree must be >= 1");
  if (characteristic > 0xFFFFFFFFull)
    throw Error(ErrorKind::BoundTooLarge, "characteristic exceeds 32 bits");
  if (!is_prime(characteristic))
    throw Error(ErrorKind::CompositeCharacteristic, std::to_string(characteristic) + " is not prime");
  auto impl = std::make_shared<Impl>();
  impl->p = static_cast<std::uint32_t>(characteristic);
  impl->e = degree;
  if (degree == 1) {
    impl->q = characteristic;
    return Field(std::move(impl));
  }
  if (characteristic != 2)
    throw Error(ErrorKind::UnsupportedExtension, "extension fields require characteristic 2");
  if (degree > kMaxBinaryDegree)
    throw Error(ErrorKind::UnsupportedExtension, "degree above " + std::to_string(kMaxBinaryDegree));
  const u64 poly = modulus_poly ? *modulus_poly : default_modulus(degree);
  if (poly_degree(poly) != degree)
    throw Error(ErrorKind::UnsupportedExtension, "modulus degree does not match field degree");
  if (!is_irreducible_gf2(poly))
    throw Error(ErrorKind::ReduciblePolynomial, "modulus is reducible over GF(2)");
  impl->poly = poly;
  impl->q = u64{1} << degree;
  if (degree <= kTableMaxDegree) impl->build_tables();
  return Field(std::move(impl));
}

std::uint32_t Field::characteristic() const noexcept { return impl_->p; }
int Field::degree() const noexcept { return impl_->e; }
u64 Field::modulus_poly() const noexcept { return impl_->poly; }
u64 Field::order() const noexcept { return impl_->q; }

std::uint32_t Field::canonical(u64 raw) const noexcept {
  if (impl_->e == 1) return static_cast<std::uint32_t>(raw % impl_->p);
  return static_cast<std::uint32_t>(gf2_mod(raw, impl_->poly));
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const noexcept {
  if (impl_->e > 1) return a ^ b;
  const u64 s = static_cast<u64>(a) + b;
  return static_cast<std::uint32_t>(s >= impl_->p ? s - impl_->p : s);
}

std::uint32_t Field::neg(std::uint32_t a) const noexcept {
  if (impl_->e > 1 || a == 0) return a;
  return impl_->p - a;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const noexcept { return impl_->mul(a, b); }

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const Impl& f = *impl_;
  if (f.e == 1) {
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = f.p, new_r = a;
    while (new_r != 0) {
      const std::int64_t quot = r / new_r;
      t = std::exchange(new_t, t - quot * new_t);
      r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0) t += f.p;
    return static_cast<std::uint32_t>(t);
  }
  if (!f.exp.empty()) {
    const auto order = static_cast<std::uint32_t>(f.q - 1);
    return f.exp[(order - f.log[a]) % order];
  }
  return pow(a, static_cast<std::int64_t>(f.q - 2));
}

std::uint32_t Field::div(std::uint32_t a, std::uint32_t b) const {
  if (b == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

std::uint32_t Field::pow(std::uint32_t a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  std::uint32_t r = 1;
  std::uint32_t base = a;
  for (auto k = static_cast<u64>(e); k != 0; k >>= 1) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
  }
  return r;
}

void Field::axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                 std::uint32_t c) const {
  assert(dst.size() == src.size());
  if (c == 0) return;
  const Impl& f = *impl_;
  if (f.e == 1) {
    simd::active_kernels().axpy_mod(dst.data(), src.data(), dst.size(), c, f.p);
    return;
  }
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (src[i] != 0) dst[i] ^= f.mul(c, src[i]);
  }
}

void Field::scale(std::span<std::uint32_t> dst, std::uint32_t c) const {
  const Impl& f = *impl_;
  if (f.e == 1) {
    simd::active_kernels().scale_mod(dst.data(), dst.size(), c, f.p);
    return;
  }
  for (auto& x : dst) x = f.mul(c, x);
}

std::uint32_t Field::dot(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const {
  assert(a.size() == b.size());
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = add(acc, mul(a[i], b[i]));
  return acc;
}

Element Field::element(u64 raw) const { return Element(*this, raw); }

std::string Field::describe() const {
  std::ostringstream os;
  if (impl_->e == 1) {
    os << "GF(" << impl_->p << ")";
  } else {
    os << "GF(2^" << impl_->e << ", poly=0x" << std::hex << impl_->poly << ")";
  }
  return os.str();
}

bool operator==(const Field& a, const Field& b) noexcept {
  return a.impl_ == b.impl_ ||
         (a.impl_->p == b.impl_->p && a.impl_->e == b.impl_->e && a.impl_->poly == b.impl_->poly);
}

Field field_at_least(const BigInt& bound, Preference prefer, u64 ceiling) {
  if (bound > BigInt(ceiling))
    throw Error(ErrorKind::BoundTooLarge, "requested field size exceeds the configured ceiling");
  const u64 b = std::max<u64>(2, bound.convert_to<u64>());
  if (prefer == Preference::Prime) {
    u64 p = b;
    while (!is_prime(p)) ++p;
    if (p > ceiling) throw Error(ErrorKind::BoundTooLarge, "no prime below the ceiling");
    return Field::make(p);
  }
  int e = 1;
  while ((u64{1} << e) < b) ++e;
  if ((u64{1} << e) > ceiling) throw Error(ErrorKind::BoundTooLarge, "2^e exceeds the ceiling");
  return e == 1 ? Field::make(2) : Field::make(2, e);
}

namespace {

void require_same(const Element& a, const Element& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorKind::FieldMismatch,
                "operands from " + a.field().describe() + " and " + b.field().describe());
}

}  // namespace

Element Element::inv() const { return Element(field_, field_.inv(value_)); }
Element Element::pow(std::int64_t e) const { return Element(field_, field_.pow(value_, e)); }

Element operator+(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(a.field_, a.field_.add(a.value_, b.value_));
}

Element operator-(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(a.field_, a.field_.sub(a.value_, b.value_));
}

Element operator*(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(a.field_, a.field_.mul(a.value_, b.value_));
}

Element operator/(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(a.field_, a.field_.div(a.value_, b.value_));
}

Element operator-(const Element& a) { return Element(a.field_, a.field_.neg(a.value_)); }

bool operator==(const Element& a, const Element& b) {
  require_same(a, b);
  return a.value_ == b.value_;
}

Element arith(Op op, const Element& a, const std::variant<Element, std::int64_t>& b) {
  auto other = [&]() -> const Element& {
    if (const auto* e = std::get_if<Element>(&b)) return *e;
    throw Error(ErrorKind::FieldMismatch, "binary operation needs an element operand");
  };
  switch (op) {
    case Op::Add: return a + other();
    case Op::Sub: return a - other();
    case Op::Mul: return a * other();
    case Op::Div: return a / other();
    case Op::Neg: return -a;
    case Op::Inv: return a.inv();
    case Op::Pow: {
      if (const auto* e = std::get_if<std::int64_t>(&b)) return a.pow(*e);
      throw Error(ErrorKind::FieldMismatch, "pow needs an integer exponent");
    }
  }
  return a;
}

}  // namespace lrc::gf
