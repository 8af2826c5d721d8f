#include <doctest.h>

#include "lrc/error.hpp"
#include "lrc/gf.hpp"
#include "support.hpp"

using namespace lrc;
using gf::Field;

#define CHECK_KIND(expr, k)                 \
  do {                                      \
    try {                                   \
      (void)(expr);                         \
      FAIL("expected " #k);                 \
    } catch (const Error& e) {              \
      CHECK(e.kind() == ErrorKind::k);      \
    }                                       \
  } while (0)

TEST_CASE("field_make examples") {
  const Field f4 = Field::make(2, 2, 0x7);
  CHECK(f4.order() == 4);
  CHECK(f4.mul(2, 2) == 3);  // alpha^2 = 1 + alpha
  const Field f17 = Field::make(17);
  CHECK(f17.order() == 17);
  CHECK(f17.is_prime_field());
  CHECK_KIND(Field::make(2, 2, 0x5), ReduciblePolynomial);
  CHECK_KIND(Field::make(15), CompositeCharacteristic);
  CHECK_KIND(Field::make(3, 2), UnsupportedExtension);
  CHECK(Field::make(2, 8).modulus_poly() == 0x11D);
}

TEST_CASE("arith examples") {
  const Field f4 = testing::gf4();
  const auto a = f4.element(2);
  CHECK((a * a).value() == 3);
  CHECK(gf::arith(gf::Op::Inv, a).value() == 3);
  const Field f17 = Field::make(17);
  CHECK((f17.element(5) + f17.element(13)).value() == 1);
  CHECK(gf::arith(gf::Op::Pow, f17.element(3), std::int64_t{16}).value() == 1);
  CHECK(gf::arith(gf::Op::Pow, f17.element(3), std::int64_t{-1}).value() == 6);
  CHECK_KIND(f17.element(0).inv(), DivisionByZero);
  CHECK_KIND(f17.element(1) / f17.element(0), DivisionByZero);
  CHECK_KIND(f17.element(1) + Field::make(19).element(1), FieldMismatch);
}

TEST_CASE("field_at_least") {
  CHECK(gf::field_at_least(15, gf::Preference::Prime).order() == 17);
  CHECK(gf::field_at_least(15, gf::Preference::Binary).order() == 16);
  CHECK(gf::field_at_least(2, gf::Preference::Prime).order() == 2);
  CHECK(gf::field_at_least(BigInt(2324784), gf::Preference::Prime).order() == 2324809);
  CHECK(gf::field_at_least(BigInt(1) << 20, gf::Preference::Binary).degree() == 20);
  CHECK_KIND(gf::field_at_least(BigInt(1) << 40, gf::Preference::Prime), BoundTooLarge);
}

TEST_CASE("primality and irreducibility") {
  CHECK(gf::is_prime(2));
  CHECK(gf::is_prime(2147483647));
  CHECK_FALSE(gf::is_prime(1));
  CHECK_FALSE(gf::is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(gf::is_irreducible_gf2(0x7));
  CHECK_FALSE(gf::is_irreducible_gf2(0x5));
  for (int e = 2; e <= 16; ++e) CHECK(gf::is_irreducible_gf2(gf::default_modulus(e)));
  CHECK(gf::is_irreducible_gf2(gf::default_modulus(20)));
}

namespace {

std::vector<Field> small_fields() {
  std::vector<Field> out;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 31, 61}) out.push_back(Field::make(p));
  for (int e = 2; e <= 6; ++e) out.push_back(Field::make(2, e));
  return out;
}

}  // namespace

TEST_CASE("field axioms hold exhaustively for q <= 64") {
  for (const Field& f : small_fields()) {
    CAPTURE(f.describe());
    const auto q = static_cast<std::uint32_t>(f.order());
    bool ok = true;
    for (std::uint32_t a = 0; a < q && ok; ++a)
      for (std::uint32_t b = 0; b < q && ok; ++b) {
        ok = ok && f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
        ok = ok && f.sub(f.add(a, b), b) == a;
        for (std::uint32_t c = 0; c < q && ok; ++c) {
          ok = ok && f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
          ok = ok && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
          ok = ok && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
        }
      }
    CHECK(ok);
    // Nonzero elements form a group of order q-1: some element has exactly that order.
    bool cyclic = false;
    for (std::uint32_t g = 1; g < q && !cyclic; ++g) {
      std::uint32_t x = g;
      std::uint32_t order = 1;
      while (x != 1) {
        x = f.mul(x, g);
        ++order;
      }
      cyclic = order == q - 1;
    }
    CHECK(cyclic);
    for (std::uint32_t a = 1; a < q; ++a) CHECK(f.pow(a, static_cast<std::int64_t>(q) - 1) == 1);
  }
}

TEST_CASE("inverses exhaustively for q <= 256") {
  std::vector<Field> fields = small_fields();
  fields.push_back(Field::make(251));
  fields.push_back(Field::make(2, 7));
  fields.push_back(Field::make(2, 8));
  for (const Field& f : fields) {
    CAPTURE(f.describe());
    for (std::uint32_t a = 1; a < f.order(); ++a) REQUIRE(f.mul(f.inv(a), a) == 1);
  }
}

TEST_CASE("canonicalization is idempotent") {
  std::mt19937_64 rng(7);
  for (const Field& f : {Field::make(17), Field::make(2, 5), Field::make(2147483647), Field::make(2, 31)}) {
    for (int i = 0; i < 1000; ++i) {
      const std::uint64_t raw = rng();
      const auto c = f.canonical(raw);
      CHECK(c < f.order());
      CHECK(f.canonical(c) == c);
      CHECK(gf::Element(f, c).value() == c);
    }
  }
}

TEST_CASE("large fields: axioms on random samples") {
  std::mt19937_64 rng(11);
  for (const Field& f : {Field::make(2147483647), Field::make(2, 24), Field::make(2, 31), Field::make(2324809)}) {
    CAPTURE(f.describe());
    for (int i = 0; i < 2000; ++i) {
      const auto a = static_cast<std::uint32_t>(rng() % f.order());
      const auto b = static_cast<std::uint32_t>(rng() % f.order());
      const auto c = static_cast<std::uint32_t>(rng() % f.order());
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      if (a != 0) REQUIRE(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("span operations agree with scalar ones") {
  std::mt19937_64 rng(3);
  for (const Field& f : {Field::make(7), Field::make(65521), Field::make(2, 8), Field::make(2147483647)}) {
    std::vector<std::uint32_t> x(37), y(37);
    for (auto& v : x) v = static_cast<std::uint32_t>(rng() % f.order());
    for (auto& v : y) v = static_cast<std::uint32_t>(rng() % f.order());
    const auto c = static_cast<std::uint32_t>(rng() % f.order());
    auto z = x;
    f.axpy(z, y, c);
    std::uint32_t dot = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(z[i] == f.add(x[i], f.mul(c, y[i])));
      dot = f.add(dot, f.mul(x[i], y[i]));
    }
    CHECK(f.dot(x, y) == dot);
    auto s = x;
    f.scale(s, c);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(s[i] == f.mul(c, x[i]));
  }
}
