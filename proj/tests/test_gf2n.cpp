#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "support.hpp"

using namespace vanish;

namespace {

// Multiplicative order of x modulo m, by repeated shift-and-reduce.
std::uint32_t order_of_x(unsigned n, std::uint32_t m) {
  std::uint32_t v = 1;
  for (std::uint32_t k = 1; k <= (1u << n); ++k) {
    v <<= 1;
    if (v >> n & 1) v ^= m;
    if (v == 1) return k;
  }
  return 0;
}

}  // namespace

TEST_CASE("default moduli are the lowest-weight smallest primitive polynomials") {
  for (unsigned n = kMinDegree; n <= kMaxDegree; ++n) {
    std::uint32_t found = 0;
    for (int weight = 3; weight <= static_cast<int>(n) + 1 && !found; weight += 2)
      for (std::uint32_t m = (1u << n) | 1; m < (2u << n) && !found; m += 2)
        if (std::popcount(m) == weight && order_of_x(n, m) == (1u << n) - 1) found = m;
    CHECK_MESSAGE(default_modulus(n) == found, "n = " << n);
  }
}

TEST_CASE("field construction validates degree and irreducibility") {
  CHECK_THROWS_AS(Field(1), FieldError);
  CHECK_THROWS_AS(Field(17), FieldError);
  CHECK_THROWS_AS(Field(4, 0x9), FieldError);    // degree 3
  CHECK_THROWS_AS(Field(4, 0x15), FieldError);   // x^4+x^2+1 = (x^2+x+1)^2
  CHECK_THROWS_AS(Field(8, 0x101), FieldError);  // x^8+1
  // x^4+x^3+x^2+x+1 is irreducible but x has order 5; the search still finds a generator.
  const Field f(4, 0x1f);
  CHECK(f.primitive_element() != 2);
  CHECK(f.pow(f.primitive_element(), 5) != 1);
  const Field aes(8, 0x11b);
  CHECK(aes.primitive_element() == 3);
}

TEST_CASE("add is xor") {
  const Field f(3);
  CHECK(Field::add(0b011, 0b101) == 0b110);
  for (Element a = 0; a < f.size(); ++a) {
    CHECK(Field::add(a, 0) == a);
    CHECK(Field::add(a, a) == 0);
  }
}

TEST_CASE("mul: hand-reduced values in GF(2^3)") {
  const Field f(3, 0xb);
  CHECK(f.mul(0b010, 0b010) == 0b100);
  CHECK(f.mul(0b100, 0b010) == 0b011);
  for (Element a = 0; a < f.size(); ++a) CHECK(f.mul(a, 1) == a);
}

TEST_CASE("table and shift-xor multiplication agree") {
  for (unsigned n = 2; n <= 8; ++n) {
    const Field f(n);
    for (Element a = 0; a < f.size(); ++a)
      for (Element b = 0; b < f.size(); ++b) REQUIRE(f.mul(a, b) == f.mul_shift_xor(a, b));
  }
  std::mt19937_64 rng(7);
  for (unsigned n = 9; n <= 16; ++n) {
    const Field f(n);
    std::uniform_int_distribution<Element> pick(0, f.order());
    for (int k = 0; k < 20000; ++k) {
      const Element a = pick(rng), b = pick(rng);
      REQUIRE(f.mul(a, b) == f.mul_shift_xor(a, b));
    }
  }
}

TEST_CASE("field axioms hold exhaustively for small n") {
  for (unsigned n = 2; n <= 6; ++n) {
    const Field f(n);
    for (Element a = 0; a < f.size(); ++a)
      for (Element b = 0; b < f.size(); ++b) {
        REQUIRE(f.mul(a, b) == f.mul(b, a));
        for (Element c = 0; c < f.size(); ++c) {
          REQUIRE(f.mul(a, b ^ c) == (f.mul(a, b) ^ f.mul(a, c)));
          REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        }
      }
  }
  const Field f8(8);
  for (Element a = 0; a < f8.size(); ++a)
    for (Element b = 0; b < f8.size(); ++b)
      for (Element c = 0; c < f8.size(); c += 7) REQUIRE(f8.mul(a, b ^ c) == (f8.mul(a, b) ^ f8.mul(a, c)));
}

TEST_CASE("pow conventions") {
  const Field f(5);
  CHECK(f.pow(0, 0) == 1);
  CHECK(f.pow(0, 3) == 0);
  for (Element a = 0; a < f.size(); ++a) {
    CHECK(f.pow(a, 0) == 1);
    CHECK(f.pow(a, 1) == a);
    // square-and-multiply oracle
    Element acc = 1;
    for (int k = 0; k < 13; ++k) acc = f.mul_shift_xor(acc, a);
    CHECK(f.pow(a, 13) == acc);
  }
}

TEST_CASE("multiplicative group is cyclic of order 2^n - 1") {
  for (unsigned n = 2; n <= 10; ++n) {
    const Field f(n);
    const Element alpha = f.primitive_element();
    std::vector<bool> seen(f.size(), false);
    Element x = 1;
    for (std::uint32_t k = 0; k < f.order(); ++k) {
      REQUIRE(x != 0);
      REQUIRE_FALSE(seen[x]);
      seen[x] = true;
      if (k > 0) REQUIRE(x != 1);
      x = f.mul_shift_xor(x, alpha);
    }
    CHECK(x == 1);
    CHECK(f.pow(alpha, f.order()) == 1);
  }
}

TEST_CASE("primitive element is the smallest generator") {
  const Field f2(2);
  CHECK(f2.primitive_element() == 0b10);
  for (const Field& f : {Field(4, 0x1f), Field(8, 0x11b), Field(6), Field(10)}) {
    const Element alpha = f.primitive_element();
    CHECK(f.pow(alpha, f.order()) == 1);
    for (std::uint32_t k = 1; k < f.order(); ++k) REQUIRE(f.pow(alpha, k) != 1);
    for (Element g = 2; g < alpha; ++g) {
      bool full = true;
      for (std::uint32_t k = 1; k < f.order() && full; ++k) full = f.pow(g, k) != 1;
      CHECK_FALSE(full);
    }
  }
}

TEST_CASE("inverse") {
  for (unsigned n = 2; n <= 10; ++n) {
    const Field f(n);
    CHECK(f.inv(1) == 1);
    CHECK_THROWS_AS(f.inv(0), DomainError);
    for (Element a = 1; a < f.size(); ++a) {
      REQUIRE(f.mul_shift_xor(a, f.inv(a)) == 1);
      REQUIRE(f.inv(a) == f.pow(a, f.order() - 1));
    }
  }
}

TEST_CASE("frobenius is an automorphism of order n") {
  for (unsigned n = 2; n <= 8; ++n) {
    const Field f(n);
    CHECK_THROWS_AS(f.frobenius(1, n), DomainError);
    for (Element a = 0; a < f.size(); ++a) {
      CHECK(f.frobenius(a, 0) == a);
      Element b = a;
      for (unsigned k = 0; k < n; ++k) b = f.frobenius(b, 1);
      CHECK(b == a);
      for (Element c = 0; c < f.size(); c += 3)
        for (unsigned i = 0; i < n; ++i) {
          REQUIRE(f.frobenius(a ^ c, i) == (f.frobenius(a, i) ^ f.frobenius(c, i)));
          REQUIRE(f.frobenius(f.mul(a, c), i) == f.mul(f.frobenius(a, i), f.frobenius(c, i)));
        }
    }
  }
}

TEST_CASE("cube root of unity") {
  CHECK_THROWS_AS(Field(5).cube_root_of_unity(), DomainError);
  const Field f2(2);
  CHECK(f2.cube_root_of_unity() == f2.primitive_element());
  for (unsigned n = 2; n <= 16; n += 2) {
    const Field f(n);
    const Element z = f.cube_root_of_unity();
    CHECK(z != 1);
    CHECK(f.pow(z, 3) == 1);
    CHECK((1 ^ z ^ f.mul(z, z)) == 0);
  }
}

TEST_CASE("subfields") {
  const Field f(6);
  CHECK(f.subfield(1) == std::vector<Element>{0, 1});
  CHECK(f.subfield(2).size() == 4);
  CHECK(f.subfield(3).size() == 8);
  CHECK(f.subfield(6).size() == 64);
  CHECK_THROWS_AS(f.subfield(4), DomainError);
  // GF(4) inside GF(64) is {0, 1, zeta, zeta^2}
  const Element z = f.cube_root_of_unity();
  const std::set<Element> expected{0, 1, z, f.mul(z, z)};
  const auto got = f.subfield(2);
  CHECK(std::set<Element>(got.begin(), got.end()) == expected);
}

TEST_CASE("kloosterman closed form") {
  CHECK(kloosterman(6) == -8);
  CHECK(kloosterman(7) == -12);
  CHECK_THROWS_AS(kloosterman(1), DomainError);
  for (unsigned n = 2; n <= 16; ++n) CHECK_NOTHROW(kloosterman(n));
}

TEST_CASE("kloosterman formula equals the character sum over the field") {
  // sum_x (-1)^Tr(1/x + x) with 1/0 = 0
  for (unsigned n = 2; n <= 12; ++n) {
    const Field f(n);
    long sum = 0;
    for (Element x = 0; x < f.size(); ++x) {
      const Element y = (x == 0 ? 0 : f.inv(x)) ^ x;
      sum += testing::trace(f, y) ? -1 : 1;
    }
    CHECK_MESSAGE(kloosterman(n) == sum, "n = " << n);
  }
}

TEST_CASE("mismatched fields are rejected") {
  CHECK_THROWS_AS(require_same_field(Field(4), Field(5)), FieldMismatch);
  CHECK_THROWS_AS(require_same_field(Field(4), Field(4, 0x19)), FieldMismatch);
  CHECK_NOTHROW(require_same_field(Field(4), Field(4)));
  CHECK_THROWS_AS(Field(4).element(16), FieldError);
}
