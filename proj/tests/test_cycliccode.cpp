#include <doctest.h>

#include "support.hpp"

using namespace vanish;

namespace {

// Smallest exponent in each cyclotomic class modulo 2^n - 1.
std::vector<std::uint64_t> class_leaders(const Field& f) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d < f.order(); ++d) {
    std::uint64_t e = d, least = d;
    for (unsigned i = 0; i < f.degree(); ++i) {
      e = (2 * e) % f.order();
      least = std::min(least, e);
    }
    if (least == d) out.push_back(d);
  }
  return out;
}

}  // namespace

TEST_CASE("parity-check layouts") {
  const Field f(4);
  const auto cyc = cyclic_parity_check(f, 7);
  REQUIRE(cyc.labels.size() == 15);
  REQUIRE(cyc.images.size() == 15);
  for (std::size_t k = 0; k < 15; ++k) {
    CHECK(cyc.labels[k] == f.exp(k));
    CHECK(cyc.images[k] == f.pow(f.exp(k), 7));
  }
  const auto g = from_monomial(f, 7);
  const auto ext = extended_parity_check(g);
  REQUIRE(ext.labels.size() == 16);
  CHECK(ext.labels[0] == 0);
  CHECK(ext.images[0] == g(0));
  CHECK(ext.labels[1] == 1);
  CHECK(ext.labels[2] == f.primitive_element());
}

TEST_CASE("weight counts from flats") {
  const auto inv = weight_counts_from_flats(Field(4), 14);
  CHECK(inv.weight3 == 5);
  CHECK(inv.weight4 == 0);
  const auto x9 = weight_counts_from_flats(Field(6), 9);
  CHECK(x9.weight3 == 63);
  CHECK(x9.weight4 == 945);
  const auto x5 = weight_counts_from_flats(Field(5), 5);
  CHECK(x5.weight3 == 0);
  CHECK(x5.weight4 == 0);
}

TEST_CASE("direct enumeration") {
  const auto inv = direct_low_weight_counts(cyclic_parity_check(Field(4), 14), 4);
  CHECK(inv.weight3 == 5);
  CHECK(inv.weight4 == 0);
  const auto apn = direct_low_weight_counts(cyclic_parity_check(Field(5), 3), 4);
  CHECK(apn.weight3 == 0);
  CHECK(apn.weight4 == 0);
  const auto x9 = direct_low_weight_counts(cyclic_parity_check(Field(6), 9), 4);
  CHECK(x9.weight3 == 63);
  CHECK(x9.weight4 == 945);
  CHECK_FALSE(direct_low_weight_counts(cyclic_parity_check(Field(6), 9), 3).weight4.has_value());
}

TEST_CASE("capacity limits") {
  CHECK_THROWS_AS(direct_low_weight_counts(cyclic_parity_check(Field(7), 3), 4), CapacityError);
  CHECK_THROWS_AS(direct_low_weight_counts(cyclic_parity_check(Field(9), 3), 3), CapacityError);
  CHECK_THROWS(direct_low_weight_counts(cyclic_parity_check(Field(4), 3), 5));
  CHECK_THROWS(generalized_weight4_count(identity_function(Field(6)), true));
}

TEST_CASE("flat counts agree with direct enumeration on every monomial class") {
  for (unsigned n = 2; n <= 8; ++n) {
    const Field f(n);
    for (auto d : class_leaders(f)) {
      const auto flats = weight_counts_from_flats(f, d);
      CHECK(flats.weight3 + flats.weight4 == enumerate_vanishing_flats(from_monomial(f, d)).size());
      const auto direct = direct_low_weight_counts(cyclic_parity_check(f, d), n <= 6 ? 4 : 3);
      CHECK_MESSAGE(direct.weight3 == flats.weight3, "n=" << n << " d=" << d);
      if (direct.weight4) CHECK_MESSAGE(*direct.weight4 == flats.weight4, "n=" << n << " d=" << d);
    }
  }
}

TEST_CASE("one coset through zero per DO family") {
  for (unsigned n = 4; n <= 8; ++n) {
    const Field f(n);
    for (unsigned t = 1; t < n; ++t) {
      const auto d = (std::uint64_t{1} << t) + 1;
      const auto c = weight_counts_from_flats(f, d);
      CHECK((c.weight3 << (n - 2)) == c.weight3 + c.weight4);
    }
  }
}

TEST_CASE("generalized weight-4 count") {
  CHECK(generalized_weight4_count(from_monomial(Field(5), 3), true) == 0);
  CHECK(generalized_weight4_count(identity_function(Field(2)), true) == 1);
  std::mt19937_64 rng(99);
  const Field f(5);
  for (int rep = 0; rep < 5; ++rep) {
    const auto g = testing::random_table(f, rng);
    const auto direct = direct_low_weight_counts(extended_parity_check(g), 4);
    CHECK(*direct.weight4 == enumerate_vanishing_flats(g).size());
    CHECK(generalized_weight4_count(g, true) == *direct.weight4);
  }
}

TEST_CASE("direct enumeration is independent of the worker count") {
  const auto spec = cyclic_parity_check(Field(6), 21);
  set_default_threads(1);
  const auto one = direct_low_weight_counts(spec, 4);
  set_default_threads(4);
  const auto four = direct_low_weight_counts(spec, 4);
  set_default_threads(1);
  CHECK(one.weight3 == four.weight3);
  CHECK(one.weight4 == four.weight4);
}
