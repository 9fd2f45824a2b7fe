#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "vanish/io.hpp"

using namespace vanish;
using vanish::io::Json;

TEST_CASE("field and table round trips") {
  const Field f(8, 0x11b);
  CHECK(io::field_from_json(io::field_to_json(f)) == f);
  CHECK(io::field_from_json(Json{{"n", 6}}) == Field(6));
  CHECK_THROWS_AS(io::field_from_json(Json{{"modulus", 7}}), io::FormatError);
  CHECK_THROWS_AS(io::field_from_json(Json{{"n", "six"}}), io::FormatError);
  CHECK_THROWS_AS(io::field_from_json(Json{{"n", 4}, {"modulus", 0x15}}), FieldError);

  std::mt19937_64 rng(2);
  const auto g = testing::random_table(Field(5), rng);
  CHECK(io::table_from_json(Json::parse(io::table_to_json(g).dump())) == g);
}

TEST_CASE("table text format") {
  const Field f(2);
  std::istringstream ok("# x^2\n0\n1\n\n  3\n2\n");
  CHECK(io::parse_table(ok, f) == from_monomial(f, 2));
  std::istringstream junk("0\n1\nthree\n2\n");
  CHECK_THROWS_AS(io::parse_table(junk, f), io::FormatError);
  std::istringstream range("0\n1\n9\n2\n");
  CHECK_THROWS_AS(io::parse_table(range, f), FieldError);
  std::istringstream shortfall("0\n1\n");
  CHECK_THROWS_AS(io::parse_table(shortfall, f), FieldError);
  CHECK_THROWS_AS(io::load_table_file("/nonexistent/table.txt", f), io::FormatError);
}

TEST_CASE("spectrum export") {
  const Field f(4);
  const auto s = spectrum(from_monomial(f, 14));
  const auto j = io::spectrum_to_json(f, s);
  CHECK(j["uniformity"] == 4);
  CHECK(j["per_direction"].size() == 15);
  std::uint64_t total = 0;
  for (const auto& row : j["counts"]) total += row["frequency"].get<std::uint64_t>();
  CHECK(total == 15 * 16);
  const auto csv = io::spectrum_to_csv(s);
  CHECK(csv.rfind("value,frequency\n", 0) == 0);
  CHECK(csv.find("\n4,") != std::string::npos);
}

TEST_CASE("pqs round trip") {
  const auto pqs = enumerate_vanishing_flats(from_monomial(Field(6), 9));
  const auto j = io::pqs_to_json(pqs);
  CHECK(j["block_count"] == 1008);
  CHECK(io::pqs_from_json(Json::parse(j.dump())) == pqs);
  auto bad = j;
  bad["block_count"] = 7;
  CHECK_THROWS_AS(io::pqs_from_json(bad), io::FormatError);
  bad = j;
  bad["blocks"][0] = {0, 1, 2, 4};
  CHECK_THROWS_AS(io::pqs_from_json(bad), DomainError);
  const auto text = io::pqs_to_text(pqs);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1008);
}

TEST_CASE("do polynomial formats") {
  const Field f(7);
  const auto p = random_do(f, 6, 3);
  CHECK(io::do_from_json(Json::parse(io::do_to_json(p).dump())).coefficients() == p.coefficients());
  const auto q = io::do_from_json(Json{{"n", 6}, {"terms", {{{"i", 0}, {"j", 3}, {"c", 1}}}}});
  CHECK(to_table(q) == from_monomial(Field(6), 9));
  CHECK_THROWS_AS(io::do_from_json(Json{{"n", 6}, {"terms", {{{"i", 0}, {"c", 1}}}}}), io::FormatError);

  const auto parsed = io::parse_do_terms(Field(6), "0,1:3, 1,2:5;2,5:1");
  CHECK(parsed.get(0, 1) == 3);
  CHECK(parsed.get(1, 2) == 5);
  CHECK(parsed.get(2, 5) == 1);
  CHECK_THROWS_AS(io::parse_do_terms(Field(6), "0,1"), io::FormatError);
  CHECK_THROWS_AS(io::parse_do_terms(Field(6), "0,1:3,0,1:4"), io::FormatError);
  CHECK_THROWS_AS(io::parse_do_terms(Field(6), "2,1:3"), DomainError);

  const auto terms = io::parse_univariate_terms("1:3;1:1");
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].coefficient == 1);
  CHECK(terms[0].exponent == 3);
  CHECK_THROWS_AS(io::parse_univariate_terms("x^3"), io::FormatError);
}

TEST_CASE("cover formats") {
  const Field f(6);
  const auto c = gold_cover(f, 2, 1, f.cube_root_of_unity()).image;
  const auto back = io::cover_from_json(Json::parse(io::cover_to_json(c).dump()));
  CHECK(back.dimension == 2);
  CHECK(back.flats.size() == 16);
  for (std::size_t i = 0; i < c.flats.size(); ++i) CHECK(back.flats[i].points() == c.flats[i].points());
  CHECK(verify_totally_skew(back));
  const auto listing = io::cover_listing(c);
  CHECK(std::count(listing.begin(), listing.end(), '\n') == 16);
  CHECK_THROWS_AS(io::cover_listing(trivial_cover(f, {1, 2, 4, 8})), DomainError);
  CHECK_THROWS_AS(io::cover_from_json(Json{{"field", {{"n", 6}}}, {"dimension", 2}}), io::FormatError);
}

TEST_CASE("weight report") {
  const auto j = io::weights_to_json(6, "9", {63, 945}, "flats");
  CHECK(j.dump() == R"({"n":6,"d":9,"N3":63,"N4":945,"method":"flats"})");
  CHECK(io::weights_to_json(5, "general", {0, 7}, "direct")["d"] == "general");
}
