#include "vanish/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace vanish::io {
namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json field_to_json(const Field& field) { return Json{{"n", field.degree()}, {"modulus", field.modulus()}}; }

Field field_from_json(const Json& j) {
  const auto n = get<unsigned>(j, "n");
  if (j.contains("modulus")) return Field(n, get<std::uint32_t>(j, "modulus"));
  return Field(n);
}

Json table_to_json(const FunctionTable& f) {
  return Json{{"field", field_to_json(f.field())},
              {"values", std::vector<Element>(f.values().begin(), f.values().end())}};
}

FunctionTable table_from_json(const Json& j) {
  return FunctionTable(field_from_json(get<Json>(j, "field")), get<std::vector<Element>>(j, "values"));
}

FunctionTable parse_table(std::istream& in, const Field& field) {
  std::vector<Element> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      std::size_t used = 0;
      const auto v = std::stoull(line.substr(first), &used);
      if (line.find_first_not_of(" \t\r", first + used) != std::string::npos) throw std::invalid_argument("trailing");
      values.push_back(field.element(v));
    } catch (const FieldError&) {
      throw;
    } catch (const std::exception&) {
      throw FormatError("table line " + std::to_string(line_no) + ": expected one integer, got '" + line + "'");
    }
  }
  return FunctionTable(field, std::move(values));
}

FunctionTable load_table_file(const std::string& path, const Field& field) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open table file " + path);
  return parse_table(in, field);
}

Json spectrum_to_json(const Field& field, const DifferentialSpectrum& s) {
  Json counts = Json::array();
  for (auto [value, freq] : s.counts) counts.push_back(Json{{"value", value}, {"frequency", freq}});
  Json per_direction = Json::array();
  for (std::size_t a = 1; a < s.per_direction.size(); ++a) per_direction.push_back(s.per_direction[a]);
  return Json{{"field", field_to_json(field)},
              {"uniformity", s.uniformity},
              {"counts", counts},
              {"per_direction", per_direction}};
}

std::string spectrum_to_csv(const DifferentialSpectrum& s) {
  std::ostringstream os;
  os << "value,frequency\n";
  for (auto [value, freq] : s.counts) os << value << ',' << freq << '\n';
  return os.str();
}

Json pqs_to_json(const PartialQuadrupleSystem& pqs) {
  Json blocks = Json::array();
  for (const auto& b : pqs.blocks()) blocks.push_back(b.points());
  return Json{{"field", field_to_json(pqs.field())}, {"block_count", pqs.size()}, {"blocks", blocks}};
}

PartialQuadrupleSystem pqs_from_json(const Json& j) {
  auto field = field_from_json(get<Json>(j, "field"));
  std::vector<Flat> blocks;
  for (const auto& b : get<std::vector<std::array<Element, 4>>>(j, "blocks")) blocks.emplace_back(b[0], b[1], b[2], b[3]);
  PartialQuadrupleSystem pqs(std::move(field), std::move(blocks));
  if (j.contains("block_count") && get<std::size_t>(j, "block_count") != pqs.size())
    throw FormatError("block_count does not match the number of distinct blocks");
  return pqs;
}

std::string pqs_to_text(const PartialQuadrupleSystem& pqs) {
  std::ostringstream os;
  for (const auto& b : pqs.blocks()) {
    const auto& p = b.points();
    os << p[0] << ' ' << p[1] << ' ' << p[2] << ' ' << p[3] << '\n';
  }
  return os.str();
}

Json do_to_json(const DOPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [key, c] : f.coefficients()) terms.push_back(Json{{"i", key.first}, {"j", key.second}, {"c", c}});
  return Json{{"n", f.field().degree()}, {"modulus", f.field().modulus()}, {"terms", terms}};
}

DOPolynomial do_from_json(const Json& j) {
  DOPolynomial f(field_from_json(j));
  for (const auto& t : get<Json>(j, "terms")) f.set(get<unsigned>(t, "i"), get<unsigned>(t, "j"), get<Element>(t, "c"));
  return f;
}

DOPolynomial parse_do_terms(const Field& field, std::string_view text) {
  static const std::regex entry(R"(\s*(\d+)\s*,\s*(\d+)\s*:\s*(\d+)\s*([,;]|$))");
  DOPolynomial f(field);
  std::string s(text);
  auto it = s.cbegin();
  std::smatch m;
  while (it != s.cend()) {
    if (!std::regex_search(it, s.cend(), m, entry, std::regex_constants::match_continuous))
      throw FormatError("malformed DO term list '" + s + "' (expected i,j:c entries)");
    const auto i = std::stoul(m[1]), j = std::stoul(m[2]);
    const auto c = std::stoull(m[3]);
    if (f.get(static_cast<unsigned>(i), static_cast<unsigned>(j)) != 0)
      throw FormatError("DO term (" + m[1].str() + "," + m[2].str() + ") given twice");
    f.set(static_cast<unsigned>(i), static_cast<unsigned>(j), field.element(c));
    it = m[0].second;
  }
  return f;
}

std::vector<Term> parse_univariate_terms(std::string_view text) {
  static const std::regex entry(R"(\s*(\d+)\s*:\s*(\d+)\s*([,;]|$))");
  std::vector<Term> out;
  std::string s(text);
  auto it = s.cbegin();
  std::smatch m;
  while (it != s.cend()) {
    if (!std::regex_search(it, s.cend(), m, entry, std::regex_constants::match_continuous))
      throw FormatError("malformed term list '" + s + "' (expected c:e entries)");
    out.push_back({static_cast<Element>(std::stoul(m[1])), std::stoull(m[2])});
    it = m[0].second;
  }
  return out;
}

Json cover_to_json(const Cover& cover) {
  Json flats = Json::array();
  for (const auto& f : cover.flats) flats.push_back(Json{{"base", f.base()}, {"basis", f.basis()}});
  return Json{{"field", field_to_json(cover.field)}, {"dimension", cover.dimension}, {"flats", flats}};
}

Cover cover_from_json(const Json& j) {
  Cover cover{field_from_json(get<Json>(j, "field")), get<unsigned>(j, "dimension"), {}};
  for (const auto& f : get<Json>(j, "flats"))
    cover.flats.emplace_back(get<Element>(f, "base"), get<std::vector<Element>>(f, "basis"));
  return cover;
}

std::string cover_listing(const Cover& cover) {
  if (cover.dimension > 3) throw DomainError("point listing is only produced for dimension <= 3");
  std::ostringstream os;
  for (std::size_t i = 0; i < cover.flats.size(); ++i) {
    os << i << ':';
    for (Element p : cover.flats[i].points()) os << ' ' << p;
    os << '\n';
  }
  return os.str();
}

Json weights_to_json(unsigned n, const std::string& source, const WeightCounts& counts, const std::string& method) {
  Json j{{"n", n}};
  // d is an integer exponent, or "general" for an arbitrary function
  if (source == "general")
    j["d"] = "general";
  else
    j["d"] = std::stoull(source);
  j["N3"] = counts.weight3;
  j["N4"] = counts.weight4;
  j["method"] = method;
  return j;
}

}  // namespace vanish::io
