#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vanish/boolfunc.hpp"
#include "vanish/covers.hpp"
#include "vanish/cycliccode.hpp"
#include "vanish/dopoly.hpp"
#include "vanish/vflats.hpp"

namespace vanish::io {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json field_to_json(const Field& field);
Field field_from_json(const Json& j);

Json table_to_json(const FunctionTable& f);
FunctionTable table_from_json(const Json& j);
// One integer per line; blank lines and lines starting with '#' are skipped.
FunctionTable load_table_file(const std::string& path, const Field& field);
FunctionTable parse_table(std::istream& in, const Field& field);

Json spectrum_to_json(const Field& field, const DifferentialSpectrum& s);
// "value,frequency" header then one row per even value 2i.
std::string spectrum_to_csv(const DifferentialSpectrum& s);

Json pqs_to_json(const PartialQuadrupleSystem& pqs);
PartialQuadrupleSystem pqs_from_json(const Json& j);
// One block per line, points separated by spaces.
std::string pqs_to_text(const PartialQuadrupleSystem& pqs);

Json do_to_json(const DOPolynomial& f);
DOPolynomial do_from_json(const Json& j);
// "i,j:c" entries separated by ',' or ';', e.g. "0,3:1" or "0,1:3,1,2:5".
DOPolynomial parse_do_terms(const Field& field, std::string_view text);
// "c:e" entries separated by ',' or ';', e.g. "1:3,1:1" for x^3 + x.
std::vector<Term> parse_univariate_terms(std::string_view text);

Json cover_to_json(const Cover& cover);
Cover cover_from_json(const Json& j);
// Each flat's points, one flat per line; only for dimension <= 3.
std::string cover_listing(const Cover& cover);

Json weights_to_json(unsigned n, const std::string& source, const WeightCounts& counts, const std::string& method);

}  // namespace vanish::io
