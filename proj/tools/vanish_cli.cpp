#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vanish/io.hpp"
#include "vanish/vanish.hpp"

using namespace vanish;
using io::Json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

struct RunConfig {
  unsigned n = 0;
  std::string modulus;
  std::optional<std::uint64_t> monomial;
  std::string do_terms;
  std::string poly;
  std::string table_path;
  Format format = Format::Text;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

struct Source {
  FunctionTable table;
  std::string label;
  std::optional<DOPolynomial> dopoly;
  std::optional<std::uint64_t> exponent;
};

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void require_format(const RunConfig& cfg, bool csv_ok) {
  if (cfg.format == Format::Csv && !csv_ok) throw UsageError("csv output is not available for this command");
}

Field make_field(const RunConfig& cfg) {
  if (cfg.n == 0) throw UsageError("--n is required");
  if (cfg.modulus.empty()) return Field(cfg.n);
  std::size_t used = 0;
  unsigned long m = 0;
  try {
    m = std::stoul(cfg.modulus, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != cfg.modulus.size()) throw UsageError("--modulus: not an integer: " + cfg.modulus);
  return Field(cfg.n, static_cast<std::uint32_t>(m));
}

int source_count(const RunConfig& cfg) {
  return cfg.monomial.has_value() + !cfg.do_terms.empty() + !cfg.poly.empty() + !cfg.table_path.empty();
}

Source load_source(const RunConfig& cfg, const Field& field) {
  const int given = source_count(cfg);
  if (given == 0) throw UsageError("a function is required: --monomial, --do, --poly or --table");
  if (given > 1) throw UsageError("give exactly one of --monomial, --do, --poly, --table");
  if (cfg.monomial) {
    return {from_monomial(field, *cfg.monomial), "x^" + std::to_string(*cfg.monomial), std::nullopt, cfg.monomial};
  }
  if (!cfg.do_terms.empty()) {
    auto p = io::parse_do_terms(field, cfg.do_terms);
    auto table = to_table(p);
    return {std::move(table), "DO " + cfg.do_terms, std::move(p), std::nullopt};
  }
  if (!cfg.poly.empty())
    return {from_univariate(field, io::parse_univariate_terms(cfg.poly)), "poly " + cfg.poly, std::nullopt,
            std::nullopt};
  return {io::load_table_file(cfg.table_path, field), "table " + cfg.table_path, std::nullopt, std::nullopt};
}

std::string field_label(const Field& f) {
  return "GF(2^" + std::to_string(f.degree()) + ") mod " + hex(f.modulus());
}

// ---- spectrum

int cmd_spectrum(const RunConfig& cfg) {
  require_format(cfg, true);
  const Field field = make_field(cfg);
  const auto src = load_source(cfg, field);
  const auto s = spectrum(src.table);

  const std::uint64_t directions = field.order();
  bool integral = true;
  for (auto [value, count] : s.counts) integral &= count % directions == 0;

  std::map<unsigned, std::uint64_t> direction_hist;
  for (std::size_t a = 1; a < s.per_direction.size(); ++a) ++direction_hist[s.per_direction[a]];

  if (cfg.format == Format::Csv) {
    std::cout << io::spectrum_to_csv(s);
    return 0;
  }
  if (cfg.format == Format::Json) {
    auto j = io::spectrum_to_json(field, s);
    j["source"] = src.label;
    j["apn"] = s.uniformity == 2;
    if (integral) {
      Json w = Json::array();
      for (auto [value, count] : s.normalized()) w.push_back(Json{{"value", value}, {"w", count}});
      j["w"] = w;
    }
    emit(j);
    return 0;
  }
  std::cout << "function: " << src.label << " over " << field_label(field) << '\n';
  std::cout << "uniformity: " << s.uniformity << (s.uniformity == 2 ? " (APN)" : "") << '\n';
  std::cout << "critical directions: " << critical_directions(src.table).size() << " of " << directions << '\n';
  std::cout << "delta_f(a) over directions:\n";
  for (auto [value, count] : direction_hist) std::cout << "  " << value << ": " << count << '\n';
  std::cout << "spectrum (value: pairs" << (integral ? ", w" : "") << "):\n";
  for (auto [value, count] : s.counts) {
    std::cout << "  " << value << ": " << count;
    if (integral) std::cout << "  w=" << count / directions;
    std::cout << '\n';
  }
  return 0;
}

// ---- vflats

int cmd_vflats(const RunConfig& cfg, const std::string& mode, const std::string& output) {
  const Field field = make_field(cfg);
  const auto src = load_source(cfg, field);
  require_format(cfg, false);

  if (mode == "count") {
    const auto count = count_via_spectrum(src.table);
    std::optional<std::uint64_t> rank_count;
    if (src.dopoly) rank_count = count_vflats_do(*src.dopoly);
    const bool ok = !rank_count || *rank_count == count;
    if (cfg.format == Format::Json) {
      Json j{{"field", io::field_to_json(field)}, {"source", src.label}, {"count", count}};
      if (rank_count) j["rank_formula"] = *rank_count;
      emit(j);
    } else {
      std::cout << count << '\n';
      if (rank_count)
        std::cout << "rank formula: " << *rank_count << (ok ? " (agrees)" : " FAIL: disagrees") << '\n';
    }
    return ok ? 0 : 1;
  }

  const auto pqs = enumerate_vanishing_flats(src.table);
  if (mode == "pqs-export" || cfg.format == Format::Json) {
    const auto j = io::pqs_to_json(pqs);
    if (mode == "pqs-export" && !output.empty()) {
      std::ofstream out(output);
      if (!out) throw UsageError("cannot write " + output);
      out << j.dump(2) << '\n';
      std::cout << "wrote " << pqs.size() << " blocks to " << output << '\n';
    } else {
      emit(j);
    }
    return 0;
  }
  std::cout << "# " << pqs.size() << " vanishing flats of " << src.label << " over " << field_label(field) << '\n';
  std::cout << io::pqs_to_text(pqs);
  return 0;
}

// ---- tables

const std::map<unsigned, std::vector<std::pair<std::uint64_t, std::uint64_t>>>& table2_data() {
  static const std::map<unsigned, std::vector<std::pair<std::uint64_t, std::uint64_t>>> data = {
      {2, {{1, 1}}},
      {3, {{1, 14}, {3, 0}}},
      {4, {{1, 140}, {3, 0}, {5, 20}, {7, 5}}},
      {5, {{1, 1240}, {3, 0}, {5, 0}, {15, 0}}},
      {6,
       {{1, 10416},
        {3, 0},
        {5, 336},
        {7, 84},
        {9, 1008},
        {11, 336},
        {15, 126},
        {21, 2520},
        {27, 1260},
        {31, 21}}},
      {7, {{1, 85344}, {3, 0}, {5, 0}, {7, 889}, {9, 0}, {11, 0}, {19, 889}, {21, 889}, {23, 0}, {63, 0}}},
      {8, {{1, 690880}, {3, 0},      {5, 5440},   {7, 3655},  {9, 0},      {11, 5185},  {13, 5185},
           {15, 1785},  {17, 38080}, {19, 4420},  {21, 2040}, {23, 4930},  {25, 4420},  {27, 15810},
           {31, 2380},  {39, 0},     {43, 27625}, {45, 1785}, {51, 66300}, {53, 7480},  {55, 5440},
           {63, 3570},  {85, 174760}, {87, 24480}, {95, 2380}, {111, 1020}, {119, 41905}, {127, 85}}},
  };
  return data;
}

struct Row {
  unsigned n;
  std::string label;
  std::uint64_t d;
  std::uint64_t expected;
  std::optional<std::uint64_t> computed;
  bool pass() const { return !computed || *computed == expected; }
};

int print_rows(const RunConfig& cfg, const std::vector<Row>& rows, const char* expected_name) {
  std::size_t failed = 0, checked = 0;
  for (const auto& r : rows) {
    failed += !r.pass();
    checked += r.computed.has_value();
  }
  if (cfg.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j{{"n", r.n}};
      if (!r.label.empty()) j["family"] = r.label;
      j["d"] = r.d;
      j[expected_name] = r.expected;
      j["enumerated"] = r.computed ? Json(*r.computed) : Json(nullptr);
      j["status"] = r.computed ? (r.pass() ? "PASS" : "FAIL") : "SKIP";
      arr.push_back(j);
    }
    emit(Json{{"rows", arr}, {"failed", failed}});
  } else if (cfg.format == Format::Csv) {
    std::cout << "n,family,d," << expected_name << ",enumerated,status\n";
    for (const auto& r : rows)
      std::cout << r.n << ',' << r.label << ',' << r.d << ',' << r.expected << ','
                << (r.computed ? std::to_string(*r.computed) : "") << ','
                << (r.computed ? (r.pass() ? "PASS" : "FAIL") : "SKIP") << '\n';
  } else {
    for (const auto& r : rows) {
      std::cout << "n=" << r.n << ' ';
      if (!r.label.empty()) std::cout << r.label << ' ';
      std::cout << "d=" << r.d << "  " << expected_name << ' ' << r.expected;
      if (r.computed)
        std::cout << "  enumerated " << *r.computed << "  " << (r.pass() ? "PASS" : "FAIL");
      else
        std::cout << "  (not enumerated)";
      std::cout << '\n';
    }
    std::cout << rows.size() << " rows, " << checked - failed << " PASS, " << failed << " FAIL\n";
  }
  return failed ? 1 : 0;
}

int cmd_table2(const RunConfig& cfg) {
  std::vector<Row> rows;
  for (const auto& [n, entries] : table2_data()) {
    if (cfg.n != 0 && n != cfg.n) continue;
    const Field field(n);
    for (auto [d, expected] : entries)
      rows.push_back({n, "", d, expected, enumerate_vanishing_flats(from_monomial(field, d)).size()});
  }
  if (rows.empty()) throw UsageError("table2 covers 2 <= n <= 8");
  return print_rows(cfg, rows, "expected");
}

int cmd_table1(const RunConfig& cfg, const std::string& family_name_arg, std::optional<unsigned> t,
               unsigned variant) {
  if (cfg.n == 0) throw UsageError("--n is required");
  const Field field(cfg.n);
  std::vector<PowerFamily> families;
  if (family_name_arg.empty()) {
    families.assign(kPowerFamilies.begin(), kPowerFamilies.end());
  } else {
    auto fam = parse_family(family_name_arg);
    if (!fam) throw UsageError("unknown family '" + family_name_arg + "'");
    families.push_back(*fam);
  }

  std::vector<Row> rows;
  std::set<std::pair<PowerFamily, std::uint64_t>> seen;
  auto add_row = [&](PowerFamily fam, FamilyParams p) {
    const auto d = family_exponent(fam, cfg.n, p);
    if (!seen.insert({fam, d}).second) return;
    std::string label(family_name(fam));
    if (fam == PowerFamily::Gold || fam == PowerFamily::Kasami) label += "(t=" + std::to_string(p.t) + ")";
    std::optional<std::uint64_t> computed;
    if (cfg.n <= 10) computed = enumerate_vanishing_flats(from_monomial(field, d)).size();
    rows.push_back({cfg.n, label, d, closed_form_count(fam, cfg.n, p), computed});
  };

  if (families.size() == 1 && (t || (families[0] != PowerFamily::Gold && families[0] != PowerFamily::Kasami))) {
    add_row(families[0], {t.value_or(0), variant});
    return print_rows(cfg, rows, "closed_form");
  }
  // every admissible parameter choice
  for (auto fam : families)
    for (unsigned tt = 0; tt <= cfg.n; ++tt)
      for (unsigned v = 0; v <= 1; ++v) {
        try {
          check_family(fam, cfg.n, {tt, v});
        } catch (const ParameterError&) {
          continue;
        }
        add_row(fam, {tt, v});
      }
  if (rows.empty()) throw UsageError("no family applies at n = " + std::to_string(cfg.n));
  return print_rows(cfg, rows, "closed_form");
}

// ---- covers

Element nontrivial_subfield_element(const Field& field, unsigned s) {
  for (Element w : field.subfield(s))
    if (w > 1) return w;
  throw DomainError("GF(2^" + std::to_string(s) + ") has no element other than 0 and 1");
}

int report_cover(const RunConfig& cfg, const Cover& cover, const std::string& title, bool list) {
  const auto report = check_cover(cover);
  std::optional<bool> nonparallel, skew;
  std::vector<std::vector<std::size_t>> groups;
  if (report.ok) {
    nonparallel = verify_nonparallel(cover);
    skew = verify_totally_skew(cover);
    groups = parallel_decomposition(cover);
  }
  std::map<std::size_t, std::size_t> group_sizes;
  for (const auto& g : groups) ++group_sizes[g.size()];

  if (cfg.format == Format::Json) {
    Json j{{"title", title}, {"valid", report.ok}, {"problems", report.problems}};
    if (report.ok) {
      j["nonparallel"] = *nonparallel;
      j["totally_skew"] = *skew;
      j["parallel_classes"] = groups.size();
    }
    j["cover"] = io::cover_to_json(cover);
    emit(j);
  } else {
    std::cout << title << '\n';
    std::cout << "flats: " << cover.flats.size() << " of dimension " << cover.dimension << " over "
              << field_label(cover.field) << '\n';
    std::cout << "cover: " << (report.ok ? "PASS" : "FAIL") << '\n';
    for (const auto& p : report.problems) std::cout << "  " << p << '\n';
    if (report.ok) {
      std::cout << "nonparallel=" << (*nonparallel ? "true" : "false") << '\n';
      std::cout << "totally_skew=" << (*skew ? "true" : "false") << '\n';
      std::cout << "parallel classes: " << groups.size();
      for (auto [size, count] : group_sizes) std::cout << "  [" << count << " of size " << size << "]";
      std::cout << '\n';
      if (list && cover.dimension <= 3) std::cout << io::cover_listing(cover);
    }
  }
  return report.ok ? 0 : 1;
}

struct CoverArgs {
  std::string kind;
  std::optional<unsigned> t;
  std::optional<Element> x, y, alpha;
  std::string output;
  std::string input;
  bool list = false;
};

int cmd_cover_build(const RunConfig& cfg, const CoverArgs& args) {
  require_format(cfg, false);
  const Field field = make_field(cfg);
  if (!args.t) throw UsageError("--t is required");
  const unsigned t = *args.t;
  std::string title;
  const Cover cover = [&] {
    if (args.kind == "gold2") {
      if (t < 1 || t >= field.degree()) throw UsageError("--t must satisfy 1 <= t <= n-1");
      const unsigned s = std::gcd(field.degree(), t);
      const Element x = args.x.value_or(1);
      const Element y =
          args.y ? *args.y : (s > 1 ? field.mul(field.element(x), nontrivial_subfield_element(field, s)) : x);
      title = "image of the trivial cover on {0, " + std::to_string(x) + ", " + std::to_string(y) + ", " +
              std::to_string(x ^ y) + "} under x^" + std::to_string((std::uint64_t{1} << t) + 1);
      return gold_cover(field, t, x, y).image;
    }
    const Element alpha = args.alpha.value_or(1);
    title = "images of the cosets of " + std::to_string(alpha) + " * GF(2^" +
            std::to_string(std::gcd(field.degree(), t)) + ") under x^" + std::to_string((std::uint64_t{1} << t) + 1);
    return subfield_image_cover(field, t, alpha);
  }();
  if (!args.output.empty()) {
    std::ofstream out(args.output);
    if (!out) throw UsageError("cannot write " + args.output);
    out << io::cover_to_json(cover).dump(2) << '\n';
  }
  return report_cover(cfg, cover, title, args.list);
}

int cmd_cover_verify(const RunConfig& cfg, const CoverArgs& args) {
  require_format(cfg, false);
  std::ifstream in(args.input);
  if (!in) throw UsageError("cannot open " + args.input);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw io::FormatError(args.input + ": " + e.what());
  }
  return report_cover(cfg, io::cover_from_json(j), "cover from " + args.input, args.list);
}

// ---- code weights

// Weight-3 words of the extended code: {a, b, a + b} with a, b nonzero and
// f(a) + f(b) + f(a + b) = 0.
std::uint64_t extended_weight3(const FunctionTable& f) {
  std::uint64_t count = 0;
  const Element size = static_cast<Element>(f.size());
  for (Element a = 1; a < size; ++a)
    for (Element b = a + 1; b < size; ++b) {
      const Element c = a ^ b;
      if (c > b && (f(a) ^ f(b) ^ f(c)) == 0) ++count;
    }
  return count;
}

int cmd_codeweights(const RunConfig& cfg, std::optional<std::uint64_t> d, const std::string& method) {
  require_format(cfg, false);
  const Field field = make_field(cfg);
  if (d && source_count(cfg) > 0) throw UsageError("give either --d or a function source, not both");
  if (!d && source_count(cfg) == 0) throw UsageError("--d (or a function source for the extended code) is required");

  std::vector<Json> reports;
  std::vector<WeightCounts> results;
  std::string source;
  if (d) {
    source = std::to_string(*d);
    if (method != "direct") {
      results.push_back(weight_counts_from_flats(field, *d));
      reports.push_back(io::weights_to_json(field.degree(), source, results.back(), "flats"));
    }
    if (method != "flats") {
      const auto direct = direct_low_weight_counts(cyclic_parity_check(field, *d), field.degree() <= 6 ? 4 : 3);
      if (!direct.weight4)
        throw CapacityError("direct weight-4 enumeration needs n <= 6; use --method flats");
      results.push_back({direct.weight3, *direct.weight4});
      reports.push_back(io::weights_to_json(field.degree(), source, results.back(), "direct"));
    }
  } else {
    source = "general";
    const auto src = load_source(cfg, field);
    if (method != "direct") {
      results.push_back({extended_weight3(src.table), generalized_weight4_count(src.table)});
      reports.push_back(io::weights_to_json(field.degree(), source, results.back(), "flats"));
    }
    if (method != "flats") {
      const auto direct = direct_low_weight_counts(extended_parity_check(src.table), 4);
      results.push_back({direct.weight3, *direct.weight4});
      reports.push_back(io::weights_to_json(field.degree(), source, results.back(), "direct"));
    }
  }
  const bool agree = results.size() < 2 ||
                     (results[0].weight3 == results[1].weight3 && results[0].weight4 == results[1].weight4);

  if (cfg.format == Format::Json) {
    if (reports.size() == 1)
      emit(reports[0]);
    else
      emit(Json{{"reports", reports}, {"agree", agree}});
  } else {
    for (const auto& r : reports)
      std::cout << "n=" << r["n"] << " d=" << (d ? source : "general") << " N3=" << r["N3"] << " N4=" << r["N4"]
                << " (" << r["method"].get<std::string>() << ")\n";
    if (reports.size() > 1) std::cout << (agree ? "PASS: methods agree" : "FAIL: methods disagree") << '\n';
  }
  return agree ? 0 : 1;
}

// ---- kloosterman

int cmd_kloosterman(const RunConfig& cfg) {
  require_format(cfg, false);
  std::vector<unsigned> ns;
  if (cfg.n != 0) {
    ns.push_back(cfg.n);
  } else {
    for (unsigned n = kMinDegree; n <= kMaxDegree; ++n) ns.push_back(n);
  }
  Json arr = Json::array();
  for (unsigned n : ns) {
    const auto k = kloosterman(n);
    if (cfg.format == Format::Json)
      arr.push_back(Json{{"n", n}, {"K", k}});
    else
      std::cout << "K(" << n << ") = " << k << '\n';
  }
  if (cfg.format == Format::Json) emit(ns.size() == 1 ? arr[0] : arr);
  return 0;
}

// ---- random DO search

int cmd_dosearch(const RunConfig& cfg, std::size_t support, unsigned samples, bool verify) {
  require_format(cfg, false);
  const Field field = make_field(cfg);
  if (verify && field.degree() > 10) throw UsageError("--verify enumerates flats and needs n <= 10");
  std::mt19937_64 rng(cfg.seed);
  std::map<std::uint64_t, unsigned> histogram;
  Json arr = Json::array();
  bool ok = true;
  for (unsigned i = 0; i < samples; ++i) {
    const auto p = random_do(field, support, rng());
    const auto count = count_vflats_do(p);
    ++histogram[count];
    std::optional<std::uint64_t> enumerated;
    if (verify) {
      enumerated = enumerate_vanishing_flats(to_table(p)).size();
      ok &= *enumerated == count;
    }
    std::string terms;
    for (const auto& [key, c] : p.coefficients()) {
      if (!terms.empty()) terms += ';';
      terms += std::to_string(key.first) + "," + std::to_string(key.second) + ":" + std::to_string(c);
    }
    if (cfg.format == Format::Json) {
      Json j{{"terms", terms}, {"count", count}};
      if (enumerated) j["enumerated"] = *enumerated;
      arr.push_back(j);
    } else {
      std::cout << terms << "  count " << count;
      if (enumerated) std::cout << (*enumerated == count ? "  PASS" : "  FAIL enumerated " + std::to_string(*enumerated));
      std::cout << '\n';
    }
  }
  if (cfg.format == Format::Json) {
    Json hist = Json::array();
    for (auto [count, freq] : histogram) hist.push_back(Json{{"count", count}, {"samples", freq}});
    emit(Json{{"field", io::field_to_json(field)}, {"seed", cfg.seed}, {"support", support}, {"samples", arr},
              {"histogram", hist}});
  } else {
    std::cout << "counts:";
    for (auto [count, freq] : histogram) std::cout << ' ' << count << "x" << freq;
    std::cout << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vanishing flats, differential spectra and covers over GF(2^n)"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--n", cfg.n, "field degree")->check(CLI::Range(kMinDegree, kMaxDegree));
  app.add_option("--modulus", cfg.modulus, "defining polynomial as an integer (0x... accepted)");
  app.add_option("--monomial", cfg.monomial, "use x^d");
  app.add_option("--do", cfg.do_terms, "DO polynomial as i,j:c entries");
  app.add_option("--poly", cfg.poly, "univariate polynomial as c:e entries");
  app.add_option("--table", cfg.table_path, "value table, one integer per line");
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", cfg.format, "text, json or csv")->transform(CLI::CheckedTransformer(formats));
  app.add_option("--seed", cfg.seed, "seed for randomized commands");
  app.add_option("--threads", cfg.threads, "worker threads (default: VANISH_THREADS or 1)")
      ->check(CLI::Range(1u, 256u));

  auto* spectrum_cmd = app.add_subcommand("spectrum", "differential spectrum of a function");

  std::string vflats_mode = "count", pqs_output;
  auto* vflats_cmd = app.add_subcommand("vflats", "vanishing flats of a function");
  vflats_cmd->add_option("mode", vflats_mode, "count, list or pqs-export")
      ->check(CLI::IsMember({"count", "list", "pqs-export"}));
  vflats_cmd->add_option("--output", pqs_output, "pqs-export destination");

  std::string table_which, family;
  std::optional<unsigned> table_t;
  unsigned variant = 0;
  auto* table_cmd = app.add_subcommand("table", "reproduce the closed-form and exhaustive count tables");
  table_cmd->add_option("which", table_which, "table1 or table2")
      ->required()
      ->check(CLI::IsMember({"table1", "table2"}));
  table_cmd->add_option("--family", family, "closed-form family (table1)");
  table_cmd->add_option("--t", table_t, "family parameter t (table1)");
  table_cmd->add_option("--variant", variant, "exponent variant 0 or 1 (table1)");

  CoverArgs cover_args;
  auto* cover_cmd = app.add_subcommand("cover", "build and verify covers");
  cover_cmd->require_subcommand(1);
  auto* build_cmd = cover_cmd->add_subcommand("build", "build a cover from a Gold permutation");
  build_cmd->add_option("kind", cover_args.kind, "gold2, or subfield (alias thm8)")
      ->required()
      ->check(CLI::IsMember({"gold2", "subfield", "thm8"}));
  build_cmd->add_option("--t", cover_args.t, "Gold parameter t");
  build_cmd->add_option("--x", cover_args.x, "first basis vector (gold2)");
  build_cmd->add_option("--y", cover_args.y, "second basis vector (gold2)");
  build_cmd->add_option("--alpha", cover_args.alpha, "subfield scale (subfield kind)");
  build_cmd->add_option("--output", cover_args.output, "write the cover as JSON");
  build_cmd->add_flag("--list", cover_args.list, "list each flat's points");
  auto* verify_cmd = cover_cmd->add_subcommand("verify", "check a cover JSON file");
  verify_cmd->add_option("--input", cover_args.input, "cover JSON")->required();
  verify_cmd->add_flag("--list", cover_args.list, "list each flat's points");

  std::optional<std::uint64_t> code_d;
  std::string method = "flats";
  auto* code_cmd = app.add_subcommand("codeweights", "weight-3/4 codewords of the cyclic code with zeroes alpha, alpha^d");
  code_cmd->add_option("--d", code_d, "exponent d");
  code_cmd->add_option("--method", method, "flats, direct or both")->check(CLI::IsMember({"flats", "direct", "both"}));

  auto* kloosterman_cmd = app.add_subcommand("kloosterman", "Kloosterman sum K(n), all n when --n is absent");

  std::size_t support = 3;
  unsigned samples = 20;
  bool verify_search = false;
  auto* search_cmd = app.add_subcommand("dosearch", "vanishing-flat counts of seeded random DO polynomials");
  search_cmd->add_option("--support", support, "number of nonzero terms");
  search_cmd->add_option("--samples", samples, "number of polynomials");
  search_cmd->add_flag("--verify", verify_search, "also enumerate flats (n <= 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (cfg.threads != 0) set_default_threads(cfg.threads);
    if (spectrum_cmd->parsed()) return cmd_spectrum(cfg);
    if (vflats_cmd->parsed()) return cmd_vflats(cfg, vflats_mode, pqs_output);
    if (table_cmd->parsed()) {
      if (table_which == "table2") return cmd_table2(cfg);
      return cmd_table1(cfg, family, table_t, variant);
    }
    if (build_cmd->parsed()) return cmd_cover_build(cfg, cover_args);
    if (verify_cmd->parsed()) return cmd_cover_verify(cfg, cover_args);
    if (code_cmd->parsed()) return cmd_codeweights(cfg, code_d, method);
    if (kloosterman_cmd->parsed()) return cmd_kloosterman(cfg);
    if (search_cmd->parsed()) return cmd_dosearch(cfg, support, samples, verify_search);
  } catch (const std::logic_error& e) {
    // FieldError, DomainError, ParameterError and CapacityError all land here
    const bool internal = dynamic_cast<const std::invalid_argument*>(&e) == nullptr &&
                          dynamic_cast<const std::domain_error*>(&e) == nullptr &&
                          dynamic_cast<const std::length_error*>(&e) == nullptr;
    std::cerr << "error: " << e.what() << '\n';
    return internal ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
