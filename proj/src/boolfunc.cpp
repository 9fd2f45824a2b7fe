#include "vanish/boolfunc.hpp"

#include <algorithm>
#include <string>

#include "vanish/parallel.hpp"

namespace vanish {
namespace {

void require_direction(const FunctionTable& f, Element a) {
  if (a == 0 || !f.field().contains(a))
    throw DomainError("direction must be a nonzero field element, got " + std::to_string(a));
}

}  // namespace

FunctionTable::FunctionTable(Field field, std::vector<Element> values)
    : field_(std::move(field)), values_(std::move(values)) {
  if (values_.size() != field_.size())
    throw FieldError("function table has " + std::to_string(values_.size()) + " entries, expected " +
                     std::to_string(field_.size()));
  for (Element v : values_)
    if (!field_.contains(v)) throw FieldError("table entry " + std::to_string(v) + " is not a field element");
}

FunctionTable from_monomial(const Field& field, std::uint64_t d) {
  std::vector<Element> values(field.size());
  for (Element x = 0; x < field.size(); ++x) values[x] = field.pow(x, d);
  return FunctionTable(field, std::move(values));
}

FunctionTable from_univariate(const Field& field, std::span<const Term> terms) {
  for (const auto& t : terms) field.element(t.coefficient);
  std::vector<Element> values(field.size(), 0);
  for (Element x = 0; x < field.size(); ++x) {
    Element acc = 0;
    for (const auto& t : terms) acc ^= field.mul(t.coefficient, field.pow(x, t.exponent));
    values[x] = acc;
  }
  return FunctionTable(field, std::move(values));
}

FunctionTable identity_function(const Field& field) { return from_monomial(field, 1); }

FunctionTable add(const FunctionTable& f, const FunctionTable& g) {
  require_same_field(f.field(), g.field());
  std::vector<Element> values(f.size());
  for (Element x = 0; x < f.size(); ++x) values[x] = f(x) ^ g(x);
  return FunctionTable(f.field(), std::move(values));
}

FunctionTable compose(const FunctionTable& outer, const FunctionTable& inner) {
  require_same_field(outer.field(), inner.field());
  std::vector<Element> values(outer.size());
  for (Element x = 0; x < outer.size(); ++x) values[x] = outer(inner(x));
  return FunctionTable(outer.field(), std::move(values));
}

FunctionTable inverse_permutation(const FunctionTable& f) {
  if (!is_permutation(f)) throw DomainError("function is not a permutation");
  std::vector<Element> values(f.size());
  for (Element x = 0; x < f.size(); ++x) values[f(x)] = x;
  return FunctionTable(f.field(), std::move(values));
}

FunctionTable apply_frobenius(const FunctionTable& f, unsigned i) {
  std::vector<Element> values(f.size());
  for (Element x = 0; x < f.size(); ++x) values[x] = f.field().frobenius(f(x), i);
  return FunctionTable(f.field(), std::move(values));
}

unsigned delta(const FunctionTable& f, Element a, Element b) {
  require_direction(f, a);
  f.field().element(b);
  unsigned count = 0;
  for (Element x = 0; x < f.size(); ++x)
    if ((f(x ^ a) ^ f(x)) == b) ++count;
  return count;
}

std::map<unsigned, std::uint64_t> DifferentialSpectrum::normalized() const {
  std::map<unsigned, std::uint64_t> out;
  const std::uint64_t directions = per_direction.empty() ? 1 : per_direction.size() - 1;
  for (auto [value, count] : counts) out[value] = count / directions;
  return out;
}

DifferentialSpectrum spectrum(const FunctionTable& f) {
  const std::size_t size = f.size();
  DifferentialSpectrum result;
  result.per_direction.assign(size, 0);

  const unsigned workers = worker_count(size - 1);
  // frequency[w][v] = number of (a, b) pairs in worker w's range with delta = v
  std::vector<std::vector<std::uint64_t>> frequency(workers, std::vector<std::uint64_t>(size + 1, 0));

  parallel_chunks(1, size, [&](unsigned w, std::size_t lo, std::size_t hi) {
    std::vector<unsigned> histogram(size);
    auto& freq = frequency[w];
    for (std::size_t a = lo; a < hi; ++a) {
      std::fill(histogram.begin(), histogram.end(), 0u);
      for (Element x = 0; x < size; ++x) ++histogram[f(x ^ static_cast<Element>(a)) ^ f(x)];
      unsigned best = 0;
      for (unsigned h : histogram) {
        ++freq[h];
        best = std::max(best, h);
      }
      result.per_direction[a] = best;
    }
  });

  for (std::size_t v = 0; v <= size; ++v) {
    std::uint64_t total = 0;
    for (const auto& freq : frequency) total += freq[v];
    if (total) result.counts[static_cast<unsigned>(v)] = total;
  }
  for (std::size_t a = 1; a < size; ++a) result.uniformity = std::max(result.uniformity, result.per_direction[a]);
  return result;
}

std::vector<Element> image_set(const FunctionTable& f, Element a) {
  require_direction(f, a);
  std::vector<bool> seen(f.size(), false);
  for (Element x = 0; x < f.size(); ++x) seen[f(x ^ a) ^ f(x)] = true;
  std::vector<Element> out;
  for (Element b = 0; b < f.size(); ++b)
    if (seen[b]) out.push_back(b);
  return out;
}

unsigned direction_uniformity(const FunctionTable& f, Element a) {
  require_direction(f, a);
  std::vector<unsigned> histogram(f.size(), 0);
  unsigned best = 0;
  for (Element x = 0; x < f.size(); ++x) best = std::max(best, ++histogram[f(x ^ a) ^ f(x)]);
  return best;
}

bool is_partially_apn(const FunctionTable& f, Element a) { return direction_uniformity(f, a) == 2; }

bool is_apn(const FunctionTable& f) {
  for (Element a = 1; a < f.size(); ++a)
    if (direction_uniformity(f, a) != 2) return false;
  return true;
}

std::vector<Element> critical_directions(const FunctionTable& f) {
  std::vector<Element> out;
  for (Element a = 1; a < f.size(); ++a)
    if (direction_uniformity(f, a) >= 4) out.push_back(a);
  return out;
}

bool is_permutation(const FunctionTable& f) {
  std::vector<bool> seen(f.size(), false);
  for (Element v : f.values()) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace vanish
