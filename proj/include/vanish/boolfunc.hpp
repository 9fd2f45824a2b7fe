#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "vanish/gf2n.hpp"

namespace vanish {

// A map GF(2^n) -> GF(2^n) stored as its full value table.
class FunctionTable {
 public:
  FunctionTable(Field field, std::vector<Element> values);

  const Field& field() const noexcept { return field_; }
  unsigned degree() const noexcept { return field_.degree(); }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Element> values() const noexcept { return values_; }
  Element operator()(Element x) const noexcept { return values_[x]; }

  friend bool operator==(const FunctionTable& a, const FunctionTable& b) {
    return a.field_ == b.field_ && a.values_ == b.values_;
  }

 private:
  Field field_;
  std::vector<Element> values_;
};

struct Term {
  Element coefficient = 0;
  std::uint64_t exponent = 0;
};

FunctionTable from_monomial(const Field& field, std::uint64_t d);
FunctionTable from_univariate(const Field& field, std::span<const Term> terms);
FunctionTable identity_function(const Field& field);

// Pointwise helpers used to build equivalent functions.
FunctionTable add(const FunctionTable& f, const FunctionTable& g);
FunctionTable compose(const FunctionTable& outer, const FunctionTable& inner);
FunctionTable inverse_permutation(const FunctionTable& f);
FunctionTable apply_frobenius(const FunctionTable& f, unsigned i);

// delta_f(a, b) = #{x : f(x + a) + f(x) = b}.
unsigned delta(const FunctionTable& f, Element a, Element b);

struct DifferentialSpectrum {
  // Even value 2i -> number of pairs (a != 0, b) with delta_f(a, b) = 2i.
  std::map<unsigned, std::uint64_t> counts;
  unsigned uniformity = 0;
  // per_direction[a] = delta_f(a) = max_b delta_f(a, b); index 0 unused.
  std::vector<unsigned> per_direction;

  // counts[2i] / (2^n - 1); meaningful for monomials, where every direction
  // has the same multiset.
  std::map<unsigned, std::uint64_t> normalized() const;
};

DifferentialSpectrum spectrum(const FunctionTable& f);

// E_f(a), ascending.
std::vector<Element> image_set(const FunctionTable& f, Element a);

// Maximum of delta_f(a, .) for a single direction.
unsigned direction_uniformity(const FunctionTable& f, Element a);

bool is_partially_apn(const FunctionTable& f, Element a);
bool is_apn(const FunctionTable& f);

// D_f = {a != 0 : delta_f(a) >= 4}, ascending.
std::vector<Element> critical_directions(const FunctionTable& f);

bool is_permutation(const FunctionTable& f);

}  // namespace vanish
