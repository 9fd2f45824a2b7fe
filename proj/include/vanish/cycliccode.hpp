#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vanish/boolfunc.hpp"

namespace vanish {

// Two-row parity-check matrix over GF(2^n): column k is (labels[k], images[k]).
struct ParityCheckSpec {
  Field field;
  std::vector<Element> labels;
  std::vector<Element> images;
};

// Columns (alpha^k, alpha^(k d)) for k = 0 .. 2^n - 2: the cyclic code with
// zeroes alpha and alpha^d.
ParityCheckSpec cyclic_parity_check(const Field& field, std::uint64_t d);

// Columns (0, f(0)), (1, f(1)), (alpha, f(alpha)), ..., (alpha^(2^n-2), f(alpha^(2^n-2))).
ParityCheckSpec extended_parity_check(const FunctionTable& f);

struct WeightCounts {
  std::uint64_t weight3 = 0;
  std::uint64_t weight4 = 0;
};

// N3 = vanishing flats of x^d through 0, N4 = the rest.
WeightCounts weight_counts_from_flats(const Field& field, std::uint64_t d);

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Brute-force count of codewords of weight 3 and (if max_weight is 4) weight 4.
// Limited to n <= 8 for weight 3 and n <= 6 for weight 4.
struct LowWeightCounts {
  std::uint64_t weight3 = 0;
  std::optional<std::uint64_t> weight4;
};
LowWeightCounts direct_low_weight_counts(const ParityCheckSpec& spec, unsigned max_weight);

// Number of weight-4 codewords of the extended code of f, i.e. the number of
// vanishing flats of f. With verify_direct (n <= 5) the direct enumeration is
// run as well and a disagreement throws std::logic_error.
std::uint64_t generalized_weight4_count(const FunctionTable& f, bool verify_direct = false);

}  // namespace vanish
