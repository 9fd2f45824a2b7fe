#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "vanish/vanish.hpp"

namespace vanish::testing {

inline FunctionTable random_table(const Field& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<Element> pick(0, field.order());
  std::vector<Element> values(field.size());
  for (auto& v : values) v = pick(rng);
  return FunctionTable(field, std::move(values));
}

// Columns of a uniformly random n x n binary matrix, redrawn until invertible.
inline std::vector<Element> random_invertible_columns(const Field& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<Element> pick(0, field.order());
  for (;;) {
    std::vector<Element> cols(field.degree());
    for (auto& c : cols) c = pick(rng);
    if (rank(std::vector<std::uint32_t>(cols.begin(), cols.end())) == field.degree()) return cols;
  }
}

inline FunctionTable linear_map_table(const Field& field, const std::vector<Element>& cols, Element constant) {
  std::vector<Element> values(field.size());
  for (Element x = 0; x < field.size(); ++x) {
    Element y = constant;
    for (unsigned k = 0; k < field.degree(); ++k)
      if ((x >> k) & 1) y ^= cols[k];
    values[x] = y;
  }
  return FunctionTable(field, std::move(values));
}

inline FunctionTable random_affine_permutation(const Field& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<Element> pick(0, field.order());
  return linear_map_table(field, random_invertible_columns(field, rng), pick(rng));
}

// Random affine function sum b_i x^(2^i) + c built from linearized terms.
inline FunctionTable random_affine_polynomial(const Field& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<Element> pick(0, field.order());
  std::vector<Term> terms;
  for (unsigned i = 0; i < field.degree(); ++i) terms.push_back({pick(rng), std::uint64_t{1} << i});
  terms.push_back({pick(rng), 0});
  return from_univariate(field, terms);
}

// Brute force over all 4-subsets {x1 < x2 < x3 < x4 = x1+x2+x3}.
inline std::vector<Flat> brute_force_flats(const FunctionTable& f) {
  std::vector<Flat> out;
  const Element size = static_cast<Element>(f.size());
  for (Element a = 0; a < size; ++a)
    for (Element b = a + 1; b < size; ++b)
      for (Element c = b + 1; c < size; ++c) {
        const Element d = a ^ b ^ c;
        if (d <= c) continue;
        if ((f(a) ^ f(b) ^ f(c) ^ f(d)) == 0) out.emplace_back(a, b, c, d);
      }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Absolute trace GF(2^n) -> GF(2).
inline unsigned trace(const Field& field, Element x) {
  Element acc = 0;
  for (unsigned i = 0; i < field.degree(); ++i) {
    acc ^= x;
    x = field.mul_shift_xor(x, x);
  }
  return acc;
}

}  // namespace vanish::testing
