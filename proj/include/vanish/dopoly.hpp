#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "vanish/boolfunc.hpp"

namespace vanish {

// Square matrix over F_2; columns[k] is the image of the basis vector x^k.
struct BinaryMatrix {
  unsigned dim = 0;
  std::vector<std::uint32_t> columns;

  static BinaryMatrix identity(unsigned dim);
  static BinaryMatrix zero(unsigned dim);

  std::uint32_t apply(std::uint32_t v) const noexcept;
};

// Rank over F_2 by Gaussian elimination on packed columns.
unsigned rank(const BinaryMatrix& m);
unsigned rank(std::vector<std::uint32_t> vectors);

// f(x) = sum_{0 <= i < j < n} c_ij x^(2^i + 2^j). Zero coefficients are not stored.
class DOPolynomial {
 public:
  using Key = std::pair<unsigned, unsigned>;

  explicit DOPolynomial(Field field) : field_(std::move(field)) {}

  const Field& field() const noexcept { return field_; }
  const std::map<Key, Element>& coefficients() const noexcept { return coeffs_; }

  // Requires i < j < n; c = 0 erases the term.
  void set(unsigned i, unsigned j, Element c);
  Element get(unsigned i, unsigned j) const;

  // x^(2^t + 1)
  static DOPolynomial gold(const Field& field, unsigned t);

 private:
  Field field_;
  std::map<Key, Element> coeffs_;
};

Element evaluate(const DOPolynomial& f, Element x);
FunctionTable to_table(const DOPolynomial& f);

// The same polynomial as a univariate term list (coefficient, 2^i + 2^j).
std::vector<Term> expand(const DOPolynomial& f);

// L_{f,a}(x) = sum c_ij (a^(2^i) x^(2^j) + a^(2^j) x^(2^i)).
Element linearized_eval(const DOPolynomial& f, Element a, Element x);
BinaryMatrix linearized_matrix(const DOPolynomial& f, Element a);

// rank(L_{f,a}) for a = 1 .. 2^n - 1, in that order.
std::vector<unsigned> rank_multiset(const DOPolynomial& f);

// (2^(n-2) / 3) * sum over the rank multiset of (2^(n-h-1) - 1).
std::uint64_t count_vflats_do(const DOPolynomial& f);
std::uint64_t count_vflats_from_ranks(unsigned n, const std::vector<unsigned>& ranks);

// True iff {0, x1, x2, x1 + x2} (and hence each of its translates) is a
// vanishing flat of f.
bool is_vanishing_pair(const DOPolynomial& f, Element x1, Element x2);

// Uniform nonzero coefficients on a uniformly chosen support of the given size.
DOPolynomial random_do(const Field& field, std::size_t support, std::uint64_t seed);

}  // namespace vanish
