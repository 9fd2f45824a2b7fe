#pragma once

#include <string>
#include <vector>

#include "vanish/boolfunc.hpp"

namespace vanish {

// base + span(basis). The basis must be linearly independent over F_2.
class AffineSubspace {
 public:
  AffineSubspace(Element base, std::vector<Element> basis);

  // Recovers base and basis from an explicit point set; throws DomainError if
  // the set is not an affine subspace.
  static AffineSubspace from_points(std::vector<Element> points);

  Element base() const noexcept { return base_; }
  const std::vector<Element>& basis() const noexcept { return basis_; }
  unsigned dimension() const noexcept { return static_cast<unsigned>(basis_.size()); }

  // All 2^d points, ascending.
  std::vector<Element> points() const;
  // Reduced row-echelon basis of the linear part; equal iff parallel.
  std::vector<Element> canonical_basis() const;
  // Smallest point of the subspace.
  Element canonical_base() const;

 private:
  Element base_;
  std::vector<Element> basis_;
};

// The linear part {p + base : p in s}, ascending; contains 0.
std::vector<Element> linear_part(const AffineSubspace& s);

// Span of a set of vectors, ascending.
std::vector<Element> span(const std::vector<Element>& vectors);

// Reduced row-echelon form of a set of vectors (zero rows dropped), ordered by
// decreasing leading bit.
std::vector<Element> reduced_echelon(std::vector<Element> vectors);

struct Cover {
  Field field;
  unsigned dimension = 0;
  std::vector<AffineSubspace> flats;
};

// The subspace spanned by `basis` and its cosets; representatives are the
// smallest points not yet covered.
Cover trivial_cover(const Field& field, const std::vector<Element>& basis);

// Pointwise image of every flat under the permutation f. Throws DomainError
// when f is not a permutation or some image is not a flat.
Cover image_cover(const FunctionTable& f, const Cover& cover);

struct CoverReport {
  bool ok = true;
  std::vector<std::string> problems;
};

CoverReport check_cover(const Cover& cover);
bool verify_cover(const Cover& cover);

// Both throw DomainError when the argument is not a cover.
bool verify_nonparallel(const Cover& cover);
bool verify_totally_skew(const Cover& cover);

// Flat indices grouped by equal linear part; groups ordered by first member.
std::vector<std::vector<std::size_t>> parallel_decomposition(const Cover& cover);

struct GoldCoverPair {
  Cover trivial;
  Cover image;
};

// Trivial cover on {0, x, y, x + y} and its image under x^(2^t + 1).
// Requires n/gcd(n,t) odd, gcd(n,t) > 1 and x/y in GF(2^s) \ {0, 1}.
GoldCoverPair gold_cover(const Field& field, unsigned t, Element x, Element y);

// {f(c + alpha GF(2^s)) : c} for f = x^(2^t + 1): a dimension-s cover.
Cover subfield_image_cover(const Field& field, unsigned t, Element alpha);

// For a DO permutation f and vanishing 2-subspace {0, x, y, x + y}: checks
// delta_f(x) = delta_f(y) = delta_f(x + y) = 4 and that E_f(x), E_f(y),
// E_f(x + y) are pairwise disjoint.
bool skew_condition_check(const FunctionTable& f, Element x, Element y);

}  // namespace vanish
