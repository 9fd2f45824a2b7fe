#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace vanish {

// Field elements use the polynomial basis: bit i is the coefficient of x^i.
using Element = std::uint32_t;

inline constexpr unsigned kMinDegree = 2;
inline constexpr unsigned kMaxDegree = 16;

// Invalid field description (degree out of range, modulus not of full order).
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the domain of an operation (inverse of zero, a = 0 direction).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Primitive polynomial shipped for degree n: lowest weight, then smallest
// integer encoding.
std::uint32_t default_modulus(unsigned n);

// GF(2^n) for 2 <= n <= 16. Copies share the log/antilog tables, so a Field
// is cheap to pass around by value.
class Field {
 public:
  explicit Field(unsigned n);
  Field(unsigned n, std::uint32_t modulus);

  unsigned degree() const noexcept { return n_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return std::size_t{1} << n_; }
  std::uint32_t order() const noexcept { return (1u << n_) - 1; }
  bool contains(std::uint64_t v) const noexcept { return v < size(); }

  // Checked conversion from an integer encoding.
  Element element(std::uint64_t v) const;

  static Element add(Element a, Element b) noexcept { return a ^ b; }

  // Log/antilog table multiplication.
  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return tables_->exp[tables_->log[a] + tables_->log[b]];
  }
  // Carry-less shift-and-XOR multiplication with reduction; agrees with mul.
  Element mul_shift_xor(Element a, Element b) const noexcept;

  Element square(Element a) const noexcept { return mul(a, a); }
  // pow(0, 0) = 1.
  Element pow(Element a, std::uint64_t d) const noexcept;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  // a^(2^i), 0 <= i < n.
  Element frobenius(Element a, unsigned i) const;

  Element primitive_element() const noexcept { return tables_->primitive; }
  // primitive_element()^k.
  Element exp(std::uint64_t k) const noexcept { return tables_->exp[k % order()]; }
  // Discrete log to the primitive element; a must be nonzero.
  std::uint32_t log(Element a) const;

  // zeta = alpha^((2^n - 1) / 3); requires even n.
  Element cube_root_of_unity() const;

  // True when a lies in the subfield GF(2^s); s must divide n.
  bool in_subfield(Element a, unsigned s) const;
  // Elements of GF(2^s), ascending.
  std::vector<Element> subfield(unsigned s) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.n_ == b.n_ && a.modulus_ == b.modulus_;
  }

  std::string describe() const;

 private:
  struct Tables {
    std::vector<Element> exp;  // length 2 * order, so exp[log a + log b] needs no reduction
    std::vector<std::uint32_t> log;
    Element primitive = 0;
  };

  unsigned n_;
  std::uint32_t modulus_;
  std::shared_ptr<const Tables> tables_;
};

// Thrown when two objects built over different fields meet.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatch("operands live in different fields: " + a.describe() + " vs " + b.describe());
}

// Kloosterman value K = 1 + (-1)^(n-1) / 2^(n-1) * sum_{i=0}^{floor(n/2)} (-1)^i C(n,2i) 7^i,
// evaluated exactly.
std::int64_t kloosterman(unsigned n);

}  // namespace vanish
