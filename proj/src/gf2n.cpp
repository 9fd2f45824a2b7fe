#include "vanish/gf2n.hpp"

#include <array>
#include <bit>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace vanish {
namespace {

constexpr std::array<std::uint32_t, kMaxDegree + 1> kModuli = {
    0,      0,      0x7,    0xb,    0x13,   0x25,   0x43,    0x83,    0x11d,
    0x211,  0x409,  0x805,  0x1053, 0x201b, 0x402b, 0x8003, 0x1002d,
};

std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, unsigned n, std::uint32_t modulus) {
  std::uint32_t r = 0;
  const std::uint32_t top = 1u << n;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus;
  }
  return r;
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t d, unsigned n, std::uint32_t modulus) {
  std::uint32_t r = 1;
  while (d) {
    if (d & 1) r = clmul_mod(r, a, n, modulus);
    a = clmul_mod(a, a, n, modulus);
    d >>= 1;
  }
  return r;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t v) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= v; ++p) {
    if (v % p) continue;
    out.push_back(p);
    while (v % p == 0) v /= p;
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

std::uint32_t default_modulus(unsigned n) {
  if (n < kMinDegree || n > kMaxDegree)
    throw FieldError("extension degree " + std::to_string(n) + " outside 2..16");
  return kModuli[n];
}

Field::Field(unsigned n) : Field(n, default_modulus(n)) {}

Field::Field(unsigned n, std::uint32_t modulus) : n_(n), modulus_(modulus) {
  if (n < kMinDegree || n > kMaxDegree)
    throw FieldError("extension degree " + std::to_string(n) + " outside 2..16");
  if (std::bit_width(modulus) != n + 1)
    throw FieldError("modulus " + std::to_string(modulus) + " does not have degree " + std::to_string(n));

  // A unit of order 2^n - 1 exists iff the modulus is irreducible.
  const std::uint32_t group = (1u << n) - 1;
  const auto factors = prime_factors(group);
  Element primitive = 0;
  for (Element g = 2; g <= group && primitive == 0; ++g) {
    if (pow_mod(g, group, n, modulus) != 1) continue;
    bool full = true;
    for (auto p : factors) {
      if (pow_mod(g, group / p, n, modulus) == 1) {
        full = false;
        break;
      }
    }
    if (full) primitive = g;
  }
  if (primitive == 0)
    throw FieldError("modulus " + std::to_string(modulus) + " is not irreducible over F_2");

  auto tables = std::make_shared<Tables>();
  tables->primitive = primitive;
  tables->exp.resize(2 * std::size_t{group});
  tables->log.assign(std::size_t{1} << n, 0);
  Element x = 1;
  for (std::uint32_t k = 0; k < group; ++k) {
    tables->exp[k] = x;
    tables->exp[k + group] = x;
    tables->log[x] = k;
    x = clmul_mod(x, primitive, n, modulus);
  }
  tables_ = std::move(tables);
}

Element Field::element(std::uint64_t v) const {
  if (!contains(v))
    throw FieldError("value " + std::to_string(v) + " is not an element of " + describe());
  return static_cast<Element>(v);
}

Element Field::mul_shift_xor(Element a, Element b) const noexcept {
  return clmul_mod(a, b, n_, modulus_);
}

Element Field::pow(Element a, std::uint64_t d) const noexcept {
  if (d == 0) return 1;
  if (a == 0) return 0;
  return tables_->exp[(std::uint64_t{tables_->log[a]} * (d % order())) % order()];
}

Element Field::inv(Element a) const {
  if (a == 0) throw DomainError("zero has no multiplicative inverse");
  const std::uint32_t l = tables_->log[a];
  return tables_->exp[l == 0 ? 0 : order() - l];
}

Element Field::frobenius(Element a, unsigned i) const {
  if (i >= n_)
    throw DomainError("Frobenius index " + std::to_string(i) + " outside 0.." + std::to_string(n_ - 1));
  for (unsigned k = 0; k < i; ++k) a = square(a);
  return a;
}

std::uint32_t Field::log(Element a) const {
  if (a == 0 || !contains(a)) throw DomainError("logarithm of zero or non-element");
  return tables_->log[a];
}

Element Field::cube_root_of_unity() const {
  if (n_ % 2 != 0)
    throw DomainError("GF(2^" + std::to_string(n_) + ") has no primitive cube root of unity (n odd)");
  return exp(order() / 3);
}

bool Field::in_subfield(Element a, unsigned s) const {
  if (s == 0 || n_ % s != 0)
    throw DomainError("GF(2^" + std::to_string(s) + ") is not a subfield of " + describe());
  Element b = a;
  for (unsigned k = 0; k < s; ++k) b = square(b);
  return b == a;
}

std::vector<Element> Field::subfield(unsigned s) const {
  std::vector<Element> out;
  out.reserve(std::size_t{1} << s);
  for (Element a = 0; a < size(); ++a)
    if (in_subfield(a, s)) out.push_back(a);
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(2^" << n_ << ") mod 0x" << std::hex << modulus_;
  return os.str();
}

std::int64_t kloosterman(unsigned n) {
  using boost::multiprecision::cpp_int;
  if (n < 2) throw DomainError("kloosterman requires n >= 2");
  cpp_int sum = 0;
  cpp_int binom = 1;  // C(n, k), advanced one k at a time
  cpp_int seven = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k % 2 == 0) {
      const cpp_int term = binom * seven;
      sum += (k / 2) % 2 == 0 ? term : cpp_int(-term);
      seven *= 7;
    }
    binom = binom * (n - k) / (k + 1);
  }
  const cpp_int denom = cpp_int(1) << (n - 1);
  if (sum % denom != 0) throw std::logic_error("kloosterman: inexact division for n = " + std::to_string(n));
  cpp_int k = sum / denom;
  if (n % 2 == 0) k = -k;  // (-1)^(n-1)
  return static_cast<std::int64_t>(k + 1);
}

}  // namespace vanish
