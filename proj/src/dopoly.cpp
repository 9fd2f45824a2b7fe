#include "vanish/dopoly.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "vanish/parallel.hpp"

namespace vanish {
namespace {

// x^(2^i) for i = 0 .. n-1.
std::vector<Element> frobenius_orbit(const Field& field, Element x) {
  std::vector<Element> out(field.degree());
  for (unsigned i = 0; i < field.degree(); ++i) {
    out[i] = x;
    x = field.square(x);
  }
  return out;
}

Element linearized_eval(const DOPolynomial& f, const std::vector<Element>& a_orbit,
                        const std::vector<Element>& x_orbit) {
  const Field& field = f.field();
  Element acc = 0;
  for (const auto& [key, c] : f.coefficients()) {
    const auto [i, j] = key;
    acc ^= field.mul(c, field.mul(a_orbit[i], x_orbit[j]) ^ field.mul(a_orbit[j], x_orbit[i]));
  }
  return acc;
}

}  // namespace

BinaryMatrix BinaryMatrix::identity(unsigned dim) {
  BinaryMatrix m{dim, std::vector<std::uint32_t>(dim)};
  for (unsigned k = 0; k < dim; ++k) m.columns[k] = 1u << k;
  return m;
}

BinaryMatrix BinaryMatrix::zero(unsigned dim) { return {dim, std::vector<std::uint32_t>(dim, 0)}; }

std::uint32_t BinaryMatrix::apply(std::uint32_t v) const noexcept {
  std::uint32_t out = 0;
  for (unsigned k = 0; k < dim; ++k)
    if ((v >> k) & 1) out ^= columns[k];
  return out;
}

unsigned rank(std::vector<std::uint32_t> vectors) {
  unsigned r = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const std::uint32_t pivot = vectors[i];
    if (pivot == 0) continue;
    ++r;
    const std::uint32_t low = pivot & (~pivot + 1);
    for (std::size_t j = i + 1; j < vectors.size(); ++j)
      if (vectors[j] & low) vectors[j] ^= pivot;
  }
  return r;
}

unsigned rank(const BinaryMatrix& m) { return rank(m.columns); }

void DOPolynomial::set(unsigned i, unsigned j, Element c) {
  if (!(i < j && j < field_.degree()))
    throw DomainError("DO term indices must satisfy 0 <= i < j < n, got (" + std::to_string(i) + ", " +
                      std::to_string(j) + ")");
  field_.element(c);
  if (c == 0)
    coeffs_.erase({i, j});
  else
    coeffs_[{i, j}] = c;
}

Element DOPolynomial::get(unsigned i, unsigned j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? 0 : it->second;
}

DOPolynomial DOPolynomial::gold(const Field& field, unsigned t) {
  DOPolynomial f(field);
  f.set(0, t, 1);
  return f;
}

Element evaluate(const DOPolynomial& f, Element x) {
  const Field& field = f.field();
  const auto orbit = frobenius_orbit(field, field.element(x));
  Element acc = 0;
  for (const auto& [key, c] : f.coefficients()) acc ^= field.mul(c, field.mul(orbit[key.first], orbit[key.second]));
  return acc;
}

FunctionTable to_table(const DOPolynomial& f) {
  std::vector<Element> values(f.field().size());
  for (Element x = 0; x < values.size(); ++x) values[x] = evaluate(f, x);
  return FunctionTable(f.field(), std::move(values));
}

std::vector<Term> expand(const DOPolynomial& f) {
  std::vector<Term> out;
  for (const auto& [key, c] : f.coefficients())
    out.push_back({c, (std::uint64_t{1} << key.first) + (std::uint64_t{1} << key.second)});
  return out;
}

Element linearized_eval(const DOPolynomial& f, Element a, Element x) {
  const Field& field = f.field();
  return linearized_eval(f, frobenius_orbit(field, field.element(a)), frobenius_orbit(field, field.element(x)));
}

BinaryMatrix linearized_matrix(const DOPolynomial& f, Element a) {
  const Field& field = f.field();
  if (a == 0 || !field.contains(a)) throw DomainError("linearized map needs a nonzero direction");
  const auto a_orbit = frobenius_orbit(field, a);
  BinaryMatrix m = BinaryMatrix::zero(field.degree());
  for (unsigned k = 0; k < field.degree(); ++k)
    m.columns[k] = linearized_eval(f, a_orbit, frobenius_orbit(field, Element{1} << k));
  return m;
}

std::vector<unsigned> rank_multiset(const DOPolynomial& f) {
  const std::size_t size = f.field().size();
  std::vector<unsigned> ranks(size - 1);
  parallel_chunks(1, size, [&](unsigned, std::size_t lo, std::size_t hi) {
    for (std::size_t a = lo; a < hi; ++a) ranks[a - 1] = rank(linearized_matrix(f, static_cast<Element>(a)));
  });
  return ranks;
}

std::uint64_t count_vflats_from_ranks(unsigned n, const std::vector<unsigned>& ranks) {
  // A rank-h direction contributes 2^h * C(2^(n-h-1), 2) = 2^(n-2) (2^(n-h-1) - 1).
  std::uint64_t sum = 0;
  for (unsigned h : ranks) {
    if (h >= n) throw std::logic_error("rank " + std::to_string(h) + " of L_{f,a} reaches n; L_{f,a}(a) = 0");
    sum += (std::uint64_t{1} << (n - h - 1)) - 1;
  }
  const std::uint64_t total = (std::uint64_t{1} << (n - 2)) * sum;
  if (total % 3 != 0) throw std::logic_error("rank-count sum is not divisible by 3");
  return total / 3;
}

std::uint64_t count_vflats_do(const DOPolynomial& f) {
  return count_vflats_from_ranks(f.field().degree(), rank_multiset(f));
}

bool is_vanishing_pair(const DOPolynomial& f, Element x1, Element x2) {
  const Field& field = f.field();
  field.element(x1);
  field.element(x2);
  if (x1 == 0 || x2 == 0 || x1 == x2)
    throw DomainError("x1, x2 and x1 + x2 must be distinct and nonzero");
  return linearized_eval(f, x1, x2) == 0;
}

DOPolynomial random_do(const Field& field, std::size_t support, std::uint64_t seed) {
  const unsigned n = field.degree();
  std::vector<DOPolynomial::Key> keys;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) keys.emplace_back(i, j);
  if (support > keys.size())
    throw DomainError("support " + std::to_string(support) + " exceeds the " + std::to_string(keys.size()) +
                      " available DO terms");
  std::mt19937_64 rng(seed);
  std::shuffle(keys.begin(), keys.end(), rng);
  std::uniform_int_distribution<Element> coeff(1, field.order());
  DOPolynomial f(field);
  for (std::size_t k = 0; k < support; ++k) f.set(keys[k].first, keys[k].second, coeff(rng));
  return f;
}

}  // namespace vanish
