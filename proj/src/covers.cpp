#include "vanish/covers.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "vanish/dopoly.hpp"

namespace vanish {
namespace {

void require_cover(const Cover& cover) {
  const auto report = check_cover(cover);
  if (!report.ok) throw DomainError("not a cover: " + report.problems.front());
}

// Independent subset of `vectors`, greedily in order.
std::vector<Element> independent_subset(const std::vector<Element>& vectors) {
  std::vector<Element> chosen;
  std::vector<Element> echelon;
  for (Element v : vectors) {
    Element r = v;
    for (Element e : echelon)
      if (r & std::bit_floor(e)) r ^= e;
    if (r == 0) continue;
    chosen.push_back(v);
    echelon.push_back(r);
    std::sort(echelon.begin(), echelon.end(), std::greater<>());
  }
  return chosen;
}

// Gold permutation preconditions shared by both cover constructions.
unsigned gold_subfield_degree(const Field& field, unsigned t) {
  const unsigned n = field.degree();
  if (t < 1 || t >= n) throw DomainError("gold cover: t must satisfy 1 <= t <= n-1");
  const unsigned s = std::gcd(n, t);
  if ((n / s) % 2 == 0)
    throw DomainError("gold cover: x^(2^" + std::to_string(t) + "+1) is not a permutation of GF(2^" +
                      std::to_string(n) + ") (n/gcd(n,t) = " + std::to_string(n / s) + " is even)");
  if (s <= 1) throw DomainError("gold cover: gcd(n,t) = 1, the Gold function is APN and has no vanishing flats");
  return s;
}

}  // namespace

AffineSubspace::AffineSubspace(Element base, std::vector<Element> basis) : base_(base), basis_(std::move(basis)) {
  if (rank(std::vector<std::uint32_t>(basis_.begin(), basis_.end())) != basis_.size())
    throw DomainError("affine subspace basis is linearly dependent");
}

AffineSubspace AffineSubspace::from_points(std::vector<Element> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty() || !std::has_single_bit(points.size()))
    throw DomainError("point set of size " + std::to_string(points.size()) + " is not an affine subspace");
  const Element base = points.front();
  std::vector<Element> differences;
  for (Element p : points) differences.push_back(p ^ base);
  auto basis = independent_subset(differences);
  AffineSubspace s(base, std::move(basis));
  if (s.points() != points) throw DomainError("point set is not closed under the affine span");
  return s;
}

std::vector<Element> AffineSubspace::points() const {
  auto out = span(basis_);
  for (auto& p : out) p ^= base_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> AffineSubspace::canonical_basis() const { return reduced_echelon(basis_); }

Element AffineSubspace::canonical_base() const { return points().front(); }

std::vector<Element> span(const std::vector<Element>& vectors) {
  std::vector<Element> out{0};
  for (Element v : vectors) {
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.push_back(out[i] ^ v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Element> reduced_echelon(std::vector<Element> vectors) {
  std::vector<Element> rows;
  for (Element v : vectors) {
    for (Element r : rows)
      if (v & std::bit_floor(r)) v ^= r;
    if (v == 0) continue;
    const Element lead = std::bit_floor(v);
    for (auto& r : rows)
      if (r & lead) r ^= v;
    rows.push_back(v);
  }
  std::sort(rows.begin(), rows.end(), std::greater<>());
  return rows;
}

std::vector<Element> linear_part(const AffineSubspace& s) { return span(s.basis()); }

Cover trivial_cover(const Field& field, const std::vector<Element>& basis) {
  for (Element b : basis) field.element(b);
  const AffineSubspace subspace(0, basis);
  const auto offsets = subspace.points();
  Cover cover{field, subspace.dimension(), {}};
  std::vector<bool> covered(field.size(), false);
  for (Element c = 0; c < field.size(); ++c) {
    if (covered[c]) continue;
    for (Element p : offsets) covered[p ^ c] = true;
    cover.flats.emplace_back(c, basis);
  }
  return cover;
}

Cover image_cover(const FunctionTable& f, const Cover& cover) {
  require_same_field(f.field(), cover.field);
  if (!is_permutation(f)) throw DomainError("image cover: function is not a permutation");
  Cover out{cover.field, cover.dimension, {}};
  out.flats.reserve(cover.flats.size());
  for (std::size_t i = 0; i < cover.flats.size(); ++i) {
    std::vector<Element> image;
    for (Element p : cover.flats[i].points()) image.push_back(f(p));
    try {
      out.flats.push_back(AffineSubspace::from_points(std::move(image)));
    } catch (const DomainError&) {
      throw DomainError("image cover: image of flat " + std::to_string(i) + " (base " +
                        std::to_string(cover.flats[i].base()) + ") is not an affine subspace");
    }
  }
  return out;
}

CoverReport check_cover(const Cover& cover) {
  CoverReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    if (report.problems.size() < 32) report.problems.push_back(std::move(msg));
  };
  const unsigned n = cover.field.degree();
  const std::size_t size = cover.field.size();
  if (cover.dimension > n) fail("dimension " + std::to_string(cover.dimension) + " exceeds n");
  const std::size_t expected = cover.dimension <= n ? size >> cover.dimension : 0;
  if (cover.flats.size() != expected)
    fail("cover has " + std::to_string(cover.flats.size()) + " flats, expected " + std::to_string(expected));

  std::vector<long> owner(size, -1);
  for (std::size_t i = 0; i < cover.flats.size(); ++i) {
    const auto& flat = cover.flats[i];
    if (flat.dimension() != cover.dimension) {
      fail("flat " + std::to_string(i) + " has dimension " + std::to_string(flat.dimension()));
      continue;
    }
    for (Element p : flat.points()) {
      if (p >= size) {
        fail("flat " + std::to_string(i) + " contains " + std::to_string(p) + ", not a field element");
        continue;
      }
      if (owner[p] >= 0)
        fail("flats " + std::to_string(owner[p]) + " and " + std::to_string(i) + " overlap at point " +
             std::to_string(p));
      else
        owner[p] = static_cast<long>(i);
    }
  }
  for (std::size_t p = 0; p < size; ++p)
    if (owner[p] < 0) fail("point " + std::to_string(p) + " is not covered");
  return report;
}

bool verify_cover(const Cover& cover) { return check_cover(cover).ok; }

bool verify_nonparallel(const Cover& cover) {
  require_cover(cover);
  std::set<std::vector<Element>> seen;
  for (const auto& flat : cover.flats)
    if (!seen.insert(flat.canonical_basis()).second) return false;
  return true;
}

bool verify_totally_skew(const Cover& cover) {
  require_cover(cover);
  // Linear parts meet only in 0 iff their nonzero elements are pairwise disjoint.
  std::vector<bool> used(cover.field.size(), false);
  for (const auto& flat : cover.flats) {
    for (Element v : linear_part(flat)) {
      if (v == 0) continue;
      if (used[v]) return false;
      used[v] = true;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> parallel_decomposition(const Cover& cover) {
  require_cover(cover);
  std::map<std::vector<Element>, std::size_t> group_of;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < cover.flats.size(); ++i) {
    auto [it, inserted] = group_of.try_emplace(cover.flats[i].canonical_basis(), groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return groups;
}

GoldCoverPair gold_cover(const Field& field, unsigned t, Element x, Element y) {
  const unsigned s = gold_subfield_degree(field, t);
  field.element(x);
  field.element(y);
  if (x == 0 || y == 0) throw DomainError("gold cover: x and y must be nonzero");
  if (x == y) throw DomainError("gold cover: x/y = 1");
  if (!field.in_subfield(field.div(x, y), s))
    throw DomainError("gold cover: x/y is not in GF(2^" + std::to_string(s) + ")");
  auto trivial = trivial_cover(field, {x, y});
  auto image = image_cover(from_monomial(field, (std::uint64_t{1} << t) + 1), trivial);
  return {std::move(trivial), std::move(image)};
}

Cover subfield_image_cover(const Field& field, unsigned t, Element alpha) {
  const unsigned s = gold_subfield_degree(field, t);
  field.element(alpha);
  if (alpha == 0) throw DomainError("subfield cover: alpha must be nonzero");
  auto basis = independent_subset(field.subfield(s));
  for (auto& b : basis) b = field.mul(b, alpha);
  return image_cover(from_monomial(field, (std::uint64_t{1} << t) + 1), trivial_cover(field, basis));
}

bool skew_condition_check(const FunctionTable& f, Element x, Element y) {
  const Field& field = f.field();
  field.element(x);
  field.element(y);
  if (x == 0 || y == 0 || x == y) throw DomainError("skew check: x, y and x + y must be distinct and nonzero");
  if (!is_permutation(f)) throw DomainError("skew check: function is not a permutation");
  if ((f(0) ^ f(x) ^ f(y) ^ f(x ^ y)) != 0) throw DomainError("skew check: {0, x, y, x + y} is not a vanishing flat");

  const std::array<Element, 3> directions{x, y, static_cast<Element>(x ^ y)};
  for (Element a : directions)
    if (direction_uniformity(f, a) != 4) return false;
  std::vector<int> owner(field.size(), -1);
  for (int k = 0; k < 3; ++k) {
    for (Element b : image_set(f, directions[k])) {
      if (owner[b] >= 0 && owner[b] != k) return false;
      owner[b] = k;
    }
  }
  return true;
}

}  // namespace vanish
