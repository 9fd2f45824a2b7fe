#include "vanish/vflats.hpp"

#include <algorithm>

#include "vanish/parallel.hpp"

namespace vanish {
namespace {

// Four 16-bit points packed most significant first; numeric order on keys is
// lexicographic order on sorted 4-tuples.
std::uint64_t pack(Element a, Element b, Element c, Element d) {
  std::array<Element, 4> p{a, b, c, d};
  std::sort(p.begin(), p.end());
  return (std::uint64_t{p[0]} << 48) | (std::uint64_t{p[1]} << 32) | (std::uint64_t{p[2]} << 16) | p[3];
}

Flat unpack(std::uint64_t key) {
  return Flat(static_cast<Element>(key >> 48), static_cast<Element>((key >> 32) & 0xffff),
              static_cast<Element>((key >> 16) & 0xffff), static_cast<Element>(key & 0xffff));
}

// Calls emit(x, y, a) for every pair of derivative collisions in direction a:
// x < x + a, y < y + a, x < y and f(x + a) + f(x) = f(y + a) + f(y).
template <class Emit>
void for_each_collision(const FunctionTable& f, Element a, std::vector<unsigned>& offsets,
                        std::vector<Element>& reps, Emit&& emit) {
  const std::size_t size = f.size();
  std::fill(offsets.begin(), offsets.end(), 0u);
  for (Element x = 0; x < size; ++x)
    if (x < (x ^ a)) ++offsets[(f(x ^ a) ^ f(x)) + 1];
  for (std::size_t b = 0; b < size; ++b) offsets[b + 1] += offsets[b];
  std::vector<unsigned> cursor(offsets.begin(), offsets.end() - 1);
  for (Element x = 0; x < size; ++x)
    if (x < (x ^ a)) reps[cursor[f(x ^ a) ^ f(x)]++] = x;
  for (std::size_t b = 0; b < size; ++b) {
    for (unsigned i = offsets[b]; i < offsets[b + 1]; ++i)
      for (unsigned j = i + 1; j < offsets[b + 1]; ++j) emit(reps[i], reps[j], a);
  }
}

}  // namespace

Flat::Flat(Element a, Element b, Element c, Element d) : points_{a, b, c, d} {
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
    throw DomainError("flat points must be distinct");
  if ((a ^ b ^ c ^ d) != 0) throw DomainError("flat points must sum to zero");
}

bool Flat::contains(Element x) const noexcept {
  return std::find(points_.begin(), points_.end(), x) != points_.end();
}

PartialQuadrupleSystem::PartialQuadrupleSystem(Field field, std::vector<Flat> blocks)
    : field_(std::move(field)), blocks_(std::move(blocks)) {
  for (const auto& block : blocks_)
    for (Element p : block.points())
      if (!field_.contains(p)) throw FieldError("block point " + std::to_string(p) + " outside the field");
  std::sort(blocks_.begin(), blocks_.end());
  blocks_.erase(std::unique(blocks_.begin(), blocks_.end()), blocks_.end());
}

bool PartialQuadrupleSystem::contains(const Flat& block) const {
  return std::binary_search(blocks_.begin(), blocks_.end(), block);
}

PartialQuadrupleSystem enumerate_vanishing_flats(const FunctionTable& f, EnumerationStats* stats) {
  const std::size_t size = f.size();
  const unsigned workers = worker_count(size - 1);
  std::vector<std::vector<std::uint64_t>> found(workers);
  const bool instrumented = stats != nullptr;

  parallel_chunks(1, size, [&](unsigned w, std::size_t lo, std::size_t hi) {
    std::vector<unsigned> offsets(size + 1);
    std::vector<Element> reps(size / 2);
    auto& out = found[w];
    for (std::size_t a = lo; a < hi; ++a) {
      for_each_collision(f, static_cast<Element>(a), offsets, reps, [&](Element x, Element y, Element dir) {
        // Each flat has three directions; without instrumentation keep only
        // the emission from the smallest one.
        if (!instrumented && (dir > (x ^ y) || dir > (x ^ y ^ dir))) return;
        out.push_back(pack(x, x ^ dir, y, y ^ dir));
      });
    }
  });

  std::vector<std::uint64_t> keys;
  std::size_t total = 0;
  for (const auto& part : found) total += part.size();
  keys.reserve(total);
  for (auto& part : found) {
    keys.insert(keys.end(), part.begin(), part.end());
    std::vector<std::uint64_t>().swap(part);
  }
  std::sort(keys.begin(), keys.end());

  if (instrumented) {
    stats->emissions = keys.size();
    stats->min_multiplicity = keys.empty() ? 0 : ~0u;
    stats->max_multiplicity = 0;
    for (std::size_t i = 0; i < keys.size();) {
      std::size_t j = i;
      while (j < keys.size() && keys[j] == keys[i]) ++j;
      const auto run = static_cast<unsigned>(j - i);
      stats->min_multiplicity = std::min(stats->min_multiplicity, run);
      stats->max_multiplicity = std::max(stats->max_multiplicity, run);
      i = j;
    }
  }
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  std::vector<Flat> blocks;
  blocks.reserve(keys.size());
  for (auto key : keys) blocks.push_back(unpack(key));
  return PartialQuadrupleSystem(f.field(), std::move(blocks));
}

std::uint64_t count_via_spectrum(const DifferentialSpectrum& spectrum) {
  std::uint64_t sum = 0;
  for (auto [value, count] : spectrum.counts) {
    const std::uint64_t pairs = value / 2;
    if (pairs >= 2) sum += count * (pairs * (pairs - 1) / 2);
  }
  if (sum % 3 != 0) throw std::logic_error("vanishing-flat count is not an integer: sum " + std::to_string(sum));
  return sum / 3;
}

std::uint64_t count_via_spectrum(const FunctionTable& f) { return count_via_spectrum(spectrum(f)); }

unsigned flats_through_pair(const FunctionTable& f, Element x, Element a) {
  if (a == 0 || !f.field().contains(a)) throw DomainError("direction must be a nonzero field element");
  f.field().element(x);
  return delta(f, a, f(x ^ a) ^ f(x)) / 2 - 1;
}

std::uint64_t flat_count(unsigned n) {
  const std::uint64_t q = std::uint64_t{1} << n;
  return (q / 4) * (q / 2 - 1) * (q - 1) / 3;
}

std::uint64_t monomial_lower_bound(unsigned n) {
  const std::uint64_t q = std::uint64_t{1} << n;
  return (q - 1 + 2) / 3;
}

CountBounds bounds(const FunctionTable& f, bool is_monomial) {
  CountBounds out;
  out.upper = flat_count(f.degree());
  if (is_monomial && !is_apn(f)) out.lower = monomial_lower_bound(f.degree());
  return out;
}

PartialQuadrupleSystem map_blocks(const PartialQuadrupleSystem& pqs, std::span<const Element> point_map) {
  const std::size_t size = pqs.field().size();
  if (point_map.size() != size) throw DomainError("point map has the wrong length");
  std::vector<bool> seen(size, false);
  for (Element v : point_map) {
    if (v >= size || seen[v]) throw DomainError("point map is not a bijection");
    seen[v] = true;
  }
  std::vector<Flat> mapped;
  mapped.reserve(pqs.size());
  for (const auto& block : pqs.blocks()) {
    const auto& p = block.points();
    mapped.emplace_back(point_map[p[0]], point_map[p[1]], point_map[p[2]], point_map[p[3]]);
  }
  return PartialQuadrupleSystem(pqs.field(), std::move(mapped));
}

bool isomorphism_witness_check(const PartialQuadrupleSystem& p, const PartialQuadrupleSystem& q,
                               std::span<const Element> point_map) {
  require_same_field(p.field(), q.field());
  if (p.size() != q.size()) return false;
  try {
    return map_blocks(p, point_map) == q;
  } catch (const DomainError&) {
    // images of blocks that fail to be flats mean T is not a witness
    return false;
  }
}

}  // namespace vanish
