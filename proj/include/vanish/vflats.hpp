#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vanish/boolfunc.hpp"

namespace vanish {

// A 2-dimensional flat {x1, x2, x3, x4} with x1 + x2 + x3 + x4 = 0, stored
// ascending.
class Flat {
 public:
  // Sorts the points; throws DomainError unless they are distinct and XOR to 0.
  Flat(Element a, Element b, Element c, Element d);

  const std::array<Element, 4>& points() const noexcept { return points_; }
  bool contains(Element x) const noexcept;

  auto operator<=>(const Flat&) const = default;

 private:
  std::array<Element, 4> points_;
};

class PartialQuadrupleSystem {
 public:
  // Blocks are sorted and deduplicated.
  PartialQuadrupleSystem(Field field, std::vector<Flat> blocks);

  const Field& field() const noexcept { return field_; }
  std::span<const Flat> blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  bool contains(const Flat& block) const;

  friend bool operator==(const PartialQuadrupleSystem& a, const PartialQuadrupleSystem& b) {
    return a.field_ == b.field_ && a.blocks_ == b.blocks_;
  }

 private:
  Field field_;
  std::vector<Flat> blocks_;
};

// Diagnostics from the direction-bucketing enumeration: every vanishing flat
// must be emitted by exactly three directions before deduplication.
struct EnumerationStats {
  std::uint64_t emissions = 0;
  unsigned min_multiplicity = 0;
  unsigned max_multiplicity = 0;
};

// The vanishing flats of f: blocks of B_n on which f sums to zero.
PartialQuadrupleSystem enumerate_vanishing_flats(const FunctionTable& f, EnumerationStats* stats = nullptr);

// (1/3) * sum over (a != 0, b) of C(delta_f(a, b) / 2, 2), without materialising blocks.
std::uint64_t count_via_spectrum(const DifferentialSpectrum& spectrum);
std::uint64_t count_via_spectrum(const FunctionTable& f);

// Number of vanishing flats containing both x and x + a.
unsigned flats_through_pair(const FunctionTable& f, Element x, Element a);

struct CountBounds {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
};

// |B_n| = 2^(n-2) (2^(n-1) - 1) (2^n - 1) / 3.
std::uint64_t flat_count(unsigned n);
// ceil((2^n - 1) / 3): minimum for a non-APN monomial.
std::uint64_t monomial_lower_bound(unsigned n);
// lower is the monomial bound when is_monomial is set and f is not APN, else 0.
CountBounds bounds(const FunctionTable& f, bool is_monomial);

// Power-function families with closed-form vanishing-flat counts.
enum class PowerFamily {
  Gold,          // 2^t + 1
  Kasami,        // 2^(2t) - 2^t + 1
  Inverse,       // 2^n - 2
  FourT,         // 2^(2t) + 2^t + 1, n = 4t
  Seven,         // 7
  NMinusTwo,     // 2^(n-2) - 1 (variant 0) or 2^((n-1)/2) - 1 (variant 1), n odd
  HalfMinusOne,  // 2^(n/2) - 1
  HalfPlusOne,   // 2^(n/2+1) - 1
  ThreeHalves,   // 2^((n+3)/2) - 1
  TwoT,          // 2^t + 2^((t+1)/2) + 1 (variant 0) or 2^(t+1) + 3 (variant 1), n = 2t
};

inline constexpr std::array<PowerFamily, 10> kPowerFamilies = {
    PowerFamily::Gold,      PowerFamily::Kasami,       PowerFamily::Inverse,     PowerFamily::FourT,
    PowerFamily::Seven,     PowerFamily::NMinusTwo,    PowerFamily::HalfMinusOne, PowerFamily::HalfPlusOne,
    PowerFamily::ThreeHalves, PowerFamily::TwoT,
};

struct FamilyParams {
  unsigned t = 0;
  unsigned variant = 0;
};

// Side-condition violation; the message names the condition.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string_view family_name(PowerFamily family);
std::optional<PowerFamily> parse_family(std::string_view name);

// Throws ParameterError when (n, params) violates the family's side conditions.
void check_family(PowerFamily family, unsigned n, FamilyParams params);
std::uint64_t family_exponent(PowerFamily family, unsigned n, FamilyParams params);
std::uint64_t closed_form_count(PowerFamily family, unsigned n, FamilyParams params = {});

// Image of every block under the point permutation T, re-canonicalised.
PartialQuadrupleSystem map_blocks(const PartialQuadrupleSystem& pqs, std::span<const Element> point_map);

// True iff T maps the blocks of p exactly onto the blocks of q.
bool isomorphism_witness_check(const PartialQuadrupleSystem& p, const PartialQuadrupleSystem& q,
                               std::span<const Element> point_map);

}  // namespace vanish
