#include <numeric>

#include <boost/rational.hpp>

#include "vanish/vflats.hpp"

namespace vanish {
namespace {

using Rational = boost::rational<std::int64_t>;

std::int64_t pow2(unsigned e) { return std::int64_t{1} << e; }

// Delta(a, b) = 1 if a divides b.
std::int64_t divides(unsigned a, unsigned b) { return b % a == 0 ? 1 : 0; }

std::int64_t sign(unsigned n) { return n % 2 == 0 ? 1 : -1; }

std::uint64_t exact(const Rational& r, PowerFamily family, unsigned n) {
  if (r.denominator() != 1 || r.numerator() < 0)
    throw std::logic_error("closed form for " + std::string(family_name(family)) + " at n = " + std::to_string(n) +
                           " is not a non-negative integer");
  return static_cast<std::uint64_t>(r.numerator());
}

void require(bool ok, PowerFamily family, const std::string& condition) {
  if (!ok) throw ParameterError(std::string(family_name(family)) + ": requires " + condition);
}

}  // namespace

std::string_view family_name(PowerFamily family) {
  switch (family) {
    case PowerFamily::Gold: return "gold";
    case PowerFamily::Kasami: return "kasami";
    case PowerFamily::Inverse: return "inverse";
    case PowerFamily::FourT: return "four-t";
    case PowerFamily::Seven: return "d7";
    case PowerFamily::NMinusTwo: return "n-minus-2";
    case PowerFamily::HalfMinusOne: return "half";
    case PowerFamily::HalfPlusOne: return "half-plus-1";
    case PowerFamily::ThreeHalves: return "three-halves";
    case PowerFamily::TwoT: return "two-t";
  }
  return "unknown";
}

std::optional<PowerFamily> parse_family(std::string_view name) {
  for (auto family : kPowerFamilies)
    if (family_name(family) == name) return family;
  return std::nullopt;
}

void check_family(PowerFamily family, unsigned n, FamilyParams p) {
  require(n >= kMinDegree && n <= kMaxDegree, family, "2 <= n <= 16");
  switch (family) {
    case PowerFamily::Gold:
      require(p.t >= 1 && 2 * p.t <= n, family, "1 <= t <= n/2");
      break;
    case PowerFamily::Kasami:
      require(p.t >= 2 && 2 * p.t <= n, family, "2 <= t <= n/2");
      require(n != 3 * p.t, family, "n != 3t");
      require((n / std::gcd(n, p.t)) % 2 == 1, family, "n/gcd(n,t) odd");
      break;
    case PowerFamily::Inverse:
      require(n % 2 == 0, family, "n even");
      break;
    case PowerFamily::FourT:
      require(n % 4 == 0, family, "n = 4t");
      require(p.t == 0 || p.t * 4 == n, family, "t = n/4");
      break;
    case PowerFamily::Seven:
      require(n >= 6, family, "n >= 6");
      break;
    case PowerFamily::NMinusTwo:
      require(n % 2 == 1, family, "n odd");
      require(n >= 7, family, "n >= 7");
      require(p.variant <= 1, family, "variant 0 (2^(n-2)-1) or 1 (2^((n-1)/2)-1)");
      break;
    case PowerFamily::HalfMinusOne:
    case PowerFamily::HalfPlusOne:
      require(n % 2 == 0, family, "n even");
      require(n >= 6, family, "n >= 6");
      break;
    case PowerFamily::ThreeHalves:
      require(n % 2 == 1, family, "n odd");
      require(n >= 7, family, "n >= 7");
      break;
    case PowerFamily::TwoT:
      require(n % 2 == 0, family, "n = 2t");
      require((n / 2) % 2 == 1, family, "t odd");
      require(n / 2 >= 5, family, "t >= 5");
      require(p.t == 0 || 2 * p.t == n, family, "t = n/2");
      require(p.variant <= 1, family, "variant 0 (2^t+2^((t+1)/2)+1) or 1 (2^(t+1)+3)");
      break;
  }
}

std::uint64_t family_exponent(PowerFamily family, unsigned n, FamilyParams p) {
  check_family(family, n, p);
  const auto e = [](unsigned k) { return std::uint64_t{1} << k; };
  switch (family) {
    case PowerFamily::Gold: return e(p.t) + 1;
    case PowerFamily::Kasami: return e(2 * p.t) - e(p.t) + 1;
    case PowerFamily::Inverse: return e(n) - 2;
    case PowerFamily::FourT: return e(n / 2) + e(n / 4) + 1;
    case PowerFamily::Seven: return 7;
    case PowerFamily::NMinusTwo: return p.variant == 0 ? e(n - 2) - 1 : e((n - 1) / 2) - 1;
    case PowerFamily::HalfMinusOne: return e(n / 2) - 1;
    case PowerFamily::HalfPlusOne: return e(n / 2 + 1) - 1;
    case PowerFamily::ThreeHalves: return e((n + 3) / 2) - 1;
    case PowerFamily::TwoT: {
      const unsigned t = n / 2;
      return p.variant == 0 ? e(t) + e((t + 1) / 2) + 1 : e(t + 1) + 3;
    }
  }
  return 0;
}

std::uint64_t closed_form_count(PowerFamily family, unsigned n, FamilyParams p) {
  check_family(family, n, p);
  const std::int64_t group = pow2(n) - 1;
  Rational r;
  switch (family) {
    case PowerFamily::Gold:
    case PowerFamily::Kasami: {
      const unsigned s = std::gcd(n, p.t);
      r = Rational(pow2(n - 2) * (pow2(s - 1) - 1) * group, 3);
      break;
    }
    case PowerFamily::Inverse:
      r = Rational(group, 3);
      break;
    case PowerFamily::FourT: {
      const unsigned t = n / 4;
      r = Rational((pow2(n - 3) - pow2(3 * t - 3)) * group, 3);
      break;
    }
    case PowerFamily::Seven: {
      const std::int64_t w4 = divides(2, n);
      r = (Rational(pow2(n - 2) + 1 - 3 * w4, 6) + Rational(sign(n) * kloosterman(n), 8)) * group;
      break;
    }
    case PowerFamily::NMinusTwo: {
      const std::int64_t w8 = divides(3, n);
      r = (Rational(pow2(n - 1) - 3 - sign(n) * 5, 12) + Rational(sign(n) * kloosterman(n), 8) + w8) * group;
      break;
    }
    case PowerFamily::HalfMinusOne: {
      const std::int64_t w4 = 1 - divides(4, n);
      r = Rational(((pow2(n / 2 - 1) - 1) * (pow2(n / 2 - 2) - 1) + w4) * group, 3);
      break;
    }
    case PowerFamily::HalfPlusOne:
      r = Rational(pow2(n / 2 - 2) * (pow2(n / 2 - 1) - 1) * group, 3);
      break;
    case PowerFamily::ThreeHalves:
      r = (Rational(pow2(n - 2) + 1, 6) - Rational(kloosterman(n), 8)) * group;
      break;
    case PowerFamily::TwoT:
      r = Rational(pow2(n - 2) * group, 3);
      break;
  }
  return exact(r, family, n);
}

}  // namespace vanish
