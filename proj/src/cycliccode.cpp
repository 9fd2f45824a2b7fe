#include "vanish/cycliccode.hpp"

#include <string>

#include "vanish/parallel.hpp"
#include "vanish/vflats.hpp"

namespace vanish {

ParityCheckSpec cyclic_parity_check(const Field& field, std::uint64_t d) {
  ParityCheckSpec spec{field, {}, {}};
  for (std::uint32_t k = 0; k < field.order(); ++k) {
    const Element label = field.exp(k);
    spec.labels.push_back(label);
    spec.images.push_back(field.pow(label, d));
  }
  return spec;
}

ParityCheckSpec extended_parity_check(const FunctionTable& f) {
  ParityCheckSpec spec{f.field(), {0}, {f(0)}};
  for (std::uint32_t k = 0; k < f.field().order(); ++k) {
    const Element label = f.field().exp(k);
    spec.labels.push_back(label);
    spec.images.push_back(f(label));
  }
  return spec;
}

WeightCounts weight_counts_from_flats(const Field& field, std::uint64_t d) {
  const auto pqs = enumerate_vanishing_flats(from_monomial(field, d));
  WeightCounts out;
  for (const auto& block : pqs.blocks()) {
    if (block.contains(0))
      ++out.weight3;
    else
      ++out.weight4;
  }
  return out;
}

LowWeightCounts direct_low_weight_counts(const ParityCheckSpec& spec, unsigned max_weight) {
  const unsigned n = spec.field.degree();
  if (max_weight != 3 && max_weight != 4) throw DomainError("max_weight must be 3 or 4");
  if (spec.labels.size() != spec.images.size()) throw DomainError("parity-check rows differ in length");
  if (spec.labels.size() != spec.field.order() && spec.labels.size() != spec.field.size())
    throw DomainError("parity-check length must be 2^n - 1 or 2^n");
  if (n > 8 || (max_weight == 4 && n > 6))
    throw CapacityError("direct enumeration of weight-" + std::to_string(max_weight) + " codewords is limited to n <= " +
                        (max_weight == 4 ? "6" : "8") + "; use the vanishing-flat count instead");

  const std::size_t length = spec.labels.size();
  // Column index of each label; labels are distinct field elements.
  std::vector<long> index(spec.field.size(), -1);
  for (std::size_t k = 0; k < length; ++k) {
    if (index[spec.labels[k]] >= 0) throw DomainError("parity-check labels must be distinct");
    index[spec.labels[k]] = static_cast<long>(k);
  }
  const auto& lab = spec.labels;
  const auto& img = spec.images;

  const unsigned workers = worker_count(length);
  std::vector<std::uint64_t> w3(workers, 0), w4(workers, 0);
  parallel_chunks(0, length, [&](unsigned w, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < length; ++j) {
        // The first row fixes the last coordinate; only then test the second row.
        const long k = index[lab[i] ^ lab[j]];
        if (k > static_cast<long>(j) && (img[i] ^ img[j] ^ img[k]) == 0) ++w3[w];
        if (max_weight < 4) continue;
        for (std::size_t k2 = j + 1; k2 < length; ++k2) {
          const long l = index[lab[i] ^ lab[j] ^ lab[k2]];
          if (l > static_cast<long>(k2) && (img[i] ^ img[j] ^ img[k2] ^ img[l]) == 0) ++w4[w];
        }
      }
    }
  });

  LowWeightCounts out;
  for (auto v : w3) out.weight3 += v;
  if (max_weight == 4) {
    std::uint64_t total = 0;
    for (auto v : w4) total += v;
    out.weight4 = total;
  }
  return out;
}

std::uint64_t generalized_weight4_count(const FunctionTable& f, bool verify_direct) {
  const std::uint64_t count = count_via_spectrum(f);
  if (verify_direct) {
    if (f.degree() > 5) throw CapacityError("direct verification of the extended code is limited to n <= 5");
    const auto direct = direct_low_weight_counts(extended_parity_check(f), 4);
    if (*direct.weight4 != count)
      throw std::logic_error("weight-4 enumeration (" + std::to_string(*direct.weight4) +
                             ") disagrees with the vanishing-flat count (" + std::to_string(count) + ")");
  }
  return count;
}

}  // namespace vanish
