#include "llab/root_scan.hpp"

#include <omp.h>

namespace llab {

namespace {

inline std::uint32_t horner(std::span<const std::uint32_t> coeffs, std::uint64_t t, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * t + *it) % p;
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

std::vector<std::uint32_t> scan_roots_serial(const PrimeField& field, std::span<const std::uint32_t> coeffs) {
  const std::uint64_t p = field.characteristic();
  std::vector<std::uint32_t> roots;
  for (std::uint64_t t = 0; t < p; ++t)
    if (horner(coeffs, t, p) == 0) roots.push_back(static_cast<std::uint32_t>(t));
  return roots;
}

std::vector<std::uint32_t> scan_roots(const PrimeField& field, std::span<const std::uint32_t> coeffs) {
  const std::int64_t p = field.characteristic();
  std::vector<std::vector<std::uint32_t>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& mine = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
    // static schedule hands each thread one contiguous ascending block, so
    // concatenating per-thread results in thread order stays sorted
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < p; ++t)
      if (horner(coeffs, static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(p)) == 0)
        mine.push_back(static_cast<std::uint32_t>(t));
  }
  std::vector<std::uint32_t> roots;
  for (auto& v : per_thread) roots.insert(roots.end(), v.begin(), v.end());
  return roots;
}

}  // namespace llab
