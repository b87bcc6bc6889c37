#pragma once

// Exhaustive root finding for a univariate polynomial over 𝔽_p by
// evaluating at every residue. Used to enumerate the rational points of a
// plane curve along a line. scan_roots() splits the residues across
// OpenMP threads; scan_roots_serial() is the reference.

#include <cstdint>
#include <span>
#include <vector>

#include "llab/field.hpp"

namespace llab {

/// Roots in [0, p) of Σ coeffs[j]·t^j, ascending. The zero polynomial has
/// every residue as a root; callers must handle that case themselves.
std::vector<std::uint32_t> scan_roots_serial(const PrimeField& field, std::span<const std::uint32_t> coeffs);

std::vector<std::uint32_t> scan_roots(const PrimeField& field, std::span<const std::uint32_t> coeffs);

}  // namespace llab
