#pragma once

// Seeded construction of point configurations over 𝔽_p: general points,
// points on a random curve (members of the triangular divisor), and
// members of the tangential divisor built from random Hilbert–Burch
// matrices. Every sample self-certifies; a degenerate draw is resampled at
// most max_retries times before ResampleExhausted is raised.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "llab/field.hpp"
#include "llab/graded_ring.hpp"
#include "llab/ideal.hpp"

namespace llab {

using FpIdeal = IdealHandle<PrimeField>;
using FpForm = Form<PrimeField>;
using FpPoint = ProjPoint<PrimeField>;

inline constexpr int kDefaultMaxRetries = 5;

/// r(r+1)/2
constexpr int triangular_number(int r) { return r * (r + 1) / 2; }
/// 2r(r+1)
constexpr int tangential_number(int r) { return 2 * r * (r + 1); }

/// Resolution shape of d_r = r(r+1)/2 general points: generators r+1 in
/// degree r, syzygies r in degree r+1.
BettiTable generic_triangular_betti(int r);
/// Resolution shape of 2r(r+1) general points: r+1 generators in degree 2r,
/// r syzygies in degree 2r+2.
BettiTable generic_tangential_betti(int r);
/// Resolution shape of a general member of the tangential divisor:
/// generators (2r)^{r+1}, 2r+1; syzygies 2r+1, (2r+2)^r.
BettiTable tangential_divisor_betti(int r);

enum class SampleKind { GeneralPoints, PointsOnCurve, TriangularDivisor, TangentialGeneral, TangentialDivisor };

struct SampleRequest {
  SampleKind kind = SampleKind::GeneralPoints;
  int n = 0;             // GeneralPoints, PointsOnCurve
  int curve_degree = 0;  // PointsOnCurve
  int r = 0;             // TriangularDivisor, TangentialGeneral, TangentialDivisor
  std::uint64_t seed = 0;
  int max_retries = kDefaultMaxRetries;
};

struct SampleResult {
  FpIdeal handle;
  std::map<std::string, std::string> certificate;
  int retries_used = 0;
  std::vector<FpPoint> points;              // empty for Hilbert–Burch samples
  std::optional<FpForm> curve;              // PointsOnCurve only
  std::vector<std::vector<FpForm>> matrix;  // Hilbert–Burch matrix, rows = generators
};

SampleResult sample(const PrimeField& field, const SampleRequest& request);

/// n distinct points, uniform over ℙ²(𝔽_p), with the generic Hilbert function
/// min(C(d+2,2), n) certified through the first degree past saturation.
SampleResult sample_general_points(const PrimeField& field, int n, Rng& rng, int max_retries = kDefaultMaxRetries);

/// n distinct rational points of a random curve of degree k, certified to
/// lie on it and to satisfy h⁰(I_Z(k)) = max(1, C(k+2,2) − n).
SampleResult sample_points_on_curve(const PrimeField& field, int n, int k, Rng& rng,
                                    int max_retries = kDefaultMaxRetries);

/// d_r points on a curve of degree r−1, i.e. a member of the triangular
/// divisor {h⁰(I_Z(r−1)) = 1}.
SampleResult sample_triangular_divisor(const PrimeField& field, int r, Rng& rng,
                                       int max_retries = kDefaultMaxRetries);

/// A member of the tangential divisor, as the maximal minors of a random
/// (r+2)×(r+1) Hilbert–Burch matrix with the divisor's degree pattern.
SampleResult sample_tangential_divisor(const PrimeField& field, int r, Rng& rng,
                                       int max_retries = kDefaultMaxRetries);

/// 2r(r+1) general points certified to carry the generic resolution shape.
SampleResult sample_tangential_general(const PrimeField& field, int r, Rng& rng,
                                       int max_retries = kDefaultMaxRetries);

/// Signed maximal minors g_i = (−1)^i det(φ without row i) of an
/// (m+1)×m matrix of forms with entry degrees `degrees`, so that
/// Σ_i g_i φ_ij = 0 for every column j.
std::vector<FpForm> hilbert_burch_generators(const PrimeField& field, const std::vector<std::vector<FpForm>>& phi,
                                             const std::vector<std::vector<int>>& degrees);

/// Rational points of `curve` in the chart z = 1, collected line by line
/// along random vertical lines x = a until `wanted` candidates are found or
/// `max_lines` lines have been scanned.
std::vector<FpPoint> rational_points_on_curve(const PrimeField& field, const FpForm& curve, std::size_t wanted,
                                              std::size_t max_lines, Rng& rng);

}  // namespace llab
