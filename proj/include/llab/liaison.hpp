#pragma once

// Residuation of plane point schemes through complete intersections, and
// the verifiers that check membership of residuals in the triangular and
// tangential divisors on seeded random samples.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "llab/field.hpp"
#include "llab/ideal.hpp"
#include "llab/sampler.hpp"

namespace llab {

/// One linkage Z ∪ Z' = V(F) ∩ V(G) with deg F = deg G = k.
struct LiaisonStep {
  int k = 0;
  FpForm f, g;
  FpIdeal complete_intersection;
  FpIdeal source;
  FpIdeal residual;  // stored pieces over `window`
  std::pair<int, int> window;
  int source_degree = 0;
  std::optional<int> residual_degree;  // from the residual's Hilbert profile
  int retries_used = 0;
};

/// Residual of `z` through two random curves of degree k taken from I_Z(k),
/// redrawn until they form a complete intersection. The residual's pieces
/// are (F,G) : I_Z in degrees 0..k+3.
LiaisonStep residuate(const FpIdeal& z, int k, Rng& rng, int max_retries = kDefaultMaxRetries);

/// Same, for a fixed pencil; `f` and `g` must lie in I_Z(k) and form a
/// complete intersection.
LiaisonStep residuate_with(const FpIdeal& z, const FpForm& f, const FpForm& g);

/// Residuates the residual by the same (F, G) and compares the result with
/// the source piece by piece over the step's window. On mismatch, the first
/// offending degree is written to `detail` when given.
bool check_involution(const LiaisonStep& step, std::string* detail = nullptr);

/// Betti shape of the residual predicted by the mapping cone of the
/// Koszul complex of (F, G) against the source resolution: generators
/// 2k − (source syzygy degrees) plus two of degree k, syzygies
/// 2k − (source generator degrees). Assumes no cancellation.
BettiTable mapping_cone_residual_betti(const BettiTable& source, int k);

/// Residual shape for a general member of the tangential divisor linked by
/// two curves of degree 2(r+1).
BettiTable expected_residual_betti_tangential(int r);

/// (2d_r − 1) + 2(5r+6−2) − 2(r+2−2) == 2d_{r+1} − 1 with d_r = 2r(r+1).
bool dimension_identity_tangential(int r);

/// The correction term (r−1)(r+1) − r(r+1)/2 + 1 − r(r−1)/2 of the
/// Riemann–Roch computation on a plane curve of degree r+1; it must vanish.
long riemann_roch_correction(int r);
bool riemann_roch_ledger(int r);

enum class Theorem {
  GenericBettiTriangular,
  GenericBettiTangential,
  Lemma1General,
  Lemma1Divisor,
  CorollaryForward,
  CorollaryBackward,
  PropTangential,
  MuCriterion,
  DimensionIdentity,
  RiemannRochLedger,
};

std::string_view theorem_id(Theorem t);
/// Inclusive range of r the verifier accepts.
std::pair<int, int> theorem_r_bounds(Theorem t);

struct LedgerEntry {
  int trial = 0;
  std::vector<std::pair<std::string, long>> values;
};

struct TrialFailure {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string detail;
};

struct TrialOutcome {
  bool pass = false;
  std::string detail;
  std::vector<std::pair<std::string, long>> ledger;
};

struct VerificationReport {
  std::string theorem;
  int r = 0;
  int trials = 0;
  int passes = 0;
  std::vector<TrialFailure> failures;
  std::vector<LedgerEntry> h0_ledger;
  std::vector<std::string> notes;
  double wall_seconds = 0;
};

/// Seed of one trial; distinct (theorem, r, trial) triples get independent streams.
std::uint64_t trial_seed(std::uint64_t base_seed, Theorem t, int r, int trial);

/// Runs one trial from its own seed. Errors propagate.
TrialOutcome run_trial(const PrimeField& field, Theorem t, int r, std::uint64_t seed);

/// Runs `trials` independent trials (on up to `jobs` threads) and merges
/// them in trial order. A trial that throws is recorded as a failure with
/// its seed rather than aborting the batch.
VerificationReport verify(const PrimeField& field, Theorem t, int r, int trials, std::uint64_t base_seed,
                          int jobs = 1);

enum class Lemma1Variant { General, Divisor };
enum class Direction { Forward, Backward };

VerificationReport verify_lemma1(const PrimeField& field, int r, Lemma1Variant variant, int trials,
                                 std::uint64_t base_seed, int jobs = 1);
VerificationReport verify_corollary_triangular(const PrimeField& field, int r, Direction direction, int trials,
                                               std::uint64_t base_seed, int jobs = 1);
VerificationReport verify_prop_tangential(const PrimeField& field, int r, int trials, std::uint64_t base_seed,
                                          int jobs = 1);

}  // namespace llab
