#include "llab/liaison.hpp"

#include <chrono>
#include <exception>
#include <map>

namespace llab {

namespace {

FpForm random_member(const PrimeField& field, const Subspace<PrimeField>& piece, int k, Rng& rng) {
  FpForm out(k);
  for (std::size_t i = 0; i < piece.dim(); ++i) {
    const auto c = field.random(rng);
    auto row = piece.basis().row(i);
    for (std::size_t j = 0; j < row.size(); ++j) out.coeffs()[j] = field.add(out.coeffs()[j], field.mul(c, row[j]));
  }
  return out;
}

int source_degree_of(const FpIdeal& z, int k) {
  auto profile = hilbert_profile(z, 2 * k + 1);
  if (!profile.stable_value)
    throw Error(ErrorCode::InvalidArgument, "source is not a zero-dimensional scheme (Hilbert function unstable)");
  if (*profile.stable_value == 0) throw Error(ErrorCode::InvalidArgument, "the unit ideal is not a point scheme");
  return static_cast<int>(*profile.stable_value);
}

LiaisonStep link(const FpIdeal& z, int source_degree, const FpForm& f, const FpForm& g, int retries) {
  const PrimeField& field = z.field();
  const int k = f.degree();
  auto ci = FpIdeal::from_generators(field, {f, g});
  const std::pair<int, int> window{0, k + 3};
  std::map<int, Subspace<PrimeField>> pieces;
  for (int d = window.first; d <= window.second; ++d) pieces.emplace(d, ideal_quotient_piece(ci, z, d));
  auto residual = FpIdeal::from_pieces(field, std::move(pieces));
  auto profile = hilbert_profile(residual, window.second);
  std::optional<int> residual_degree;
  if (profile.stable_value) residual_degree = static_cast<int>(*profile.stable_value);
  return LiaisonStep{.k = k,
                     .f = f,
                     .g = g,
                     .complete_intersection = ci,
                     .source = z,
                     .residual = residual,
                     .window = window,
                     .source_degree = source_degree,
                     .residual_degree = residual_degree,
                     .retries_used = retries};
}

}  // namespace

LiaisonStep residuate(const FpIdeal& z, int k, Rng& rng, int max_retries) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "curve degree must be positive");
  const PrimeField& field = z.field();
  const int deg = source_degree_of(z, k);
  const auto& piece = z.piece_space(k);
  if (piece.dim() < 2)
    throw Error(ErrorCode::NotEnoughCurves, "h0(I_Z(" + std::to_string(k) + ")) = " + std::to_string(piece.dim()) +
                                                " < 2");
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    auto f = random_member(field, piece, k, rng);
    auto g = random_member(field, piece, k, rng);
    if (!is_complete_intersection(field, f, g)) continue;
    return link(z, deg, f, g, attempt);
  }
  throw Error(ErrorCode::ResampleExhausted, "no complete intersection pencil found in I_Z(" + std::to_string(k) + ")");
}

LiaisonStep residuate_with(const FpIdeal& z, const FpForm& f, const FpForm& g) {
  const PrimeField& field = z.field();
  if (f.degree() != g.degree()) throw Error(ErrorCode::InconsistentDegrees, "linking curves of different degrees");
  const int k = f.degree();
  const auto& piece = z.piece_space(k);
  if (!piece.contains(field, f.coeffs()) || !piece.contains(field, g.coeffs()))
    throw Error(ErrorCode::InvalidArgument, "linking curves do not contain the scheme");
  if (!is_complete_intersection(field, f, g))
    throw Error(ErrorCode::InvalidArgument, "linking curves share a component");
  return link(z, source_degree_of(z, k), f, g, 0);
}

bool check_involution(const LiaisonStep& step, std::string* detail) {
  for (int d = step.window.first; d <= step.window.second; ++d) {
    auto back = ideal_quotient_piece(step.complete_intersection, step.residual, d);
    if (!(back == step.source.piece_space(d))) {
      if (detail)
        *detail = "involution fails in degree " + std::to_string(d) + ": dim " + std::to_string(back.dim()) +
                  " vs " + std::to_string(step.source.h0(d));
      return false;
    }
  }
  return true;
}

BettiTable mapping_cone_residual_betti(const BettiTable& source, int k) {
  BettiTable out;
  for (auto [d, n] : source.beta1) out.beta0[2 * k - d] += n;
  out.beta0[k] += 2;
  for (auto [d, n] : source.beta0) out.beta1[2 * k - d] += n;
  return out;
}

BettiTable expected_residual_betti_tangential(int r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be >= 1");
  return mapping_cone_residual_betti(tangential_divisor_betti(r), 2 * (r + 1));
}

bool dimension_identity_tangential(int r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be >= 1");
  const long d_r = tangential_number(r), d_next = tangential_number(r + 1);
  // dim G(2, n) = 2(n − 2)
  const long fiber_source = 2L * ((5L * r + 6) - 2);
  const long fiber_residual = 2L * ((r + 2L) - 2);
  return (2 * d_r - 1) + fiber_source - fiber_residual == 2 * d_next - 1;
}

long riemann_roch_correction(int r) {
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "r must be >= 2");
  const long rl = r;
  return (rl - 1) * (rl + 1) - rl * (rl + 1) / 2 + 1 - rl * (rl - 1) / 2;
}

bool riemann_roch_ledger(int r) { return riemann_roch_correction(r) == 0; }

std::string_view theorem_id(Theorem t) {
  switch (t) {
    case Theorem::GenericBettiTriangular: return "generic-betti-triangular";
    case Theorem::GenericBettiTangential: return "generic-betti-tangential";
    case Theorem::Lemma1General: return "lemma1-general";
    case Theorem::Lemma1Divisor: return "lemma1-divisor";
    case Theorem::CorollaryForward: return "corollary-forward";
    case Theorem::CorollaryBackward: return "corollary-backward";
    case Theorem::PropTangential: return "prop-tangential";
    case Theorem::MuCriterion: return "mu-criterion";
    case Theorem::DimensionIdentity: return "dimension-identity";
    case Theorem::RiemannRochLedger: return "riemann-roch-ledger";
  }
  return "unknown";
}

std::pair<int, int> theorem_r_bounds(Theorem t) {
  switch (t) {
    case Theorem::GenericBettiTriangular: return {2, 8};
    case Theorem::Lemma1General:
    case Theorem::Lemma1Divisor:
    case Theorem::CorollaryForward:
    case Theorem::CorollaryBackward: return {3, 8};
    case Theorem::GenericBettiTangential:
    case Theorem::PropTangential:
    case Theorem::MuCriterion: return {1, 4};
    case Theorem::DimensionIdentity: return {1, 1000};
    case Theorem::RiemannRochLedger: return {2, 1000};
  }
  return {0, -1};
}

std::uint64_t trial_seed(std::uint64_t base_seed, Theorem t, int r, int trial) {
  const std::uint64_t stream = (static_cast<std::uint64_t>(t) << 48) ^ (static_cast<std::uint64_t>(r) << 32) ^
                               static_cast<std::uint64_t>(trial);
  return derive_seed(base_seed, stream);
}

namespace {

using Ledger = std::vector<std::pair<std::string, long>>;

struct Checks {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (!detail.empty()) detail += "; ";
    detail += what;
    ok = false;
  }
};

std::string h0_key(int d) { return "h0(" + std::to_string(d) + ")"; }

// shared body of the four triangular liaison verifiers
TrialOutcome triangular_trial(const PrimeField& field, Theorem t, int r, Rng& rng) {
  const int k = r + 1;
  Checks c;
  Ledger ledger;
  SampleResult sample = [&] {
    switch (t) {
      case Theorem::Lemma1General: return sample_general_points(field, triangular_number(r), rng);
      case Theorem::CorollaryBackward: return sample_points_on_curve(field, triangular_number(r + 1), r, rng);
      default: return sample_triangular_divisor(field, r, rng);
    }
  }();
  auto step = residuate(sample.handle, k, rng);
  const bool backward = t == Theorem::CorollaryBackward;
  // forward-type trials compare h0(I_Z(r-1)) with h0(I_Z'(r)); backward
  // starts from the larger scheme and compares the other way round
  const int source_twist = backward ? r : r - 1;
  const int residual_twist = backward ? r - 1 : r;
  const long h_source = static_cast<long>(step.source.h0(source_twist));
  const long h_residual = static_cast<long>(step.residual.h0(residual_twist));
  const int expected_degree = k * k - step.source_degree;
  std::string inv_detail;
  const bool involution = check_involution(step, &inv_detail);

  ledger.emplace_back("source_" + h0_key(source_twist), h_source);
  ledger.emplace_back("residual_" + h0_key(residual_twist), h_residual);
  ledger.emplace_back("source_degree", step.source_degree);
  ledger.emplace_back("residual_degree", step.residual_degree.value_or(-1));
  ledger.emplace_back("involution", involution ? 1 : 0);
  ledger.emplace_back("retries", sample.retries_used + step.retries_used);

  c.require(step.residual_degree == expected_degree,
            "residual degree " + std::to_string(step.residual_degree.value_or(-1)) + " != " +
                std::to_string(expected_degree));
  c.require(involution, inv_detail);
  switch (t) {
    case Theorem::Lemma1General:
    case Theorem::Lemma1Divisor: {
      const long expected = t == Theorem::Lemma1General ? 0 : 1;
      c.require(h_source == h_residual, "h0 mismatch " + std::to_string(h_source) + " vs " + std::to_string(h_residual));
      c.require(h_source == expected && h_residual == expected,
                "h0 pair (" + std::to_string(h_source) + ", " + std::to_string(h_residual) + ") != (" +
                    std::to_string(expected) + ", " + std::to_string(expected) + ")");
      break;
    }
    default:
      c.require(h_residual == 1, "residual not in divisor: " + h0_key(residual_twist) + " = " +
                                     std::to_string(h_residual));
      break;
  }
  return {c.ok, c.detail, std::move(ledger)};
}

TrialOutcome prop_tangential_trial(const PrimeField& field, int r, Rng& rng) {
  const int k = 2 * (r + 1);
  Checks c;
  auto sample = sample_tangential_divisor(field, r, rng);
  auto step = residuate(sample.handle, k, rng);
  const long h_source = static_cast<long>(step.source.h0(k));
  const long h_residual = static_cast<long>(step.residual.h0(k));
  const auto betti = betti_table(step.residual, k + 2);
  const auto expected = expected_residual_betti_tangential(r);
  const bool surjective = mu_surjective(step.residual, k);
  std::string inv_detail;
  const bool involution = check_involution(step, &inv_detail);
  const int expected_degree = tangential_number(r + 1);

  Ledger ledger{{"source_" + h0_key(k), h_source},
                {"residual_" + h0_key(k), h_residual},
                {"source_degree", step.source_degree},
                {"residual_degree", step.residual_degree.value_or(-1)},
                {"mu_surjective", surjective ? 1 : 0},
                {"involution", involution ? 1 : 0},
                {"retries", sample.retries_used + step.retries_used}};

  c.require(step.residual_degree == expected_degree,
            "residual degree " + std::to_string(step.residual_degree.value_or(-1)) + " != " +
                std::to_string(expected_degree));
  c.require(betti == expected, "residual " + to_string(betti) + " expected " + to_string(expected));
  c.require(h_source == 5L * r + 6, "source " + h0_key(k) + " = " + std::to_string(h_source));
  c.require(h_residual == r + 2L, "residual " + h0_key(k) + " = " + std::to_string(h_residual));
  c.require(!surjective, "mu is surjective on the residual");
  c.require(involution, inv_detail);
  return {c.ok, c.detail, std::move(ledger)};
}

// μ_{2r} against the Betti shape, on a general sample and a divisor
// sample; plus the general sample's residual, which must be general in the
// next family.
TrialOutcome mu_criterion_trial(const PrimeField& field, int r, Rng& rng) {
  Checks c;
  auto general = sample_general_points(field, tangential_number(r), rng);
  auto divisor = sample_tangential_divisor(field, r, rng);
  const bool mu_general = mu_surjective(general.handle, 2 * r);
  const bool mu_divisor = mu_surjective(divisor.handle, 2 * r);
  const bool shape_general = betti_table(general.handle, 2 * r + 2) == generic_tangential_betti(r);
  const bool shape_divisor = betti_table(divisor.handle, 2 * r + 3) == tangential_divisor_betti(r);
  c.require(mu_general == shape_general, "general sample: mu and Betti criteria disagree");
  c.require(mu_divisor == !shape_divisor, "divisor sample: mu and Betti criteria disagree");
  c.require(mu_general && !mu_divisor, "mu criterion misclassifies a sample");

  const int k = 2 * (r + 1);
  auto step = residuate(general.handle, k, rng);
  const auto residual_betti = betti_table(step.residual, k + 2);
  const bool residual_mu = mu_surjective(step.residual, k);
  c.require(residual_betti == generic_tangential_betti(r + 1),
            "residual of a general sample has " + to_string(residual_betti));
  c.require(residual_mu, "residual of a general sample fails mu surjectivity");

  Ledger ledger{{"general_mu_surjective", mu_general ? 1 : 0},
                {"divisor_mu_surjective", mu_divisor ? 1 : 0},
                {"general_" + h0_key(2 * r), static_cast<long>(general.handle.h0(2 * r))},
                {"divisor_" + h0_key(2 * r), static_cast<long>(divisor.handle.h0(2 * r))},
                {"residual_mu_surjective", residual_mu ? 1 : 0},
                {"retries", general.retries_used + divisor.retries_used + step.retries_used}};
  return {c.ok, c.detail, std::move(ledger)};
}

}  // namespace

TrialOutcome run_trial(const PrimeField& field, Theorem t, int r, std::uint64_t seed) {
  const auto [lo, hi] = theorem_r_bounds(t);
  if (r < lo || r > hi)
    throw Error(ErrorCode::ConfigInvalid, std::string(theorem_id(t)) + " supports r in [" + std::to_string(lo) +
                                              ", " + std::to_string(hi) + "], got " + std::to_string(r));
  Rng rng(seed);
  switch (t) {
    case Theorem::GenericBettiTriangular: {
      auto s = sample_general_points(field, triangular_number(r), rng);
      auto betti = betti_table(s.handle, r + 2);
      Checks c;
      c.require(betti == generic_triangular_betti(r), to_string(betti));
      c.require(betti.total0() - betti.total1() == 1, "Hilbert–Burch rank identity fails");
      return {c.ok,
              c.detail,
              {{h0_key(r - 1), static_cast<long>(s.handle.h0(r - 1))},
               {h0_key(r), static_cast<long>(s.handle.h0(r))},
               {"retries", s.retries_used}}};
    }
    case Theorem::GenericBettiTangential: {
      auto s = sample_general_points(field, tangential_number(r), rng);
      auto betti = betti_table(s.handle, 2 * r + 2);
      Checks c;
      c.require(betti == generic_tangential_betti(r), to_string(betti));
      c.require(betti.total0() - betti.total1() == 1, "Hilbert–Burch rank identity fails");
      return {c.ok,
              c.detail,
              {{h0_key(2 * r), static_cast<long>(s.handle.h0(2 * r))},
               {h0_key(2 * r + 1), static_cast<long>(s.handle.h0(2 * r + 1))},
               {"retries", s.retries_used}}};
    }
    case Theorem::Lemma1General:
    case Theorem::Lemma1Divisor:
    case Theorem::CorollaryForward:
    case Theorem::CorollaryBackward: return triangular_trial(field, t, r, rng);
    case Theorem::PropTangential: return prop_tangential_trial(field, r, rng);
    case Theorem::MuCriterion: return mu_criterion_trial(field, r, rng);
    case Theorem::DimensionIdentity: {
      const bool ok = dimension_identity_tangential(r);
      const long lhs = (2L * tangential_number(r) - 1) + 2L * (5L * r + 4) - 2L * r;
      return {ok, ok ? "" : "identity fails", {{"lhs", lhs}, {"rhs", 2L * tangential_number(r + 1) - 1}}};
    }
    case Theorem::RiemannRochLedger: {
      const long v = riemann_roch_correction(r);
      return {v == 0, v == 0 ? "" : "correction term is nonzero", {{"correction", v}}};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown theorem");
}

VerificationReport verify(const PrimeField& field, Theorem t, int r, int trials, std::uint64_t base_seed, int jobs) {
  if (trials < 1) throw Error(ErrorCode::ConfigInvalid, "trials must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(trials));
  for (int i = 0; i < trials; ++i) seeds[static_cast<std::size_t>(i)] = trial_seed(base_seed, t, r, i);

#pragma omp parallel for schedule(dynamic) num_threads(jobs < 1 ? 1 : jobs)
  for (int i = 0; i < trials; ++i) {
    auto& out = outcomes[static_cast<std::size_t>(i)];
    try {
      out = run_trial(field, t, r, seeds[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
      out = {false, e.what(), {}};
    }
  }

  VerificationReport report;
  report.theorem = std::string(theorem_id(t));
  report.r = r;
  report.trials = trials;
  for (int i = 0; i < trials; ++i) {
    auto& o = outcomes[static_cast<std::size_t>(i)];
    if (o.pass) {
      ++report.passes;
    } else {
      report.failures.push_back({i, seeds[static_cast<std::size_t>(i)], o.detail});
    }
    report.h0_ledger.push_back({i, std::move(o.ledger)});
  }
  if (t == Theorem::MuCriterion || t == Theorem::PropTangential)
    report.notes.push_back("mu tested in degree 2r for schemes of degree 2r(r+1)");
  if (t == Theorem::Lemma1Divisor || t == Theorem::CorollaryForward || t == Theorem::CorollaryBackward)
    report.notes.push_back("divisor membership means h0 == 1 exactly; raw values are in the ledger");
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify_lemma1(const PrimeField& field, int r, Lemma1Variant variant, int trials,
                                 std::uint64_t base_seed, int jobs) {
  return verify(field, variant == Lemma1Variant::General ? Theorem::Lemma1General : Theorem::Lemma1Divisor, r, trials,
                base_seed, jobs);
}

VerificationReport verify_corollary_triangular(const PrimeField& field, int r, Direction direction, int trials,
                                               std::uint64_t base_seed, int jobs) {
  return verify(field, direction == Direction::Forward ? Theorem::CorollaryForward : Theorem::CorollaryBackward, r,
                trials, base_seed, jobs);
}

VerificationReport verify_prop_tangential(const PrimeField& field, int r, int trials, std::uint64_t base_seed,
                                          int jobs) {
  return verify(field, Theorem::PropTangential, r, trials, base_seed, jobs);
}

}  // namespace llab
