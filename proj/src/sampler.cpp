#include "llab/sampler.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "llab/root_scan.hpp"

namespace llab {

BettiTable generic_triangular_betti(int r) { return {{{r, r + 1}}, {{r + 1, r}}}; }

BettiTable generic_tangential_betti(int r) { return {{{2 * r, r + 1}}, {{2 * r + 2, r}}}; }

BettiTable tangential_divisor_betti(int r) {
  BettiTable t;
  t.beta0[2 * r] = r + 1;
  t.beta0[2 * r + 1] += 1;
  t.beta1[2 * r + 1] += 1;
  t.beta1[2 * r + 2] += r;
  return t;
}

namespace {

std::string profile_string(const HilbertProfile& h) {
  std::string s;
  for (std::size_t i = 0; i < h.codims.size(); ++i) s += (i ? "," : "") + std::to_string(h.codims[i]);
  return s;
}

FpPoint random_point(const PrimeField& field, Rng& rng) {
  for (;;) {
    auto x = field.random(rng), y = field.random(rng), z = field.random(rng);
    if (x || y || z) return FpPoint::make(field, x, y, z);
  }
}

[[noreturn]] void exhausted(const std::string& what, int max_retries) {
  throw Error(ErrorCode::ResampleExhausted, what + " still degenerate after " + std::to_string(max_retries) + " resamples");
}

void check_retries(int max_retries) {
  if (max_retries < 0) throw Error(ErrorCode::InvalidArgument, "max_retries must be nonnegative");
}

}  // namespace

SampleResult sample_general_points(const PrimeField& field, int n, Rng& rng, int max_retries) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "need at least one point");
  check_retries(max_retries);
  int top = 0;
  while (monomial_count(top) < static_cast<std::size_t>(n)) ++top;
  ++top;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    std::set<FpPoint> seen;
    std::vector<FpPoint> pts;
    while (pts.size() < static_cast<std::size_t>(n)) {
      auto p = random_point(field, rng);
      if (seen.insert(p).second) pts.push_back(p);
    }
    auto ideal = FpIdeal::from_points(field, pts);
    auto profile = hilbert_profile(ideal, top);
    bool generic = true;
    for (int d = 0; d <= top; ++d)
      if (profile.codims[static_cast<std::size_t>(d)] !=
          std::min<long>(static_cast<long>(monomial_count(d)), n))
        generic = false;
    if (!generic) continue;
    SampleResult out{ideal, {}, attempt, std::move(pts), std::nullopt, {}};
    out.certificate["points"] = std::to_string(n);
    out.certificate["hilbert_profile"] = profile_string(profile);
    out.certificate["hilbert_generic"] = "true";
    return out;
  }
  exhausted(std::to_string(n) + " general points", max_retries);
}

std::vector<FpPoint> rational_points_on_curve(const PrimeField& field, const FpForm& curve, std::size_t wanted,
                                              std::size_t max_lines, Rng& rng) {
  const int k = curve.degree();
  const MonomialBasis basis(k);
  std::vector<FpPoint> found;
  std::set<std::uint32_t> lines;
  std::size_t scanned = 0;
  while (found.size() < wanted && scanned < max_lines && lines.size() < field.characteristic()) {
    const auto a = field.random(rng);
    if (!lines.insert(a).second) continue;
    ++scanned;
    // curve(a, y, 1) as a polynomial in y
    std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(k) + 1, 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto c = curve.coeffs()[i];
      if (!c) continue;
      const auto& e = basis[i];
      auto& slot = coeffs[static_cast<std::size_t>(e.y)];
      slot = field.add(slot, field.mul(c, field.pow(a, static_cast<std::uint64_t>(e.x))));
    }
    if (std::all_of(coeffs.begin(), coeffs.end(), [](std::uint32_t c) { return c == 0; })) continue;
    for (auto y : scan_roots(field, coeffs)) found.push_back(FpPoint::make(field, a, y, 1));
  }
  return found;
}

SampleResult sample_points_on_curve(const PrimeField& field, int n, int k, Rng& rng, int max_retries) {
  if (n < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "need n >= 1 and curve degree >= 1");
  check_retries(max_retries);
  if (field.characteristic() <= static_cast<std::uint32_t>(2 * n))
    throw Error(ErrorCode::FieldTooSmall, "p = " + std::to_string(field.characteristic()) + " must exceed 2n = " +
                                              std::to_string(2 * n));
  const auto wanted = static_cast<std::size_t>(4 * n);
  const auto max_lines = std::max<std::size_t>(64, static_cast<std::size_t>(32 * n));
  const long expected_h0 = std::max<long>(1, static_cast<long>(monomial_count(k)) - n);
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    auto curve = FpForm::random(field, k, rng);
    if (curve.is_zero(field)) continue;
    auto candidates = rational_points_on_curve(field, curve, wanted, max_lines, rng);
    if (candidates.size() < static_cast<std::size_t>(n)) continue;
    // partial Fisher–Yates
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      auto j = i + uniform_below(rng, candidates.size() - i);
      std::swap(candidates[i], candidates[j]);
    }
    candidates.resize(static_cast<std::size_t>(n));
    std::sort(candidates.begin(), candidates.end());
    bool on_curve = std::all_of(candidates.begin(), candidates.end(),
                                [&](const FpPoint& p) { return evaluate(field, curve, p) == 0; });
    auto ideal = FpIdeal::from_points(field, candidates);
    const auto h0 = static_cast<long>(ideal.h0(k));
    if (!on_curve || h0 != expected_h0) continue;
    SampleResult out{ideal, {}, attempt, std::move(candidates), curve, {}};
    out.certificate["points"] = std::to_string(n);
    out.certificate["curve_degree"] = std::to_string(k);
    out.certificate["on_curve"] = "true";
    out.certificate["h0(" + std::to_string(k) + ")"] = std::to_string(h0);
    return out;
  }
  exhausted(std::to_string(n) + " points on a degree-" + std::to_string(k) + " curve", max_retries);
}

SampleResult sample_triangular_divisor(const PrimeField& field, int r, Rng& rng, int max_retries) {
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "triangular divisor needs r >= 2");
  return sample_points_on_curve(field, triangular_number(r), r - 1, rng, max_retries);
}

std::vector<FpForm> hilbert_burch_generators(const PrimeField& field, const std::vector<std::vector<FpForm>>& phi,
                                             const std::vector<std::vector<int>>& degrees) {
  const std::size_t rows = phi.size();
  if (rows < 2 || degrees.size() != rows) throw Error(ErrorCode::InvalidArgument, "Hilbert–Burch matrix shape");
  const std::size_t cols = rows - 1;
  std::vector<FpForm> gens;
  for (std::size_t skip = 0; skip < rows; ++skip) {
    std::vector<std::vector<FpForm>> sub;
    std::vector<std::vector<int>> sub_deg;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == skip) continue;
      if (phi[i].size() != cols) throw Error(ErrorCode::InvalidArgument, "Hilbert–Burch matrix shape");
      sub.push_back(phi[i]);
      sub_deg.push_back(degrees[i]);
    }
    auto minor = poly_matrix_det(field, sub, sub_deg);
    if (skip % 2 == 1) minor = scale(field, field.neg(field.one()), minor);
    gens.push_back(std::move(minor));
  }
  return gens;
}

SampleResult sample_tangential_divisor(const PrimeField& field, int r, Rng& rng, int max_retries) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "tangential divisor needs r >= 1");
  check_retries(max_retries);
  // Rows: r+1 generators of degree 2r, then one of degree 2r+1.
  // Columns: one syzygy of degree 2r+1, then r of degree 2r+2.
  const std::size_t rows = static_cast<std::size_t>(r) + 2, cols = static_cast<std::size_t>(r) + 1;
  std::vector<std::vector<int>> degrees(rows, std::vector<int>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const int target = i + 1 < rows ? 2 * r : 2 * r + 1;
      const int source = j == 0 ? 2 * r + 1 : 2 * r + 2;
      degrees[i][j] = source - target;
    }
  const int d_max = 2 * r + 3;
  const auto expected = tangential_divisor_betti(r);
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<std::vector<FpForm>> phi(rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        // the degree-0 entry is forced to zero, otherwise the resolution
        // would not be minimal
        if (degrees[i][j] == 0) {
          phi[i].push_back(FpForm(0));
        } else {
          phi[i].push_back(FpForm::random(field, degrees[i][j], rng));
        }
      }
    auto gens = hilbert_burch_generators(field, phi, degrees);
    for (std::size_t j = 0; j < cols; ++j) {
      FpForm acc(gens[0].degree() + degrees[0][j]);
      for (std::size_t i = 0; i < rows; ++i)
        if (!phi[i][j].is_zero(field)) acc = add(field, acc, multiply(field, gens[i], phi[i][j]));
      if (!acc.is_zero(field))
        throw Error(ErrorCode::InvalidArgument, "minor signs do not annihilate the Hilbert–Burch matrix");
    }
    if (std::any_of(gens.begin(), gens.end(), [&](const FpForm& g) { return g.is_zero(field); })) continue;
    auto ideal = FpIdeal::from_generators(field, gens);
    auto profile = hilbert_profile(ideal, d_max);
    if (profile.stable_value != tangential_number(r)) continue;
    auto betti = betti_table(ideal, d_max);
    if (betti != expected) continue;
    const auto h0 = static_cast<long>(ideal.h0(2 * r + 2));
    if (h0 != 5 * r + 6) continue;
    SampleResult out{ideal, {}, attempt, {}, std::nullopt, std::move(phi)};
    out.certificate["degree"] = std::to_string(tangential_number(r));
    out.certificate["hilbert_profile"] = profile_string(profile);
    out.certificate["betti"] = to_string(betti);
    out.certificate["h0(" + std::to_string(2 * r + 2) + ")"] = std::to_string(h0);
    return out;
  }
  exhausted("tangential divisor sample (r = " + std::to_string(r) + ")", max_retries);
}

SampleResult sample_tangential_general(const PrimeField& field, int r, Rng& rng, int max_retries) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "tangential family needs r >= 1");
  check_retries(max_retries);
  const auto expected = generic_tangential_betti(r);
  int used = 0;
  while (used <= max_retries) {
    auto s = sample_general_points(field, tangential_number(r), rng, max_retries - used);
    used += s.retries_used;
    auto betti = betti_table(s.handle, 2 * r + 2);
    if (betti == expected) {
      s.retries_used = used;
      s.certificate["betti"] = to_string(betti);
      return s;
    }
    ++used;
  }
  exhausted(std::to_string(tangential_number(r)) + " general points with the generic resolution", max_retries);
}

SampleResult sample(const PrimeField& field, const SampleRequest& request) {
  Rng rng(request.seed);
  switch (request.kind) {
    case SampleKind::GeneralPoints: return sample_general_points(field, request.n, rng, request.max_retries);
    case SampleKind::PointsOnCurve:
      return sample_points_on_curve(field, request.n, request.curve_degree, rng, request.max_retries);
    case SampleKind::TriangularDivisor: return sample_triangular_divisor(field, request.r, rng, request.max_retries);
    case SampleKind::TangentialGeneral: return sample_tangential_general(field, request.r, rng, request.max_retries);
    case SampleKind::TangentialDivisor: return sample_tangential_divisor(field, request.r, rng, request.max_retries);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown sample kind");
}

}  // namespace llab
