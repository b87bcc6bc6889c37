#pragma once

// Homogeneous ideals of k[x,y,z], handled one graded piece at a time.
//
// No Gröbner bases: every ideal here has known generation degrees, so each
// question (h⁰, generators, syzygies, quotients) reduces to linear algebra
// in a fixed degree. Handles are assumed saturated by construction: ideals
// of reduced points, liaison quotients, and maximal minors of
// Hilbert–Burch matrices.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "llab/errors.hpp"
#include "llab/field.hpp"
#include "llab/graded_ring.hpp"
#include "llab/matrix.hpp"

namespace llab {

template <ExactField F>
struct GradedSubspace {
  int degree = 0;
  Subspace<F> space;

  std::size_t dim() const { return space.dim(); }
  friend bool operator==(const GradedSubspace&, const GradedSubspace&) = default;
};

template <ExactField F>
struct Generator {
  int degree = 0;
  Form<F> form;
};

/// Graded Betti numbers of a resolution of length at most 2:
/// beta0[d] minimal generators of degree d, beta1[d] minimal first syzygies.
struct BettiTable {
  std::map<int, int> beta0;
  std::map<int, int> beta1;

  int total0() const {
    int s = 0;
    for (auto [d, n] : beta0) s += n;
    return s;
  }
  int total1() const {
    int s = 0;
    for (auto [d, n] : beta1) s += n;
    return s;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

inline std::string to_string(const std::map<int, int>& ranks) {
  std::string out = "{";
  bool first = true;
  for (auto [d, n] : ranks) {
    if (!first) out += ", ";
    out += std::to_string(d) + ":" + std::to_string(n);
    first = false;
  }
  return out + "}";
}

inline std::string to_string(const BettiTable& t) {
  return "beta0=" + to_string(t.beta0) + " beta1=" + to_string(t.beta1);
}

/// codims[d] = dim S_d − dim I_d for d = 0..d_max.
struct HilbertProfile {
  std::vector<long> codims;
  std::optional<long> stable_value;
};

enum class Presentation { FromPoints, FromGenerators, FromPieces };

namespace detail {

// index map for multiplication by x, y or z from degree d to d+1
inline std::vector<std::size_t> variable_shift(int d, int var) {
  const MonomialBasis basis(d);
  std::vector<std::size_t> out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Exponent e = basis[i];
    (var == 0 ? e.x : var == 1 ? e.y : e.z) += 1;
    out[i] = monomial_index(e);
  }
  return out;
}

}  // namespace detail

/// S_1 · W for W ⊆ S_d, as a subspace of S_{d+1}.
template <ExactField F>
Subspace<F> linear_multiples(const F& field, const Subspace<F>& w, int d) {
  const std::size_t target = monomial_count(d + 1);
  Matrix<F> rows(3 * w.dim(), target);
  for (int var = 0; var < 3; ++var) {
    const auto shift = detail::variable_shift(d, var);
    for (std::size_t i = 0; i < w.dim(); ++i) {
      auto src = w.basis().row(i);
      auto dst = rows.row(static_cast<std::size_t>(var) * w.dim() + i);
      for (std::size_t j = 0; j < src.size(); ++j) dst[shift[j]] = src[j];
    }
  }
  return Subspace<F>::span(field, std::move(rows));
}

template <ExactField F>
class IdealHandle {
 public:
  using value_type = typename F::value_type;

  /// Ideal of a reduced set of distinct points.
  static IdealHandle from_points(const F& field, std::vector<ProjPoint<F>> points) {
    std::set<ProjPoint<F>> seen(points.begin(), points.end());
    if (seen.size() != points.size()) throw Error(ErrorCode::InvalidArgument, "points are not distinct");
    auto s = std::make_shared<State>(field, Presentation::FromPoints);
    s->points = std::move(points);
    return IdealHandle(std::move(s));
  }

  static IdealHandle from_generators(const F& field, std::vector<Form<F>> generators) {
    if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "an ideal needs at least one generator");
    for (const auto& g : generators)
      if (g.is_zero(field)) throw Error(ErrorCode::InvalidArgument, "zero generator");
    auto s = std::make_shared<State>(field, Presentation::FromGenerators);
    s->generators = std::move(generators);
    return IdealHandle(std::move(s));
  }

  /// Explicit pieces over a contiguous degree range [lo, hi], closed under
  /// multiplication by linear forms. Below lo the ideal is known to vanish
  /// only when piece(lo) is zero; any other query outside the range throws
  /// DegreeOutOfRange.
  static IdealHandle from_pieces(const F& field, std::map<int, Subspace<F>> pieces) {
    if (pieces.empty()) throw Error(ErrorCode::InvalidArgument, "no pieces given");
    const int lo = pieces.begin()->first, hi = pieces.rbegin()->first;
    if (lo < 0) throw Error(ErrorCode::DegreeOutOfRange, "negative degree piece");
    if (static_cast<std::size_t>(hi - lo + 1) != pieces.size())
      throw Error(ErrorCode::InvalidArgument, "pieces do not cover a contiguous degree range");
    for (const auto& [d, w] : pieces)
      if (w.ambient_dim() != monomial_count(d)) throw Error(ErrorCode::AmbientMismatch, "piece has wrong ambient");
    for (int d = lo; d < hi; ++d)
      if (!is_subspace_of(field, linear_multiples(field, pieces.at(d), d), pieces.at(d + 1)))
        throw Error(ErrorCode::InvalidArgument, "pieces are not closed under multiplication by S_1");
    auto s = std::make_shared<State>(field, Presentation::FromPieces);
    s->lo = lo;
    s->hi = hi;
    s->cache = std::move(pieces);
    return IdealHandle(std::move(s));
  }

  const F& field() const { return state_->field; }
  Presentation presentation() const { return state_->kind; }
  const std::vector<ProjPoint<F>>& points() const { return state_->points; }
  const std::vector<Form<F>>& generators() const { return state_->generators; }
  /// Stored degree range of a FromPieces handle.
  std::pair<int, int> window() const { return {state_->lo, state_->hi}; }

  /// The degree-d piece as a canonical subspace of S_d.
  const Subspace<F>& piece_space(int d) const {
    if (d < 0) throw Error(ErrorCode::DegreeOutOfRange, "negative degree " + std::to_string(d));
    {
      std::lock_guard lock(state_->mu);
      if (auto it = state_->cache.find(d); it != state_->cache.end()) return it->second;
    }
    auto computed = compute_piece(d);
    std::lock_guard lock(state_->mu);
    return state_->cache.emplace(d, std::move(computed)).first->second;
  }

  GradedSubspace<F> piece(int d) const { return {d, piece_space(d)}; }

  std::size_t h0(int d) const { return piece_space(d).dim(); }

  /// Rows a with a·v = 0 exactly for v in piece(d).
  const Matrix<F>& annihilator_of(int d) const {
    {
      std::lock_guard lock(state_->mu);
      if (auto it = state_->annihilators.find(d); it != state_->annihilators.end()) return it->second;
    }
    auto computed = annihilator(field(), piece_space(d));
    std::lock_guard lock(state_->mu);
    return state_->annihilators.emplace(d, std::move(computed)).first->second;
  }

  /// A (not necessarily minimal) homogeneous generating set. For point
  /// ideals and stored pieces this is the minimal generators through one
  /// more than the first degree where the Hilbert function stops growing,
  /// which bounds the regularity of a saturated ideal of points.
  const std::vector<Generator<F>>& generating_set() const;

 private:
  struct State {
    State(const F& f, Presentation k) : field(f), kind(k) {}
    F field;
    Presentation kind;
    std::vector<ProjPoint<F>> points;
    std::vector<Form<F>> generators;
    int lo = 0, hi = -1;
    mutable std::mutex mu;
    mutable std::map<int, Subspace<F>> cache;
    mutable std::map<int, Matrix<F>> annihilators;
    mutable std::optional<std::vector<Generator<F>>> generating;
  };

  explicit IdealHandle(std::shared_ptr<State> s) : state_(std::move(s)) {}

  Subspace<F> compute_piece(int d) const {
    const F& f = field();
    switch (state_->kind) {
      case Presentation::FromPoints: {
        if (state_->points.empty()) return Subspace<F>::full(f, monomial_count(d));
        return kernel_basis(f, evaluation_matrix<F>(f, state_->points, d));
      }
      case Presentation::FromGenerators: {
        Matrix<F> rows(0, monomial_count(d));
        for (const auto& g : state_->generators) {
          if (g.degree() > d) continue;
          auto m = multiplication_matrix(f, g, d - g.degree());
          for (std::size_t i = 0; i < m.rows(); ++i) rows.append_row(m.row(i));
        }
        return Subspace<F>::span(f, std::move(rows));
      }
      case Presentation::FromPieces: {
        if (d < state_->lo) {
          std::lock_guard lock(state_->mu);
          if (state_->cache.at(state_->lo).dim() == 0) return Subspace<F>::zero(monomial_count(d));
        }
        throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(d) + " outside stored window [" +
                                                     std::to_string(state_->lo) + ", " +
                                                     std::to_string(state_->hi) + "]");
      }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown presentation");
  }

  std::shared_ptr<State> state_;
};

template <ExactField F>
HilbertProfile hilbert_profile(const IdealHandle<F>& ideal, int d_max) {
  if (d_max < 0) throw Error(ErrorCode::DegreeOutOfRange, "negative d_max");
  HilbertProfile out;
  for (int d = 0; d <= d_max; ++d)
    out.codims.push_back(static_cast<long>(monomial_count(d)) - static_cast<long>(ideal.h0(d)));
  const auto n = out.codims.size();
  if (n >= 3 && out.codims[n - 1] == out.codims[n - 2] && out.codims[n - 2] == out.codims[n - 3])
    out.stable_value = out.codims.back();
  return out;
}

/// For each degree d ≤ d_max, a basis of a complement of S_1·I_{d-1} in I_d.
/// The complement is chosen greedily from the RREF basis of I_d, so the
/// output is canonical.
template <ExactField F>
std::vector<Generator<F>> minimal_generators(const IdealHandle<F>& ideal, int d_max) {
  const F& field = ideal.field();
  std::vector<Generator<F>> out;
  for (int d = 0; d <= d_max; ++d) {
    const auto& piece = ideal.piece_space(d);
    if (piece.dim() == 0) continue;
    Subspace<F> reached =
        d == 0 ? Subspace<F>::zero(1) : linear_multiples(field, ideal.piece_space(d - 1), d - 1);
    if (reached.dim() == piece.dim()) continue;
    for (std::size_t i = 0; i < piece.dim(); ++i) {
      auto row = piece.basis().row(i);
      if (reached.contains(field, row)) continue;
      out.push_back({d, Form<F>(d, std::vector<typename F::value_type>(row.begin(), row.end()))});
      Matrix<F> one(0, row.size());
      one.append_row(row);
      reached = sum(field, reached, Subspace<F>::span(field, std::move(one)));
      if (reached.dim() == piece.dim()) break;
    }
  }
  return out;
}

template <ExactField F>
const std::vector<Generator<F>>& IdealHandle<F>::generating_set() const {
  {
    std::lock_guard lock(state_->mu);
    if (state_->generating) return *state_->generating;
  }
  std::vector<Generator<F>> gens;
  if (state_->kind == Presentation::FromGenerators) {
    for (const auto& g : state_->generators) gens.push_back({g.degree(), g});
  } else {
    const int cap = state_->kind == Presentation::FromPoints ? static_cast<int>(state_->points.size()) + 1
                                                             : state_->hi - 1;
    int stop = -1;
    long prev = static_cast<long>(monomial_count(0)) - static_cast<long>(h0(0));
    for (int d = 0; d <= cap; ++d) {
      long next = static_cast<long>(monomial_count(d + 1)) - static_cast<long>(h0(d + 1));
      if (next == prev) {
        stop = d;
        break;
      }
      prev = next;
    }
    if (stop < 0)
      throw Error(ErrorCode::DegreeOutOfRange, "Hilbert function does not stabilize inside the stored window");
    gens = minimal_generators(*this, stop + 1);
  }
  std::lock_guard lock(state_->mu);
  if (!state_->generating) state_->generating = std::move(gens);
  return *state_->generating;
}

/// Betti numbers through degree d_max. Syz_d is the kernel of
/// ⊕ S_{d-d_i} → S_d, (h_i) ↦ Σ h_i f_i over the minimal generators, and
/// beta1[d] = dim Syz_d − dim S_1·Syz_{d-1}.
template <ExactField F>
BettiTable betti_table(const IdealHandle<F>& ideal, int d_max) {
  const F& field = ideal.field();
  auto gens = minimal_generators(ideal, d_max);
  BettiTable table;
  for (const auto& g : gens) ++table.beta0[g.degree];

  auto layout = [&](int d) {
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    for (const auto& g : gens) {
      if (g.degree > d) break;
      offsets.push_back(total);
      total += monomial_count(d - g.degree);
    }
    offsets.push_back(total);
    return offsets;
  };

  Subspace<F> prev_syz;
  std::vector<std::size_t> prev_layout;
  for (int d = 0; d <= d_max; ++d) {
    auto offsets = layout(d);
    const std::size_t active = offsets.size() - 1;
    const std::size_t total = offsets.back();
    Matrix<F> map(total, monomial_count(d));
    for (std::size_t i = 0; i < active; ++i) {
      auto m = multiplication_matrix(field, gens[i].form, d - gens[i].degree);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        auto src = m.row(r);
        auto dst = map.row(offsets[i] + r);
        std::copy(src.begin(), src.end(), dst.begin());
      }
    }
    auto syz = kernel_basis(field, transpose(map));

    std::size_t lifted = 0;
    if (d > 0 && prev_syz.dim() > 0) {
      Matrix<F> rows(3 * prev_syz.dim(), total);
      const std::size_t prev_active = prev_layout.size() - 1;
      for (int var = 0; var < 3; ++var)
        for (std::size_t i = 0; i < prev_active; ++i) {
          const auto shift = detail::variable_shift(d - 1 - gens[i].degree, var);
          for (std::size_t s = 0; s < prev_syz.dim(); ++s) {
            auto src = prev_syz.basis().row(s);
            auto dst = rows.row(static_cast<std::size_t>(var) * prev_syz.dim() + s);
            for (std::size_t j = 0; j < shift.size(); ++j) dst[offsets[i] + shift[j]] = src[prev_layout[i] + j];
          }
        }
      lifted = rank(field, rows);
    }
    if (syz.dim() > lifted) table.beta1[d] = static_cast<int>(syz.dim() - lifted);
    prev_syz = std::move(syz);
    prev_layout = std::move(offsets);
  }
  return table;
}

/// (J : I)_d = {h ∈ S_d : h·f_i ∈ J for every generator f_i of I}, as the
/// kernel of the stacked constraints ann(J_{d+deg f_i}) · (h ↦ h·f_i).
template <ExactField F>
Subspace<F> ideal_quotient_piece(const IdealHandle<F>& numerator, const IdealHandle<F>& divisor, int d) {
  if (d < 0) throw Error(ErrorCode::DegreeOutOfRange, "negative degree");
  const F& field = numerator.field();
  const std::size_t n = monomial_count(d);
  Matrix<F> constraints(0, n);
  for (const auto& g : divisor.generating_set()) {
    const auto& ann = numerator.annihilator_of(d + g.degree);
    if (ann.rows() == 0) continue;
    auto c = multiply(field, ann, transpose(multiplication_matrix(field, g.form, d)));
    for (std::size_t i = 0; i < c.rows(); ++i) constraints.append_row(c.row(i));
  }
  return kernel_basis(field, constraints);
}

/// (F, G) with deg F = deg G = k is a complete intersection iff its pieces
/// in degrees 2k and 2k+1 have the Koszul dimensions 2·C(d−k+2,2) − C(d−2k+2,2).
/// A common factor creates a syzygy below degree 2k and lowers both.
template <ExactField F>
bool is_complete_intersection(const F& field, const Form<F>& f, const Form<F>& g) {
  if (f.degree() != g.degree() || f.degree() < 1)
    throw Error(ErrorCode::InvalidArgument, "complete intersection test needs two forms of equal positive degree");
  if (f.is_zero(field) || g.is_zero(field)) return false;
  const int k = f.degree();
  auto ideal = IdealHandle<F>::from_generators(field, {f, g});
  for (int d : {2 * k, 2 * k + 1}) {
    const auto expected = 2 * monomial_count(d - k) - monomial_count(d - 2 * k);
    if (ideal.h0(d) != expected) return false;
  }
  return true;
}

/// Whether S_1 ⊗ I_d → I_{d+1} is onto.
template <ExactField F>
bool mu_surjective(const IdealHandle<F>& ideal, int d) {
  return linear_multiples(ideal.field(), ideal.piece_space(d), d).dim() == ideal.h0(d + 1);
}

}  // namespace llab
