#pragma once

// Exact scalar fields: a prime field with a runtime modulus, and the
// rationals backed by GMP. Both expose the same small interface so the
// linear algebra and ideal code can be written once as templates.

#include <concepts>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "llab/errors.hpp"

namespace llab {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; independent of the
/// standard library's distribution implementation so that streams are
/// reproducible across toolchains.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidArgument, "uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// splitmix64 finalizer, used to derive independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return mix_seed(base ^ mix_seed(stream));
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

enum class FieldKind { PrimeField, Rationals };

struct FieldSpec {
  FieldKind kind = FieldKind::PrimeField;
  std::uint32_t p = 31991;  // meaningful only for PrimeField
};

/// 𝔽_p for a prime 101 <= p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  static constexpr std::uint32_t kDefaultPrime = 31991;
  static constexpr std::uint32_t kMinPrime = 101;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (p < kMinPrime)
      throw Error(ErrorCode::FieldTooSmall,
                  "prime " + std::to_string(p) + " is below the minimum " + std::to_string(kMinPrime));
    if (p >= (1u << 31) || !is_prime(p))
      throw Error(ErrorCode::ConfigInvalid, std::to_string(p) + " is not a supported prime");
  }

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return {FieldKind::PrimeField, p_}; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    return static_cast<value_type>(m);
  }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type result = 1;
    while (e) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }
  value_type inv(value_type a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(p_));
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return from_int(t);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  bool is_zero(value_type a) const { return a == 0; }
  bool eq(value_type a, value_type b) const { return a == b; }
  std::string to_string(value_type a) const { return std::to_string(a); }

  value_type random(Rng& rng) const { return static_cast<value_type>(uniform_below(rng, p_)); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// ℚ with arbitrary precision. Only meant for small cross-checks; coefficient
/// growth makes it impractical for the verification suites.
class RationalField {
 public:
  using value_type = mpq_class;

  FieldSpec spec() const { return {FieldKind::Rationals, 0}; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool eq(const value_type& a, const value_type& b) const { return a == b; }
  std::string to_string(const value_type& a) const { return a.get_str(); }

  [[noreturn]] value_type random(Rng&) const {
    throw Error(ErrorCode::UnsupportedField, "the rationals have no uniform distribution");
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
concept ExactField = requires(const F& f, const typename F::value_type& a, Rng& rng) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.from_int(std::int64_t{}) } -> std::convertible_to<typename F::value_type>;
};

}  // namespace llab
