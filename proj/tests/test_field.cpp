#include <doctest.h>

#include <cmath>
#include <vector>

#include "llab/field.hpp"

using namespace llab;

TEST_CASE("prime field arithmetic examples") {
  PrimeField f(101);
  CHECK(f.add(50, 60) == 9);
  CHECK(f.inv(2) == 51);
  CHECK(f.mul(2, 51) == 1);
  CHECK(f.sub(3, 5) == 99);
  CHECK(f.neg(0) == 0);
  CHECK(f.from_int(-1) == 100);
  CHECK(f.from_int(202) == 0);
}

TEST_CASE("rational arithmetic examples") {
  RationalField q;
  auto third = q.div(q.one(), q.from_int(3));
  auto sixth = q.div(q.one(), q.from_int(6));
  CHECK(q.eq(q.add(third, sixth), q.div(q.one(), q.from_int(2))));
  CHECK(q.to_string(q.add(third, sixth)) == "1/2");
  CHECK_THROWS_AS(q.inv(q.zero()), Error);
  Rng rng(1);
  CHECK_THROWS_AS(q.random(rng), Error);
  try {
    q.random(rng);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedField);
  }
}

TEST_CASE("division by zero") {
  PrimeField f(101);
  try {
    f.inv(0);
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  CHECK_THROWS_AS(f.div(3, 0), Error);
}

TEST_CASE("prime validation") {
  try {
    PrimeField f(97);
    FAIL("97 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldTooSmall);
  }
  CHECK_THROWS_AS(PrimeField(1001), Error);  // 7 * 11 * 13
  CHECK(PrimeField().characteristic() == 31991);
  CHECK(is_prime(31991));
}

TEST_CASE("random scalars are deterministic and in range") {
  PrimeField f(101);
  Rng a(7), b(7);
  for (int i = 0; i < 1000; ++i) {
    auto x = f.random(a);
    CHECK(x == f.random(b));
    CHECK(x <= 100);
  }
}

TEST_CASE("random scalars are uniform: every residue within 5 sigma") {
  PrimeField f(101);
  Rng rng(2024);
  const int draws = 10000;
  std::vector<int> counts(101, 0);
  for (int i = 0; i < draws; ++i) ++counts[f.random(rng)];
  const double q = 1.0 / 101, mean = draws * q, sigma = std::sqrt(draws * q * (1 - q));
  double chi2 = 0;
  for (int c : counts) {
    CHECK(std::abs(c - mean) <= 5 * sigma);
    chi2 += (c - mean) * (c - mean) / mean;
  }
  // 100 degrees of freedom; 5 sigma of the chi-square distribution
  CHECK(chi2 < 100 + 5 * std::sqrt(200.0));
}

TEST_CASE("field axioms on random triples") {
  for (std::uint32_t p : {101u, 31991u, 2147483647u}) {
    PrimeField f(p);
    Rng rng(p);
    for (int i = 0; i < 500; ++i) {
      auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.zero()) == a);
      CHECK(f.mul(a, f.one()) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, p) == a);  // Fermat
    }
  }
}

TEST_CASE("rational axioms on random triples") {
  RationalField q;
  Rng rng(5);
  auto draw = [&] {
    auto num = static_cast<long>(uniform_below(rng, 41)) - 20;
    auto den = static_cast<long>(uniform_below(rng, 9)) + 1;
    return q.div(q.from_int(num), q.from_int(den));
  };
  for (int i = 0; i < 200; ++i) {
    auto a = draw(), b = draw(), c = draw();
    CHECK(q.eq(q.mul(a, q.add(b, c)), q.add(q.mul(a, b), q.mul(a, c))));
    CHECK(q.eq(q.add(q.add(a, b), c), q.add(a, q.add(b, c))));
    if (!q.is_zero(a)) CHECK(q.eq(q.mul(a, q.inv(a)), q.one()));
  }
}

TEST_CASE("canonical representatives are unique") {
  PrimeField f(101);
  for (long v = -300; v <= 300; ++v) {
    CHECK(f.from_int(v) == f.from_int(v + 101));
    CHECK(f.from_int(v) < 101);
  }
  RationalField q;
  CHECK(q.to_string(q.div(q.from_int(2), q.from_int(4))) == q.to_string(q.div(q.from_int(-3), q.from_int(-6))));
}

TEST_CASE("seed derivation separates streams") {
  CHECK(derive_seed(42, 0) != derive_seed(42, 1));
  CHECK(derive_seed(42, 7) == derive_seed(42, 7));
  CHECK(derive_seed(41, 7) != derive_seed(42, 7));
}
