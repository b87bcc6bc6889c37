#include <doctest.h>

#include <set>
#include <tuple>

#include "llab/graded_ring.hpp"
#include "oracle.hpp"

using namespace llab;

namespace {

using FpForm = Form<PrimeField>;
using FpPoint = ProjPoint<PrimeField>;

FpForm mono(const PrimeField& f, int x, int y, int z, long c = 1) { return FpForm::monomial(f, {x, y, z}, c); }

FpPoint random_point(const PrimeField& f, Rng& rng) {
  for (;;) {
    auto x = f.random(rng), y = f.random(rng), z = f.random(rng);
    if (x || y || z) return FpPoint::make(f, x, y, z);
  }
}

}  // namespace

TEST_CASE("monomial bookkeeping") {
  for (int d = 0; d <= 20; ++d) {
    MonomialBasis b(d);
    CHECK(b.size() == monomial_count(d));
    CHECK(b.size() == static_cast<std::size_t>((d + 1) * (d + 2) / 2));
    std::set<std::tuple<int, int, int>> seen;
    for (std::size_t i = 0; i < b.size(); ++i) {
      CHECK(monomial_index(b[i]) == i);
      CHECK(b[i].degree() == d);
      seen.insert({b[i].x, b[i].y, b[i].z});
    }
    CHECK(seen.size() == b.size());
  }
  MonomialBasis two(2);
  CHECK(two[0] == Exponent{2, 0, 0});
  CHECK(two[1] == Exponent{1, 1, 0});
  CHECK(two[2] == Exponent{1, 0, 1});
  CHECK(two[5] == Exponent{0, 0, 2});
  CHECK_THROWS_AS(MonomialBasis(-1), Error);
}

TEST_CASE("evaluation examples") {
  PrimeField f(101);
  auto q = add(f, mono(f, 2, 0, 0), mono(f, 0, 1, 1));  // x^2 + yz
  CHECK(evaluate_at(f, q, {1, 2, 3}) == 7);
  CHECK(evaluate(f, q, FpPoint::from_ints(f, 1, 2, 1)) == 3);
  CHECK(evaluate(f, q, FpPoint::from_ints(f, 0, 0, 1)) == 0);
  CHECK(to_string(f, q) == "x^2 + y*z");
  CHECK(to_string(f, FpForm(3)) == "0");
}

TEST_CASE("points are normalized") {
  PrimeField f(101);
  CHECK(FpPoint::from_ints(f, 2, 4, 2) == FpPoint::from_ints(f, 1, 2, 1));
  CHECK(FpPoint::from_ints(f, 3, 0, 0) == FpPoint::from_ints(f, 1, 0, 0));
  CHECK_THROWS_AS(FpPoint::from_ints(f, 0, 0, 101), Error);
}

TEST_CASE("product examples") {
  PrimeField f(101);
  auto xy = multiply(f, add(f, mono(f, 1, 0, 0), mono(f, 0, 1, 0)), sub(f, mono(f, 1, 0, 0), mono(f, 0, 1, 0)));
  CHECK(xy == sub(f, mono(f, 2, 0, 0), mono(f, 0, 2, 0)));
  CHECK_THROWS_AS(add(f, mono(f, 1, 0, 0), mono(f, 2, 0, 0)), Error);
}

TEST_CASE("ring laws and evaluation homomorphism on random forms") {
  PrimeField f;
  Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    const int da = static_cast<int>(uniform_below(rng, 5)), db = static_cast<int>(uniform_below(rng, 5));
    auto a = FpForm::random(f, da, rng), b = FpForm::random(f, db, rng), c = FpForm::random(f, db, rng);
    auto ab = multiply(f, a, b);
    CHECK(ab.degree() == da + db);
    CHECK(ab == multiply(f, b, a));
    CHECK(multiply(f, a, add(f, b, c)) == add(f, ab, multiply(f, a, c)));
    auto e = FpForm::random(f, 2, rng);
    CHECK(multiply(f, ab, e) == multiply(f, a, multiply(f, b, e)));
    auto p = random_point(f, rng);
    CHECK(evaluate(f, ab, p) == f.mul(evaluate(f, a, p), evaluate(f, b, p)));
    CHECK(evaluate(f, add(f, b, c), p) == f.add(evaluate(f, b, p), evaluate(f, c, p)));
    // homogeneity: f(λv) = λ^deg f(v)
    const auto lambda = f.add(f.random(rng), 1);
    std::array<std::uint32_t, 3> scaled{};
    for (std::size_t i = 0; i < 3; ++i) scaled[i] = f.mul(lambda, p.coords()[i]);
    CHECK(evaluate_at(f, ab, scaled) == f.mul(f.pow(lambda, static_cast<std::uint64_t>(da + db)), evaluate(f, ab, p)));
  }
}

TEST_CASE("multiplication matrix agrees with multiply") {
  PrimeField f;
  Rng rng(5);
  auto g = FpForm::random(f, 3, rng);
  auto h = FpForm::random(f, 2, rng);
  auto m = multiplication_matrix(f, g, 2);
  FpForm viaMatrix(5);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) acc = f.add(acc, f.mul(h.coeffs()[i], m(i, j)));
    viaMatrix.coeffs()[j] = acc;
  }
  CHECK(viaMatrix == multiply(f, h, g));
}

TEST_CASE("evaluation matrix rank matches the oracle") {
  PrimeField f;
  Rng rng(12);
  for (int n = 1; n <= 8; ++n) {
    std::vector<FpPoint> pts;
    std::vector<std::array<std::int64_t, 3>> raw;
    for (int i = 0; i < n; ++i) {
      pts.push_back(random_point(f, rng));
      raw.push_back({pts.back().coords()[0], pts.back().coords()[1], pts.back().coords()[2]});
    }
    for (int d = 0; d <= 4; ++d) {
      const auto m = evaluation_matrix<PrimeField>(f, pts, d);
      oracle::Mat om(m.rows(), std::vector<std::int64_t>(m.cols()));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) om[i][j] = m(i, j);
      CHECK(rank(f, m) == oracle::rank(om, f.characteristic()));
      CHECK(oracle::rank(oracle::evaluation(raw, d, f.characteristic()), f.characteristic()) == rank(f, m));
    }
  }
}

TEST_CASE("determinant of a matrix of forms") {
  PrimeField f(101);
  auto x = mono(f, 1, 0, 0), y = mono(f, 0, 1, 0), z = mono(f, 0, 0, 1);
  auto det = poly_matrix_det<PrimeField>(f, {{x, y}, {y, z}}, {{1, 1}, {1, 1}});
  CHECK(det == sub(f, mono(f, 1, 0, 1), mono(f, 0, 2, 0)));

  // mixed degrees: [[x, y^2], [1, z]] -> xz - y^2
  auto mixed = poly_matrix_det<PrimeField>(f, {{x, mono(f, 0, 2, 0)}, {FpForm::constant(1), z}}, {{1, 2}, {0, 1}});
  CHECK(mixed == sub(f, mono(f, 1, 0, 1), mono(f, 0, 2, 0)));

  CHECK_THROWS_AS(poly_matrix_det<PrimeField>(f, {{x, y}, {y, z}}, {{1, 2}, {1, 1}}), Error);
  CHECK_THROWS_AS(poly_matrix_det<PrimeField>(f, {{x, y}, {y, mono(f, 0, 2, 0)}}, {{1, 1}, {1, 1}}), Error);
}

TEST_CASE("scalar determinants agree with elimination") {
  PrimeField f;
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + uniform_below(rng, 5);
    std::vector<std::vector<FpForm>> m(n);
    std::vector<std::vector<int>> deg(n, std::vector<int>(n, 0));
    Matrix<PrimeField> s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        s(i, j) = f.random(rng);
        m[i].push_back(FpForm::constant(s(i, j)));
      }
    CHECK(poly_matrix_det(f, m, deg).coeffs()[0] == determinant(f, s));
  }
}

TEST_CASE("determinant of forms is alternating and evaluates pointwise") {
  PrimeField f;
  Rng rng(2);
  for (int t = 0; t < 10; ++t) {
    std::vector<std::vector<FpForm>> m(3);
    std::vector<std::vector<int>> deg(3, std::vector<int>(3, 1));
    for (auto& row : m)
      for (int j = 0; j < 3; ++j) row.push_back(FpForm::random(f, 1, rng));
    auto det = poly_matrix_det(f, m, deg);
    CHECK(det.degree() == 3);

    auto swapped = m;
    std::swap(swapped[0], swapped[2]);
    CHECK(poly_matrix_det(f, swapped, deg) == scale(f, f.neg(1), det));

    auto repeated = m;
    repeated[1] = repeated[0];
    CHECK(poly_matrix_det(f, repeated, deg).is_zero(f));

    auto p = random_point(f, rng);
    Matrix<PrimeField> values(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) values(i, j) = evaluate(f, m[i][j], p);
    CHECK(evaluate(f, det, p) == determinant(f, values));
  }
}
