#include <doctest.h>

#include "llab/ideal.hpp"
#include "oracle.hpp"

using namespace llab;

namespace {

using FpForm = Form<PrimeField>;
using FpPoint = ProjPoint<PrimeField>;
using FpIdeal = IdealHandle<PrimeField>;

const PrimeField kField;

std::vector<FpPoint> points_of(std::initializer_list<std::array<long, 3>> raw) {
  std::vector<FpPoint> out;
  for (const auto& p : raw) out.push_back(FpPoint::from_ints(kField, p[0], p[1], p[2]));
  return out;
}

std::vector<FpPoint> six_on_conic() {
  return points_of({{1, 1, 1}, {0, 0, 1}, {1, 0, 0}, {4, 2, 1}, {9, 3, 1}, {1, -1, 1}});
}

std::vector<FpPoint> random_points(std::size_t n, Rng& rng) {
  std::set<FpPoint> seen;
  std::vector<FpPoint> out;
  while (out.size() < n) {
    auto p = FpPoint::make(kField, kField.random(rng), kField.random(rng), 1);
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

std::vector<std::array<std::int64_t, 3>> raw(const std::vector<FpPoint>& pts) {
  std::vector<std::array<std::int64_t, 3>> out;
  for (const auto& p : pts) out.push_back({p.coords()[0], p.coords()[1], p.coords()[2]});
  return out;
}

FpForm random_member(const FpIdeal& ideal, int d, Rng& rng) {
  const auto& w = ideal.piece_space(d);
  FpForm out(d);
  for (std::size_t i = 0; i < w.dim(); ++i) {
    const auto c = kField.random(rng);
    auto row = w.basis().row(i);
    for (std::size_t j = 0; j < row.size(); ++j) out.coeffs()[j] = kField.add(out.coeffs()[j], kField.mul(c, row[j]));
  }
  return out;
}

FpForm mono(int x, int y, int z) { return FpForm::monomial(kField, {x, y, z}); }

}  // namespace

TEST_CASE("pieces of point ideals") {
  auto empty = FpIdeal::from_points(kField, {});
  CHECK(empty.h0(3) == 10);

  Rng rng(1);
  auto six = random_points(6, rng);
  auto general = FpIdeal::from_points(kField, six);
  CHECK(general.h0(2) == 0);
  CHECK(general.h0(3) == 4);
  CHECK(oracle::h0_points(raw(six), 3, kField.characteristic()) == 4);

  auto conic = FpIdeal::from_points(kField, six_on_conic());
  CHECK(conic.h0(2) == 1);
  CHECK(conic.piece_space(2).contains(kField, sub(kField, mono(1, 0, 1), mono(0, 2, 0)).coeffs()));

  CHECK_THROWS_AS(FpIdeal::from_points(kField, points_of({{1, 0, 0}, {2, 0, 0}})), Error);
}

TEST_CASE("h0 of random point sets matches the rank oracle") {
  Rng rng(2);
  for (std::size_t n = 1; n <= 8; ++n) {
    auto pts = random_points(n, rng);
    auto ideal = FpIdeal::from_points(kField, pts);
    for (int d = 0; d <= 4; ++d)
      CHECK(static_cast<std::int64_t>(ideal.h0(d)) == oracle::h0_points(raw(pts), d, kField.characteristic()));
  }
}

TEST_CASE("triangular numbers of general points impose independent conditions") {
  Rng rng(3);
  for (int r = 2; r <= 6; ++r) {
    auto ideal = FpIdeal::from_points(kField, random_points(static_cast<std::size_t>(r * (r + 1) / 2), rng));
    CHECK(ideal.h0(r - 1) == 0);
    auto t = betti_table(ideal, r + 2);
    CHECK(t.beta0 == std::map<int, int>{{r, r + 1}});
    CHECK(t.beta1 == std::map<int, int>{{r + 1, r}});
  }
}

TEST_CASE("ten points on a cubic") {
  Rng rng(4);
  // the cubic x^3 + y^3 - z^3 has a point on every line z = 1, x = a for
  // every a for which 1 - a^3 is a cube; collect ten of them
  std::vector<FpPoint> pts;
  for (long a = 2; pts.size() < 10; ++a) {
    const auto rhs = kField.sub(1, kField.pow(kField.from_int(a), 3));
    for (std::uint32_t b = 0; b < kField.characteristic(); ++b)
      if (kField.pow(b, 3) == rhs) {
        pts.push_back(FpPoint::from_ints(kField, a, b, 1));
        break;
      }
  }
  auto ideal = FpIdeal::from_points(kField, pts);
  CHECK(ideal.h0(3) == 1);
  CHECK(FpIdeal::from_points(kField, random_points(10, rng)).h0(3) == 0);
}

TEST_CASE("hilbert profiles") {
  auto conic = FpIdeal::from_points(kField, six_on_conic());
  auto p = hilbert_profile(conic, 6);
  CHECK(p.codims == std::vector<long>{1, 3, 5, 6, 6, 6, 6});
  CHECK(p.stable_value == 6);

  auto empty = FpIdeal::from_points(kField, {});
  auto e = hilbert_profile(empty, 4);
  CHECK(e.codims == std::vector<long>(5, 0));

  Rng rng(5);
  auto a = FpForm::random(kField, 4, rng), b = FpForm::random(kField, 4, rng);
  auto ci = FpIdeal::from_generators(kField, {a, b});
  CHECK(hilbert_profile(ci, 10).stable_value == 16);

  for (std::size_t n : {1u, 5u, 9u}) {
    auto pts = FpIdeal::from_points(kField, random_points(n, rng));
    CHECK(hilbert_profile(pts, static_cast<int>(n) + 2).stable_value == static_cast<long>(n));
  }
}

TEST_CASE("minimal generators") {
  auto conic = FpIdeal::from_points(kField, six_on_conic());
  auto gens = minimal_generators(conic, 4);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].degree == 2);
  CHECK(gens[1].degree == 3);

  auto unit = minimal_generators(FpIdeal::from_points(kField, {}), 3);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].degree == 0);

  Rng rng(6);
  for (int r = 2; r <= 4; ++r) {
    auto g = minimal_generators(FpIdeal::from_points(kField, random_points(static_cast<std::size_t>(r * (r + 1) / 2), rng)), r + 2);
    CHECK(g.size() == static_cast<std::size_t>(r + 1));
    for (const auto& x : g) CHECK(x.degree == r);
  }
}

TEST_CASE("betti tables") {
  Rng rng(7);
  auto four = FpIdeal::from_points(kField, random_points(4, rng));
  auto t4 = betti_table(four, 5);
  CHECK(t4.beta0 == std::map<int, int>{{2, 2}});
  CHECK(t4.beta1 == std::map<int, int>{{4, 1}});

  auto conic = betti_table(FpIdeal::from_points(kField, six_on_conic()), 6);
  CHECK(conic.beta0 == std::map<int, int>{{2, 1}, {3, 1}});
  CHECK(conic.beta1 == std::map<int, int>{{5, 1}});

  auto special = FpIdeal::from_points(kField, points_of({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
  auto ts = betti_table(special, 6);
  CHECK(ts.beta0 == std::map<int, int>{{2, 2}, {3, 1}});
  CHECK(ts.beta1 == std::map<int, int>{{3, 1}, {4, 1}});
  CHECK(to_string(ts) == "beta0={2:2, 3:1} beta1={3:1, 4:1}");
  CHECK_FALSE(mu_surjective(special, 2));
  CHECK(mu_surjective(four, 2));

  for (int r = 1; r <= 3; ++r) {
    auto ideal = FpIdeal::from_points(kField, random_points(static_cast<std::size_t>(2 * r * (r + 1)), rng));
    auto t = betti_table(ideal, 2 * r + 3);
    CHECK(t.beta0 == std::map<int, int>{{2 * r, r + 1}});
    CHECK(t.beta1 == std::map<int, int>{{2 * r + 2, r}});
  }
}

TEST_CASE("Hilbert-Burch rank identity on random point sets") {
  Rng rng(8);
  for (int t = 0; t < 15; ++t) {
    const auto n = 1 + uniform_below(rng, 12);
    auto ideal = FpIdeal::from_points(kField, random_points(n, rng));
    auto table = betti_table(ideal, static_cast<int>(n) + 2);
    CHECK(table.total0() - table.total1() == 1);
  }
}

TEST_CASE("complete intersection test") {
  CHECK_FALSE(is_complete_intersection(kField, mono(2, 0, 0), mono(1, 1, 0)));
  CHECK(is_complete_intersection(kField, mono(2, 0, 0), mono(0, 2, 0)));
  CHECK_THROWS_AS(is_complete_intersection(kField, mono(2, 0, 0), mono(0, 1, 0)), Error);

  Rng rng(9);
  auto z = FpIdeal::from_points(kField, random_points(6, rng));
  CHECK(is_complete_intersection(kField, random_member(z, 4, rng), random_member(z, 4, rng)));
}

TEST_CASE("ideal quotients") {
  Rng rng(10);
  auto z = FpIdeal::from_points(kField, six_on_conic());
  auto f = random_member(z, 4, rng), g = random_member(z, 4, rng);
  REQUIRE(is_complete_intersection(kField, f, g));
  auto j = FpIdeal::from_generators(kField, {f, g});

  auto unit = FpIdeal::from_points(kField, {});
  for (int d = 0; d <= 5; ++d) CHECK(ideal_quotient_piece(j, unit, d) == j.piece_space(d));

  std::map<int, Subspace<PrimeField>> pieces;
  for (int d = 0; d <= 7; ++d) {
    pieces.emplace(d, ideal_quotient_piece(j, z, d));
    CHECK(is_subspace_of(kField, j.piece_space(d), pieces.at(d)));
  }
  CHECK(pieces.at(3).dim() == 1);
  auto residual = FpIdeal::from_pieces(kField, pieces);
  CHECK(hilbert_profile(residual, 7).stable_value == 10);

  // liaison is an involution
  for (int d = 0; d <= 6; ++d) CHECK(ideal_quotient_piece(j, residual, d) == z.piece_space(d));
}

TEST_CASE("stored pieces are validated") {
  std::map<int, Subspace<PrimeField>> bad;
  bad.emplace(1, Subspace<PrimeField>::full(kField, 3));
  bad.emplace(3, Subspace<PrimeField>::full(kField, 10));
  CHECK_THROWS_AS(FpIdeal::from_pieces(kField, bad), Error);

  std::map<int, Subspace<PrimeField>> not_closed;
  not_closed.emplace(1, Subspace<PrimeField>::full(kField, 3));
  not_closed.emplace(2, Subspace<PrimeField>::zero(6));
  CHECK_THROWS_AS(FpIdeal::from_pieces(kField, not_closed), Error);

  std::map<int, Subspace<PrimeField>> ok;
  ok.emplace(2, Subspace<PrimeField>::full(kField, 6));
  ok.emplace(3, Subspace<PrimeField>::full(kField, 10));
  auto h = FpIdeal::from_pieces(kField, ok);
  try {
    h.h0(5);
    FAIL("expected DegreeOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeOutOfRange);
  }
  CHECK_THROWS_AS(h.h0(1), Error);
  CHECK_THROWS_AS(FpIdeal::from_generators(kField, {}), Error);
  CHECK_THROWS_AS(FpIdeal::from_generators(kField, {FpForm(2)}), Error);
}
