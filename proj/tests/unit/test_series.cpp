#include "monores/series.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace monores;

TEST_CASE("products and inverses") {
  const Multidegree yb{2, 2};
  auto a = BigradedSeries::one(4, yb);
  a.add(1, Multidegree{1, 0}, 1);
  auto b = BigradedSeries::one(4, yb);
  b.add(1, Multidegree{0, 1}, 1);
  CHECK(series_mul(a, b).same_terms(BigradedSeries::linear_factors(4, yb)));
  CHECK(series_mul(a, b).to_string() == "1 + t*(y1 + y2) + t^2*y1*y2");

  auto g = BigradedSeries::one(6, Multidegree{6});
  g.add(2, Multidegree{2}, -1);
  const auto inv = series_inverse(g);
  CHECK(inv.to_string() == "1 + t^2*y1^2 + t^4*y1^4 + t^6*y1^6");
  CHECK(series_mul(g, inv).same_terms(BigradedSeries::one(6, Multidegree{6})));

  auto bad = BigradedSeries(3, Multidegree{1});
  bad.add(0, Multidegree{0}, 2);
  CHECK_THROWS_AS(series_inverse(bad), InputError);
}

TEST_CASE("random inverses") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3), ex(0, 2), td(1, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const Multidegree yb{2, 2};
    auto a = BigradedSeries::one(5, yb);
    for (int k = 0; k < 4; ++k)
      a.add(td(rng), Multidegree{ex(rng), ex(rng)}, coef(rng));
    CHECK(series_mul(a, series_inverse(a)).same_terms(BigradedSeries::one(5, yb)));
  }
}

TEST_CASE("deviations of k[x]/(x^2) and round trips") {
  // (1 + ty) / (1 - t^2 y^2)
  const int nmax = 7;
  const Multidegree yb{nmax};
  auto num = BigradedSeries::one(nmax, yb);
  num.add(1, Multidegree{1}, 1);
  auto den = BigradedSeries::one(nmax, yb);
  den.add(2, Multidegree{2}, -1);
  const auto p = series_divide(num, den);
  const auto table = deviations(p, nmax);
  for (const auto& [key, e] : table) {
    if (key.n == 1 && key.j == Multidegree{1})
      CHECK(e == 1);
    else if (key.n == 2 && key.j == Multidegree{2})
      CHECK(e == 1);
    else
      CHECK(e == 0);
  }
  CHECK(series_from_deviations(table, nmax, yb).same_terms(p));
  CHECK(series_from_deviations({}, 3, yb).same_terms(BigradedSeries::one(3, yb)));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-2, 2), ex(0, 2), td(1, 5);
  for (int trial = 0; trial < 20; ++trial) {
    const Multidegree b{2, 2};
    auto q = BigradedSeries::one(5, b);
    for (int k = 0; k < 5; ++k)
      q.add(td(rng), Multidegree{ex(rng), ex(rng)}, coef(rng));
    CHECK(series_from_deviations(deviations(q, 5), 5, b).same_terms(q));
  }
}

TEST_CASE("binomial factors match repeated multiplication") {
  const Multidegree yb{3, 3};
  auto base = BigradedSeries::one(6, yb);
  base.add(2, Multidegree{1, 1}, -1);
  auto cube = series_mul(series_mul(base, base), base);
  CHECK(binomial_factor(2, Multidegree{1, 1}, -1, 3, 6, yb).same_terms(cube));
  CHECK(binomial_factor(2, Multidegree{1, 1}, -1, -3, 6, yb).same_terms(series_inverse(cube)));
}

TEST_CASE("candidate terms and lcm verification") {
  const auto I = MonomialIdeal::minimalize({Multidegree{2, 0, 0}, Multidegree{0, 2, 1}}, 3, {});
  const auto c = candidate_terms(I);
  CHECK(c == std::set<CandidateTerm>{{-1, 2, Multidegree{2, 0, 0}}, {-1, 2, Multidegree{0, 2, 1}}, {1, 4, Multidegree{2, 2, 1}}});
  const auto Ip = MonomialIdeal::minimalize({Multidegree{1, 2, 0}, Multidegree{1, 0, 2}}, 3, {});
  CHECK(candidate_terms(Ip).count({-1, 3, Multidegree{1, 2, 2}}) == 1);

  auto q = BigradedSeries::one(4, Multidegree{2, 2, 1});
  q.add(2, Multidegree{2, 0, 0}, -1);
  CHECK(verify_lcm_coefficients(q, I));
  q.add(3, Multidegree{1, 0, 0}, 1);
  CHECK_FALSE(verify_lcm_coefficients(q, I));
  CHECK(verify_lcm_coefficients(BigradedSeries::one(4, Multidegree{2, 2, 1}), I));
}
