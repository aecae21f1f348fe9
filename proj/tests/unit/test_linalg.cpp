#include "monores/field.hpp"
#include "monores/linalg.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <random>

using monores::PrimeField;
using monores::RationalField;

TEST_CASE("prime field arithmetic") {
  const PrimeField f(7);
  CHECK(f.mul(3, f.inv(3)) == 1);
  CHECK(f.from(mpq_class(-1)) == 6);
  CHECK(f.from(mpq_class(1, 2)) == 4);
  CHECK_THROWS_AS(monores::validate_characteristic(4), monores::InputError);
  CHECK_NOTHROW(monores::validate_characteristic(0));
  CHECK_NOTHROW(monores::validate_characteristic(32003));
}

TEST_CASE("rank and kernel agree with a dense elimination") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-2, 2);
  const RationalField field;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 6;
    oracle::Matrix dense(rows, std::vector<mpq_class>(cols, 0));
    std::vector<monores::SparseVector<RationalField>> columns(cols);
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t r = 0; r < rows; ++r) {
        const int v = entry(rng) * (entry(rng) == 0 ? 0 : 1);
        dense[r][c] = v;
        if (v)
          columns[c].emplace_back(r, mpq_class(v));
      }
    const std::size_t rank = oracle::dense_rank(dense);
    CHECK(monores::rank_of_columns(field, rows, columns) == rank);
    const auto kernel = monores::kernel_of_columns(field, rows, columns);
    CHECK(kernel.size() == cols - rank);
    for (const auto& k : kernel) {
      std::vector<mpq_class> image(rows, 0);
      for (const auto& [c, v] : k)
        for (std::size_t r = 0; r < rows; ++r)
          image[r] += dense[r][c] * v;
      for (const auto& v : image)
        CHECK(v == 0);
    }
  }
}

TEST_CASE("affine solver") {
  const RationalField f;
  // x + y = 3, x - y = 1
  auto sol = monores::solve_affine(f, {{1, 1}, {1, -1}}, {3, 1}, 2);
  REQUIRE(sol);
  CHECK((*sol)[0] == 2);
  CHECK((*sol)[1] == 1);
  CHECK_FALSE(monores::solve_affine(f, {{1, 1}, {2, 2}}, {1, 3}, 2));
}
