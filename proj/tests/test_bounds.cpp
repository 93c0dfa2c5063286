#include "chutes/bounds.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace chutes;
using namespace chutes::bounds;

namespace {
const ProblemParams kPutnam{5, 2, 2};
}

TEST_CASE("belt_endpoint_bound") {
  const auto b150 = belt_endpoint_bound(150);
  CHECK(b150.class1 == std::uint64_t{91 * 91});
  CHECK(b150.class4 == std::uint64_t{183 * 183});

  // Per family: n = 1 mod 5 reaches 91, n = 4 only 59, n = 3 reaches 183, n = 2 only 47.
  for (const auto& fam : b150.families) {
    REQUIRE(fam.n.has_value());
    if (fam.n_residue == 1) CHECK(*fam.n == 91);
    if (fam.n_residue == 4) CHECK(*fam.n == 59);
    if (fam.n_residue == 3) CHECK(*fam.n == 183);
    if (fam.n_residue == 2) CHECK(*fam.n == 47);
    CHECK(*fam.steps < 150);
  }

  CHECK_THROWS_AS(belt_endpoint_bound(1), std::invalid_argument);

  SUBCASE("budget 150 against exhaustive enumeration up to 200^2") {
    const auto brute = oracle::enumerate_square_belts(150, 200);
    CHECK(brute.class1 == b150.class1);
    CHECK(brute.class4 == b150.class4);
  }

  SUBCASE("small budgets against enumeration up to 50^2") {
    // The shortest square-to-square belt is 4 -> 9 (two steps), so budget 2
    // admits none.
    const auto b2 = belt_endpoint_bound(2);
    CHECK_FALSE(b2.class1.has_value());
    CHECK_FALSE(b2.class4.has_value());
    for (std::uint64_t budget = 2; budget <= 40; ++budget) {
      const auto brute = oracle::enumerate_square_belts(budget, 50);
      const auto fast = belt_endpoint_bound(budget);
      REQUIRE(brute.class1 == fast.class1);
      REQUIRE(brute.class4 == fast.class4);
    }
  }

  SUBCASE("budgets up to 600 against enumeration") {
    for (std::uint64_t budget = 2; budget <= 600; budget += 7) {
      const auto brute = oracle::enumerate_square_belts(budget, 800);
      const auto fast = belt_endpoint_bound(budget);
      REQUIRE(brute.class1 == fast.class1);
      REQUIRE(brute.class4 == fast.class4);
    }
  }
}

TEST_CASE("howmax_bound") {
  CHECK(howmax_bound(75) == BigInt(188) * 188 * 188 * 188);
  CHECK(howmax_bound(75) == 1249198336);
  CHECK(howmax_bound(3) == 4096);
  CHECK(howmax_bound(1) == 4096);
  CHECK(howmax_bound(2) == 4096);
  // (5*4+1)^4 / 16 = 194481 / 16 = 12155.06..., rounded up.
  CHECK(howmax_bound(4) == 12156);

  // The square of the case-1 root bound (5l+1)/2 dominates the case-2 bound 20l+1.
  for (std::uint64_t l = 3; l <= 2000; ++l) {
    REQUIRE(BigInt(5 * l + 1) * (5 * l + 1) >= 4 * (20 * l + 1));
  }
}

TEST_CASE("path_max_bound") {
  CHECK(path_max_bound({2, 99, 75, kPutnam}).max == 1249198336);
  CHECK(path_max_bound({1'000'000, 2, 3, kPutnam}).max == BigInt(1'000'005) * 1'000'005);
  CHECK(path_max_bound({2, 1'000'000, 3, kPutnam}).max == BigInt(1'000'000) * 1'000'000);
  CHECK_THROWS_AS(path_max_bound({2, 7, 50, ProblemParams{17, 4, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(path_max_bound({2, 7, 0, kPutnam}), std::invalid_argument);
}

TEST_CASE("general_path_max_bound") {
  SUBCASE("(17,4,2), 50 half-steps") {
    const auto b = general_path_max_bound({2, 7, 50, ProblemParams{17, 4, 2}});
    const BigInt seven16 = pow(BigInt(7), 16);
    CHECK(seven16 == BigInt("33232930569601"));
    CHECK(b.belt_with_power == seven16);
    CHECK(b.max == seven16);
    CHECK(b.max >= pow(BigInt(2357), 4));
    // (17*50*8/7)^4 rounded up.
    CHECK(*b.belt_without_power == (pow(BigInt(6800), 4) + pow(BigInt(7), 4) - 1) / pow(BigInt(7), 4));
  }
  SUBCASE("(5,2) specializes coarser than the dedicated bound") {
    const auto b = general_path_max_bound({2, 99, 75, kPutnam});
    CHECK(*b.belt_without_power == 562500);
    CHECK(b.belt_with_power == pow(BigInt(189), 4));
    CHECK(b.max == pow(BigInt(189), 4));
    CHECK(b.max >= path_max_bound({2, 99, 75, kPutnam}).max);
  }
  CHECK(general_path_max_bound({1'000'000'000, 2, 1, kPutnam}).max ==
        BigInt(1'000'000'005) * 1'000'000'005);

  SUBCASE("branch 1 is at least the real-valued expression") {
    for (std::uint64_t d : {2, 3, 5, 7, 17, 257}) {
      for (unsigned e = 2; e <= 6; ++e) {
        for (std::uint64_t l = 1; l <= 200; l += 13) {
          const auto b = general_path_max_bound({2, 2, l, ProblemParams{d, e, 2}});
          const long double real =
              std::pow(1.0L + std::pow(static_cast<long double>(d) * l / e, 1.0L / (e - 1)),
                       static_cast<long double>(e) * e);
          REQUIRE(static_cast<long double>(b.belt_with_power) >= real * (1 - 1e-15L));
        }
      }
    }
  }
}

TEST_CASE("bounds are monotone and the general bound is never tighter") {
  for (std::uint64_t l = 1; l <= 60; ++l) {
    for (std::uint64_t x : {2, 3, 17, 99, 1000}) {
      for (std::uint64_t y : {2, 9, 99, 5000}) {
        const BoundQuery q{x, y, l, kPutnam};
        const auto p = path_max_bound(q).max;
        const auto g = general_path_max_bound(q).max;
        // the (5, 2) bound clamps l to 3, so it only sits below from there on
        if (l >= 3) REQUIRE(g >= p);
        REQUIRE(path_max_bound({x, y, l + 1, kPutnam}).max >= p);
        REQUIRE(path_max_bound({x + 1, y, l, kPutnam}).max >= p);
        REQUIRE(path_max_bound({x, y + 1, l, kPutnam}).max >= p);
        REQUIRE(general_path_max_bound({x, y, l + 1, kPutnam}).max >= g);
        REQUIRE(general_path_max_bound({x + 1, y, l, kPutnam}).max >= g);
        REQUIRE(general_path_max_bound({x, y + 1, l, kPutnam}).max >= g);
        const ProblemParams gen{17, 4, 2};
        const auto g17 = general_path_max_bound({x, y, l, gen}).max;
        REQUIRE(general_path_max_bound({x, y, l + 1, gen}).max >= g17);
      }
    }
  }
}

TEST_CASE("certified cutoffs for row budgets") {
  CHECK(half_length_for_rows(150) == 75);
  CHECK(half_length_for_rows(151) == 75);
  CHECK(half_length_for_rows(152) == 76);
  CHECK(half_length_for_rows(100) == 50);
  CHECK(half_length_for_rows(1) == 1);
  CHECK(certified_cutoff(kPutnam, 99, 150) == 1249198336);
  CHECK(certified_cutoff(ProblemParams{17, 4, 2}, 7, 100) == pow(BigInt(7), 16));
}
