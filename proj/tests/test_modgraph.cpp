#include "chutes/arith.hpp"
#include "chutes/modgraph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace chutes;
using namespace chutes::modgraph;

TEST_CASE("build_power_graph") {
  const auto g5 = build_power_graph(5, 2);
  CHECK(g5.image == std::vector<std::uint64_t>{0, 1, 4, 4, 1});

  const auto g7 = build_power_graph(7, 2);
  const auto labels = component_labels(g7);
  CHECK(labels[1] == labels[6]);
  CHECK(labels[2] == labels[3]);
  CHECK(labels[2] == labels[4]);
  CHECK(labels[2] == labels[5]);
  CHECK(labels[1] != labels[2]);

  const auto g54 = build_power_graph(5, 4);
  for (std::uint64_t x = 1; x < 5; ++x) CHECK(g54.image[x] == 1);

  CHECK_THROWS_AS(build_power_graph(9, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_power_graph(7, 1), std::invalid_argument);
}

TEST_CASE("component counts") {
  CHECK(count_components_traversal(build_power_graph(5, 2)) == 1);
  CHECK(count_components_traversal(build_power_graph(7, 2)) == 2);
  CHECK(count_components_traversal(build_power_graph(13, 2)) == 2);

  const auto f5 = count_components_formula(5, 2);
  CHECK(f5.rho == 1);
  CHECK(f5.count == 1);
  const auto f7 = count_components_formula(7, 2);
  CHECK(f7.rho == 3);
  CHECK(f7.count == 2);
  const auto f17 = count_components_formula(17, 4);
  CHECK(f17.rho == 1);
  CHECK(f17.count == 1);
  const auto f13 = count_components_formula(13, 2);
  CHECK(f13.rho == 3);
  CHECK(f13.count == 2);
  CHECK_THROWS_AS(count_components_formula(15, 2), std::invalid_argument);

  SUBCASE("formula, union-find and flooding agree; every term is integral") {
    for (auto p : oracle::primes_below(200)) {
      for (unsigned e = 2; e <= 10; ++e) {
        const auto f = count_components_formula(p, e);
        const auto traversal = count_components_traversal(build_power_graph(p, e));
        REQUIRE(f.count == traversal);
        REQUIRE(traversal == oracle::components_by_flooding(p, e));
        for (const auto& t : f.terms) REQUIRE(t.phi % t.order == 0);
        REQUIRE((f.count == 1) == (f.rho == 1));
        // rho is the largest divisor of p - 1 coprime to e.
        REQUIRE((p - 1) % f.rho == 0);
        REQUIRE(std::gcd(f.rho, std::uint64_t{e}) == 1);
        REQUIRE(std::gcd((p - 1) / f.rho, f.rho) == 1);
        if (is_star(p, e)) REQUIRE(f.count == 1);
      }
    }
  }

  SUBCASE("squaring is connected exactly for p - 1 a power of two") {
    for (auto p : oracle::primes_below(100'000)) {
      if (p == 2) continue;
      const bool power_of_two = ((p - 1) & (p - 2)) == 0;
      REQUIRE((count_components_formula(p, 2).count == 1) == power_of_two);
    }
  }
}

TEST_CASE("is_maximal") {
  CHECK(is_maximal({5, 2, 2}).maximal);
  CHECK(is_maximal({17, 4, 2}).maximal);
  const auto v = is_maximal({7, 2, 2});
  CHECK_FALSE(v.maximal);
  CHECK(v.reason == "radical(6)=6 ∤ 2");
  CHECK(is_maximal({5, 2, 10}).reason == "r ≡ 0 (mod d)");
  CHECK(is_maximal({6, 2, 2}).reason == "d = 6 is not prime");
  CHECK(is_maximal({2, 3, 3}).maximal);

  CHECK(is_maximal_bruteforce({5, 2, 2}));
  CHECK_FALSE(is_maximal_bruteforce({7, 2, 2}));
  CHECK_FALSE(is_maximal_bruteforce({5, 2, 10}));
  CHECK_FALSE(is_maximal_bruteforce({6, 2, 5}));
  CHECK_THROWS_AS(is_maximal_bruteforce({2003, 2, 2}), std::invalid_argument);

  SUBCASE("closed form and brute force agree, including composite d") {
    for (std::uint64_t d = 2; d < 120; ++d) {
      for (unsigned e = 2; e <= 10; ++e) {
        for (std::uint64_t r = 2; r <= d + 1; ++r) {
          REQUIRE(is_maximal({d, e, r}).maximal == is_maximal_bruteforce({d, e, r}));
        }
      }
    }
  }
}

TEST_CASE("stars, interesting exponents and prime classes") {
  CHECK(is_star(5, 4));
  CHECK_FALSE(is_star(5, 2));
  CHECK_FALSE(is_star(17, 4));
  CHECK(is_star(7, 12));
  CHECK_THROWS_AS(is_star(4, 2), std::invalid_argument);

  CHECK(exists_interesting_exponent(5) == std::uint64_t{2});
  CHECK_FALSE(exists_interesting_exponent(7).has_value());
  CHECK(exists_interesting_exponent(17) == std::uint64_t{8});
  CHECK(exists_interesting_exponent(19) == std::uint64_t{6});  // 18 = 2 * 3^2
  CHECK_THROWS_AS(exists_interesting_exponent(2), std::invalid_argument);
  CHECK_THROWS_AS(exists_interesting_exponent(21), std::invalid_argument);

  for (auto p : oracle::primes_below(10'000)) {
    if (p < 3) continue;
    const auto e = exists_interesting_exponent(p);
    REQUIRE(e.has_value() == !arith::is_squarefree(p - 1));
    if (e) {
      REQUIRE(*e >= 2);
      REQUIRE(*e <= p - 2);
      REQUIRE(is_maximal({p, static_cast<unsigned>(*e), 2}).maximal);
    }
  }

  const auto c5 = classify_prime(5);
  CHECK(c5.fermat_like_base == std::uint64_t{2});
  CHECK(c5.base_exponent == 2);
  CHECK_FALSE(c5.p_minus_1_squarefree);
  const auto c17 = classify_prime(17);
  CHECK(c17.fermat_like_base == std::uint64_t{2});
  CHECK(c17.base_exponent == 4);
  CHECK_FALSE(c17.p_minus_1_squarefree);
  const auto c11 = classify_prime(11);
  CHECK_FALSE(c11.fermat_like_base.has_value());
  CHECK(c11.p_minus_1_squarefree);
  const auto c3 = classify_prime(3);
  CHECK(c3.fermat_like_base == std::uint64_t{2});
  CHECK(c3.base_exponent == 1);
  CHECK(classify_prime(2).p_minus_1_squarefree);
  CHECK_THROWS_AS(classify_prime(9), std::invalid_argument);

  SUBCASE("a prime-power exponent connects exactly the primes q^k + 1") {
    for (auto p : oracle::primes_below(2000)) {
      if (p < 3) continue;
      const auto c = classify_prime(p);
      for (std::uint64_t q : {2, 3, 5, 7}) {
        for (unsigned n = 1; n <= 3; ++n) {
          std::uint64_t e = 1;
          for (unsigned i = 0; i < n; ++i) e *= q;
          const bool connected = count_components_formula(p, static_cast<unsigned>(e)).count == 1;
          REQUIRE(connected == (c.fermat_like_base == q));
        }
      }
    }
  }
}

TEST_CASE("analyze and DOT export") {
  const auto a = analyze(17, 4);
  CHECK(a.rho == 1);
  CHECK(a.formula_count == 1);
  CHECK(a.traversal_count == 1);
  CHECK(a.is_connected);
  CHECK_FALSE(a.is_star);

  const auto dot = to_dot(build_power_graph(7, 2));
  CHECK(dot.find("digraph power_map_7_2 {") == 0);
  CHECK(dot.find("  3 -> 2;\n") != std::string::npos);
  CHECK(dot.find("  6 -> 1;\n") != std::string::npos);
  CHECK(dot.find("comment=\"component 1\"") != std::string::npos);
  CHECK(dot.find("comment=\"component 2\"") == std::string::npos);
  CHECK(dot.back() == '\n');
}
