#pragma once

#include "chutes/bigint.hpp"

#include <cstdint>
#include <optional>
#include <vector>

// Exact integer number theory shared by the other modules. Everything here is
// a pure function. Inputs that are out of range throw std::invalid_argument.
namespace chutes::arith {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;  // primes strictly increasing

  /// Product of prime^exponent; equals `value` for any factorization built here.
  std::uint64_t product() const;
};

/// Trial division up to sqrt(n). Intended for desk-scale n (well below 2^40).
Factorization factorize(std::uint64_t n);

std::uint64_t radical(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
bool is_squarefree(std::uint64_t n);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Least k >= 1 with e^k = 1 (mod d). Requires gcd(e, d) = 1.
std::uint64_t mult_order(std::uint64_t e, std::uint64_t d);

/// base^exp if it does not exceed `limit`, otherwise empty.
std::optional<u128> checked_pow(u128 base, unsigned exp, u128 limit = ~u128{0});

/// floor(n^(1/e)) computed exactly. Requires e >= 2.
std::uint64_t integer_root(std::uint64_t n, unsigned e);
u128 integer_root(u128 n, unsigned e);
BigInt integer_root(const BigInt& n, unsigned e);

/// m with m^e == n, if such an m exists. Requires e >= 2.
std::optional<std::uint64_t> exact_eth_root(std::uint64_t n, unsigned e);
std::optional<u128> exact_eth_root(u128 n, unsigned e);
std::optional<BigInt> exact_eth_root(const BigInt& n, unsigned e);

}  // namespace chutes::arith
