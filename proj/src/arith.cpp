#include "chutes/arith.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace chutes {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

BigInt parse_bigint(std::string_view text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a non-negative decimal integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

}  // namespace chutes

namespace chutes::arith {

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": argument must be >= 1");
}

void require_root_exponent(unsigned e) {
  if (e < 2) throw std::invalid_argument("root exponent must be >= 2");
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

unsigned bit_width(u128 n) {
  unsigned bits = 0;
  while (n != 0) {
    ++bits;
    n >>= 1;
  }
  return bits;
}

}  // namespace

std::uint64_t Factorization::product() const {
  std::uint64_t out = 1;
  for (const auto& f : factors) {
    for (unsigned i = 0; i < f.exponent; ++i) out *= f.prime;
  }
  return out;
}

Factorization factorize(std::uint64_t n) {
  require_positive(n, "factorize");
  Factorization out;
  out.value = n;
  auto strip = [&](std::uint64_t p) {
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k > 0) out.factors.push_back({p, k});
  };
  strip(2);
  for (std::uint64_t p = 3; p <= n / p; p += 2) strip(p);
  if (n > 1) out.factors.push_back({n, 1});
  return out;
}

std::uint64_t radical(std::uint64_t n) {
  std::uint64_t out = 1;
  for (const auto& f : factorize(n).factors) out *= f.prime;
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t out = n;
  for (const auto& f : factorize(n).factors) out = out / f.prime * (f.prime - 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& f : factorize(n).factors) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= f.exponent; ++k) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_squarefree(std::uint64_t n) {
  const auto f = factorize(n);
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 0) throw std::invalid_argument("pow_mod: modulus must be >= 1");
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kWitnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t mult_order(std::uint64_t e, std::uint64_t d) {
  require_positive(e, "mult_order");
  require_positive(d, "mult_order");
  if (gcd(e, d) != 1) {
    throw std::invalid_argument("mult_order: " + std::to_string(e) + " is not a unit modulo " +
                                std::to_string(d));
  }
  if (d == 1) return 1;
  // The order divides phi(d); the least divisor that works is the order.
  for (auto k : divisors(euler_phi(d))) {
    if (pow_mod(e, k, d) == 1) return k;
  }
  throw std::logic_error("mult_order: no divisor of phi(d) annihilates e");
}

std::optional<u128> checked_pow(u128 base, unsigned exp, u128 limit) {
  u128 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) return std::nullopt;
    result *= base;
  }
  if (result > limit) return std::nullopt;
  return result;
}

u128 integer_root(u128 n, unsigned e) {
  require_root_exponent(e);
  if (n < 2) return n;
  // Bisection on [lo, hi): lo^e <= n < hi^e.
  u128 lo = 1;
  u128 hi = u128{1} << (bit_width(n) / e + 1);
  while (hi - lo > 1) {
    const u128 mid = lo + (hi - lo) / 2;
    if (checked_pow(mid, e, n)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::uint64_t integer_root(std::uint64_t n, unsigned e) {
  return static_cast<std::uint64_t>(integer_root(static_cast<u128>(n), e));
}

BigInt integer_root(const BigInt& n, unsigned e) {
  require_root_exponent(e);
  if (n < 0) throw std::invalid_argument("integer_root: argument must be >= 0");
  if (n < 2) return n;
  // Integer Newton iteration from an overestimate decreases monotonically to
  // floor(n^(1/e)).
  const unsigned bits = static_cast<unsigned>(msb(n)) + 1;
  BigInt x = BigInt(1) << ((bits + e - 1) / e);
  for (;;) {
    BigInt y = ((e - 1) * x + n / pow(x, e - 1)) / e;
    if (y >= x) break;
    x = std::move(y);
  }
  if (pow(x, e) > n || pow(x + 1, e) <= n) {
    throw std::logic_error("integer_root: Newton iteration failed to bracket the root");
  }
  return x;
}

std::optional<u128> exact_eth_root(u128 n, unsigned e) {
  const u128 m = integer_root(n, e);
  if (checked_pow(m, e) == n) return m;
  return std::nullopt;
}

std::optional<std::uint64_t> exact_eth_root(std::uint64_t n, unsigned e) {
  if (auto m = exact_eth_root(static_cast<u128>(n), e)) return static_cast<std::uint64_t>(*m);
  return std::nullopt;
}

std::optional<BigInt> exact_eth_root(const BigInt& n, unsigned e) {
  // Residues mod 64 reject most non-squares without a root extraction.
  if (e == 2) {
    const auto low = static_cast<unsigned>(n & 63);
    constexpr std::uint64_t kSquaresMod64 = 0x0202021202030213ULL;
    if (((kSquaresMod64 >> low) & 1) == 0) return std::nullopt;
  }
  BigInt m = integer_root(n, e);
  if (pow(m, e) == n) return m;
  return std::nullopt;
}

}  // namespace chutes::arith
