#pragma once

#include <cstdint>
#include <vector>

namespace fgc {

using i64 = std::int64_t;

struct DivisorList {
  i64 n = 1;
  std::vector<i64> divisors;  // sorted ascending, contains 1 and n
};

/// All positive divisors of n, sorted ascending. Rejects n < 1.
DivisorList divisors(i64 n);

/// Euler's totient. Rejects n < 1.
i64 totient(i64 n);

/// gcd and lcm of two positive integers; gcd*lcm == a*b. Rejects zeros.
std::pair<i64, i64> gcd_lcm(i64 a, i64 b);

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);

/// Moebius function, in {-1, 0, 1}. Rejects n < 1.
int moebius(i64 n);

bool is_prime(i64 n);

/// (base^e) mod m with m >= 1, e >= 0.
i64 pow_mod(i64 base, i64 e, i64 m);

/// Multiplicative inverse mod m; requires gcd(a, m) == 1.
i64 inv_mod(i64 a, i64 m);

/// Prime factors of n without multiplicity, ascending.
std::vector<i64> prime_factors(i64 n);

}  // namespace fgc
