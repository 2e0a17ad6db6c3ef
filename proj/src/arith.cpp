#include "fgc/arith.hpp"

#include <algorithm>

#include "fgc/error.hpp"

namespace fgc {

namespace {

void require_positive(i64 n, const char* who) {
  if (n < 1) fail(ErrorCode::InvalidArgument, std::string(who) + ": argument must be >= 1");
}

}  // namespace

DivisorList divisors(i64 n) {
  require_positive(n, "divisors");
  DivisorList out;
  out.n = n;
  std::vector<i64> high;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.divisors.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  out.divisors.insert(out.divisors.end(), high.rbegin(), high.rend());
  return out;
}

i64 totient(i64 n) {
  require_positive(n, "totient");
  i64 result = n;
  i64 m = n;
  for (i64 p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    result -= result / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) result -= result / m;
  return result;
}

i64 gcd(i64 a, i64 b) {
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 lcm(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  i64 g = gcd(a, b);
  i64 q = a / g;
  i64 out;
  if (__builtin_mul_overflow(q, b, &out))
    fail(ErrorCode::Internal, "lcm: 64-bit overflow");
  return out;
}

std::pair<i64, i64> gcd_lcm(i64 a, i64 b) {
  require_positive(a, "gcd_lcm");
  require_positive(b, "gcd_lcm");
  return {gcd(a, b), lcm(a, b)};
}

int moebius(i64 n) {
  require_positive(n, "moebius");
  int sign = 1;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;  // squareful
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

i64 pow_mod(i64 base, i64 e, i64 m) {
  require_positive(m, "pow_mod");
  if (e < 0) fail(ErrorCode::InvalidArgument, "pow_mod: negative exponent");
  base %= m;
  if (base < 0) base += m;
  i64 r = 1 % m;
  while (e > 0) {
    if (e & 1) r = (__int128)r * base % m;
    base = (__int128)base * base % m;
    e >>= 1;
  }
  return r;
}

i64 inv_mod(i64 a, i64 m) {
  require_positive(m, "inv_mod");
  a %= m;
  if (a < 0) a += m;
  i64 t = 0, new_t = 1, r = m, new_r = a;
  while (new_r != 0) {
    i64 q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (r != 1 && m != 1)
    fail(ErrorCode::InvalidArgument, "inv_mod: argument not invertible");
  return ((t % m) + m) % m;
}

std::vector<i64> prime_factors(i64 n) {
  require_positive(n, "prime_factors");
  std::vector<i64> out;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace fgc
