#include "grpverify/numeric.hpp"

namespace grpverify {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool prime_power(std::uint64_t q, std::uint64_t& p, unsigned& k) {
  if (q < 2) return false;
  std::uint64_t d = 2;
  while (q % d != 0) ++d;
  std::uint64_t rest = q;
  unsigned e = 0;
  while (rest % d == 0) {
    rest /= d;
    ++e;
  }
  if (rest != 1) return false;
  p = d;
  k = e;
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt ipow(const BigInt& base, unsigned exponent) {
  BigInt r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace grpverify
