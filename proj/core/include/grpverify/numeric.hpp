#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace grpverify {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime(std::uint64_t n);

// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

// If q = p^k with p prime and k >= 1, stores p and k and returns true.
bool prime_power(std::uint64_t q, std::uint64_t& p, unsigned& k);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

BigInt ipow(const BigInt& base, unsigned exponent);

// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

}  // namespace grpverify
