#pragma once

#include <cstdint>
#include <vector>

namespace grpverify {

// GF(p^k) with elements encoded as base-p integers: digit i is the
// coefficient of x^i in the residue polynomial.
class Field {
 public:
  using Elem = int;

  // Throws std::invalid_argument for non-prime p, k == 0, or p^k > 256.
  Field(int p, int k);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int size() const { return q_; }
  // Monic modulus, coefficients low degree first (length k + 1).
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem inv(Elem a) const;  // throws std::domain_error on zero
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, static_cast<std::uint64_t>(p_)); }
  int multiplicative_order(Elem a) const;
  Elem primitive_element() const { return primitive_; }

  // The element c·1 for an integer c (reduced mod p).
  Elem from_int(long long c) const;

 private:
  int p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  Elem primitive_ = 0;
};

}  // namespace grpverify
