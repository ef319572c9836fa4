#include "grpverify/gf.hpp"

#include <stdexcept>
#include <string>

#include "grpverify/numeric.hpp"

namespace grpverify {

namespace {

using Poly = std::vector<int>;  // low degree first, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits(int code, int p, int len) {
  Poly out(len);
  for (int i = 0; i < len; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

// Exhaustive trial division by every monic polynomial of degree 1..k/2.
bool irreducible(const Poly& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly g = digits(code, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(int p, int k) : p_(p), k_(k) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  }
  if (k < 1) throw std::invalid_argument("field degree must be at least 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > 256) throw std::invalid_argument("field size exceeds 256");
  }
  q_ = static_cast<int>(q);

  // Lexicographically smallest monic irreducible, low-degree coefficients
  // most significant: enumerate c0 slowest.
  bool found = false;
  for (int code = 0; code < q_ && !found; ++code) {
    Poly f(k + 1);
    int rest = code;
    for (int i = k - 1; i >= 0; --i) {
      f[i] = rest % p;
      rest /= p;
    }
    f[k] = 1;
    if (irreducible(f, p)) {
      modulus_ = f;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no irreducible polynomial found");

  add_.assign(static_cast<std::size_t>(q_) * q_, 0);
  mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  std::vector<int> pw(k_ + 1, 1);
  for (int i = 1; i <= k_; ++i) pw[i] = pw[i - 1] * p_;

  for (int a = 0; a < q_; ++a) {
    const Poly da = digits(a, p_, k_);
    int n = 0;
    for (int i = 0; i < k_; ++i) n += ((p_ - da[i]) % p_) * pw[i];
    neg_[a] = n;
    for (int b = 0; b < q_; ++b) {
      const Poly db = digits(b, p_, k_);
      int s = 0;
      for (int i = 0; i < k_; ++i) s += ((da[i] + db[i]) % p_) * pw[i];
      add_[a * q_ + b] = s;
      Poly prod(2 * k_, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      Poly r = poly_mod(prod, modulus_, p_);
      int m = 0;
      for (std::size_t i = 0; i < r.size(); ++i) m += r[i] * pw[i];
      mul_[a * q_ + b] = m;
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) inv_[a] = b;

  for (int a = 1; a < q_; ++a) {
    if (multiplicative_order(a) == q_ - 1) {
      primitive_ = a;
      break;
    }
  }
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  Elem b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

int Field::multiplicative_order(Elem a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  int n = 1;
  Elem x = a;
  while (x != 1) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

Field::Elem Field::from_int(long long c) const {
  const long long r = ((c % p_) + p_) % p_;
  return static_cast<Elem>(r);
}

}  // namespace grpverify
