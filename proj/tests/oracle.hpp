#pragma once

// Slow reference computations used to cross-check the library. Nothing here
// calls the table-driven field arithmetic: elements are coefficient vectors
// multiplied by schoolbook polynomial arithmetic.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Poly = std::vector<std::uint32_t>;  // coefficients, constant term first

inline bool divides(std::uint32_t p, const Poly& d, Poly n) {
  // Long division of n by monic d over GF(p).
  const std::size_t dd = d.size() - 1;
  while (n.size() > dd) {
    const std::uint32_t lead = n.back();
    const std::size_t shift = n.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i) n[shift + i] = (n[shift + i] + p * p - lead * d[i] % p) % p;
    n.pop_back();
  }
  return std::all_of(n.begin(), n.end(), [](std::uint32_t c) { return c == 0; });
}

// Monic polynomials of degree k, ordered by (c0, c1, ..., c_{k-1}) lexicographically.
inline std::vector<Poly> monic_of_degree(std::uint32_t p, std::uint32_t k) {
  std::vector<Poly> out;
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < k; ++i) total *= p;
  for (std::uint64_t n = 0; n < total; ++n) {
    Poly f(k + 1, 0);
    f[k] = 1;
    std::uint64_t x = n;
    for (std::uint32_t i = k; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    out.push_back(f);
  }
  return out;
}

inline bool irreducible(std::uint32_t p, const Poly& f) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t k = 1; 2 * k <= m; ++k)
    for (const Poly& d : monic_of_degree(p, k))
      if (divides(p, d, f)) return false;
  return true;
}

// Lexicographically smallest monic irreducible of degree m, constant term compared first.
inline Poly smallest_irreducible(std::uint32_t p, std::uint32_t m) {
  if (m == 1) return {0, 1};
  for (const Poly& f : monic_of_degree(p, m))
    if (irreducible(p, f)) return f;
  return {};
}

// GF(p^m) by coefficient vectors; element codes as in the library (base p, low degree first).
struct SlowField {
  std::uint32_t p, m, q;
  Poly modulus;

  SlowField(std::uint32_t p_, std::uint32_t m_) : p(p_), m(m_), q(1), modulus(smallest_irreducible(p_, m_)) {
    for (std::uint32_t i = 0; i < m; ++i) q *= p;
  }

  Poly unpack(std::uint32_t c) const {
    Poly v(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      v[i] = c % p;
      c /= p;
    }
    return v;
  }
  std::uint32_t pack(const Poly& v) const {
    std::uint32_t c = 0;
    for (std::uint32_t i = m; i-- > 0;) c = c * p + v[i];
    return c;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    Poly x = unpack(a), y = unpack(b);
    for (std::uint32_t i = 0; i < m; ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }
  std::uint32_t neg(std::uint32_t a) const {
    Poly x = unpack(a);
    for (auto& c : x) c = (p - c) % p;
    return pack(x);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const Poly x = unpack(a), y = unpack(b);
    Poly prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    // Reduce with the monic modulus.
    for (std::size_t d = prod.size(); d-- > m;) {
      const std::uint32_t lead = prod[d];
      if (lead == 0) continue;
      for (std::uint32_t i = 0; i <= m; ++i)
        prod[d - m + i] = (prod[d - m + i] + p * p - lead * modulus[i] % p) % p;
    }
    prod.resize(m);
    return pack(prod);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t b = 1; b < q; ++b)
      if (mul(a, b) == 1) return b;
    return 0;
  }
  std::uint32_t from_int(long long n) const {
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
  }
  std::uint64_t order(std::uint32_t a) const {
    std::uint32_t x = a;
    std::uint64_t k = 1;
    while (x != 1) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }
  std::uint32_t smallest_generator() const {
    for (std::uint32_t a = 1; a < q; ++a)
      if (order(a) == q - 1) return a;
    return 0;
  }
  // Absolute trace x + x^p + ... + x^(p^(m-1)), which lies in the prime field.
  std::uint32_t trace(std::uint32_t x) const {
    std::uint32_t s = 0, y = x;
    for (std::uint32_t i = 0; i < m; ++i) {
      s = add(s, y);
      y = pow(y, p);
    }
    return s;
  }
  bool is_kth_power(std::uint32_t x, std::uint32_t k) const {
    for (std::uint32_t y = 1; y < q; ++y)
      if (pow(y, k) == x) return true;
    return false;
  }
};

}  // namespace oracle
