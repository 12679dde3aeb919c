#include "twc/gf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace twc {
namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients over GF(p), constant term first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw std::logic_error("no inverse modulo p");
}

// Remainder of f modulo g over GF(p); g nonzero.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint32_t c = (f.back() * lead_inv) % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = (f[shift + i] + p - (c * g[i]) % p) % p;
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), mod, p);
}

Poly decode(std::uint32_t code, std::uint32_t p) {
  Poly f;
  while (code != 0) {
    f.push_back(code % p);
    code /= p;
  }
  return f;
}

std::uint32_t encode(const Poly& f, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = f.size(); i-- > 0;) code = code * p + f[i];
  return code;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits
// of n with the constant term as the most significant digit.
Poly monic_from_rank(std::uint32_t n, std::uint32_t d, std::uint32_t p) {
  Poly f(d + 1, 0);
  f[d] = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    f[d - 1 - i] = n % p;
    n /= p;
  }
  return f;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t n = 0; n < count; ++n)
      if (poly_mod(f, monic_from_rank(n, d, p), p).empty()) return false;
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = 2; r * r <= n; ++r) {
    if (n % r != 0) continue;
    out.push_back(r);
    while (n % r == 0) n /= r;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t digit_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  while (a != 0 || b != 0) {
    out += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

std::uint32_t digit_neg(std::uint32_t a, std::uint32_t p) {
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  while (a != 0) {
    out += ((p - a % p) % p) * place;
    a /= p;
    place *= p;
  }
  return out;
}

}  // namespace

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t q) {
  if (q < 2) return std::nullopt;
  std::uint32_t p = 0;
  for (std::uint32_t r = 2; r * r <= q; ++r) {
    if (q % r == 0) {
      p = r;
      break;
    }
  }
  if (p == 0) return std::pair{q, 1u};
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::pair{p, m};
}

Field Field::make(std::uint32_t q, std::uint32_t generator_rank) {
  if (q < 2 || q > (1u << 16)) throw std::invalid_argument("field order " + std::to_string(q) + " out of range [2, 65536]");
  const auto pm = prime_power(q);
  if (!pm) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");

  Field f;
  f.p_ = pm->first;
  f.m_ = pm->second;
  f.q_ = q;
  const std::uint32_t p = f.p_;

  for (std::uint32_t n = 0;; ++n) {
    Poly cand = monic_from_rank(n, f.m_, p);
    if (irreducible(cand, p)) {
      f.modulus_ = std::move(cand);
      break;
    }
  }

  // Smallest-code generators of the multiplicative group, in order.
  const auto factors = prime_factors(q - 1);
  auto pow_poly = [&](Poly base, std::uint32_t e) {
    Poly acc{1};
    while (e != 0) {
      if (e & 1u) acc = poly_mulmod(acc, base, f.modulus_, p);
      base = poly_mulmod(base, base, f.modulus_, p);
      e >>= 1u;
    }
    return acc;
  };
  std::uint32_t seen = 0;
  bool found = false;
  for (std::uint32_t code = 1; code < q && !found; ++code) {
    const Poly g = decode(code, p);
    bool generator = true;
    for (std::uint32_t r : factors) {
      if (encode(pow_poly(g, (q - 1) / r), p) == 1) {
        generator = false;
        break;
      }
    }
    if (!generator) continue;
    if (seen++ == generator_rank) {
      f.primitive_ = Elem{code};
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("generator rank " + std::to_string(generator_rank) + " exceeds the number of generators");

  const std::uint32_t n = q - 1;
  f.exp_.assign(2 * static_cast<std::size_t>(n), 0);
  f.log_.assign(q, -1);
  Poly cur{1};
  const Poly g = decode(f.primitive_.code, p);
  for (std::uint32_t k = 0; k < n; ++k) {
    const std::uint32_t code = encode(cur, p);
    f.exp_[k] = code;
    f.exp_[k + n] = code;
    f.log_[code] = static_cast<std::int32_t>(k);
    cur = poly_mulmod(cur, g, f.modulus_, p);
  }

  f.neg_.resize(q);
  for (std::uint32_t c = 0; c < q; ++c) f.neg_[c] = digit_neg(c, p);
  if (p != 2) {
    f.zech_.resize(n);
    for (std::uint32_t k = 0; k < n; ++k) {
      const std::uint32_t s = digit_add(1, f.exp_[k], p);
      f.zech_[k] = s == 0 ? -1 : f.log_[s];
    }
  }

  f.trace_.resize(q);
  for (std::uint32_t c = 0; c < q; ++c) {
    Elem x{c};
    Elem acc = zero();
    for (std::uint32_t i = 0; i < f.m_; ++i) {
      acc = f.add(acc, x);
      x = f.pow(x, p);
    }
    if (acc.code >= p) throw std::logic_error("trace left the prime field");
    f.trace_[c] = acc.code;
  }
  return f;
}

Elem Field::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::at(std::uint32_t code) const {
  if (code >= q_) throw std::out_of_range("element code " + std::to_string(code) + " not in GF(" + std::to_string(q_) + ")");
  return Elem{code};
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero");
  const std::int32_t l = log_[a.code];
  return Elem{exp_[l == 0 ? 0 : static_cast<std::size_t>(static_cast<std::int32_t>(q_ - 1) - l)]};
}

Elem Field::pow(Elem a, long long e) const {
  if (a.code == 0) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return e == 0 ? one() : zero();
  }
  const long long n = q_ - 1;
  long long k = (static_cast<long long>(log_[a.code]) * (e % n)) % n;
  if (k < 0) k += n;
  return Elem{exp_[static_cast<std::size_t>(k)]};
}

Elem Field::exp(long long k) const {
  const long long n = q_ - 1;
  long long r = k % n;
  if (r < 0) r += n;
  return Elem{exp_[static_cast<std::size_t>(r)]};
}

std::uint32_t Field::dlog(Elem x) const {
  if (x.code == 0) throw std::domain_error("discrete logarithm of zero");
  return static_cast<std::uint32_t>(log_[x.code]);
}

bool Field::is_cube(Elem x) const { return is_power(x, 3); }

bool Field::is_power(Elem x, std::uint32_t k) const {
  const std::uint32_t g = std::gcd(k, q_ - 1);
  return dlog(x) % g == 0;
}

std::vector<Elem> Field::cube_roots(Elem c) const {
  const std::uint32_t l = dlog(c);
  const std::uint32_t n = q_ - 1;
  if (n % 3 != 0) {
    // 3r + r'(q-1) = 1
    std::uint32_t r = 0;
    while ((3ull * r) % n != 1 % n) ++r;
    return {pow(c, r)};
  }
  if (l % 3 != 0) return {};
  std::vector<Elem> out;
  for (std::uint32_t k = 0; k < 3; ++k) out.push_back(exp(static_cast<long long>(l / 3 + k * (n / 3))));
  std::sort(out.begin(), out.end());
  return out;
}

int Field::eta(Elem x) const {
  if (p_ == 2) throw std::domain_error("quadratic character is degenerate in even characteristic");
  if (x.code == 0) return 0;
  return dlog(x) % 2 == 0 ? 1 : -1;
}

std::vector<Elem> Field::sqrt(Elem x) const {
  if (p_ == 2) throw std::domain_error("sqrt is defined here for odd q only");
  if (x.code == 0) return {zero()};
  const std::uint32_t l = dlog(x);
  if (l % 2 != 0) return {};
  const Elem r = exp(l / 2);
  std::vector<Elem> out{r, neg(r)};
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out[c] = Elem{c};
  return out;
}

std::vector<Elem> Field::nonzero() const {
  std::vector<Elem> out(q_ - 1);
  for (std::uint32_t c = 1; c < q_; ++c) out[c - 1] = Elem{c};
  return out;
}

}  // namespace twc
