#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace twc {

/// An element of a finite field, identified by its code in the owning Field.
///
/// The code of an element of GF(p^m) is its coefficient vector over GF(p)
/// (modulo the field's defining polynomial) read as a base-p integer, low
/// degree first. Code 0 is the zero element and code 1 is the unit; for prime
/// fields the code is the residue itself.
struct Elem {
  std::uint32_t code = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Returns (p, m) with q = p^m, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t q);

/// GF(q), q = p^m <= 2^16, with table-backed arithmetic.
///
/// Construction is deterministic: the defining polynomial is the
/// lexicographically smallest monic irreducible of degree m (coefficients
/// compared from the constant term upwards) and the primitive element is the
/// generator of smallest code. Multiplication uses exp/log tables; addition
/// is XOR for p = 2 and a Zech-logarithm lookup otherwise.
///
/// A Field is immutable after construction and safe to share across threads.
class Field {
 public:
  /// Builds GF(q). `generator_rank` selects the k-th smallest generator of
  /// the multiplicative group as the primitive element (0 = smallest).
  /// Throws std::invalid_argument if q is not a prime power in [2, 2^16].
  static Field make(std::uint32_t q, std::uint32_t generator_rank = 0);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  /// q mod 3 as an element of {-1, 0, 1}.
  int xi() const { return q_ % 3 == 2 ? -1 : static_cast<int>(q_ % 3); }
  bool even() const { return p_ == 2; }

  /// Coefficients of the defining polynomial, constant term first, monic.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem primitive() const { return primitive_; }

  static constexpr Elem zero() { return Elem{0}; }
  static constexpr Elem one() { return Elem{1}; }

  /// Image of an integer in the prime subfield.
  Elem from_int(long long n) const;
  /// Element with the given code; throws std::out_of_range if code >= q.
  Elem at(std::uint32_t code) const;

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return Elem{a.code ^ b.code};
    if (a.code == 0) return b;
    if (b.code == 0) return a;
    const std::int32_t la = log_[a.code];
    std::int32_t n = log_[b.code] - la;
    if (n < 0) n += static_cast<std::int32_t>(q_ - 1);
    const std::int32_t z = zech_[static_cast<std::size_t>(n)];
    if (z < 0) return zero();
    return Elem{exp_[static_cast<std::size_t>(la + z)]};
  }
  Elem neg(Elem a) const { return p_ == 2 ? a : Elem{neg_[a.code]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a.code == 0 || b.code == 0) return zero();
    return Elem{exp_[static_cast<std::size_t>(log_[a.code] + log_[b.code])]};
  }
  /// Throws std::domain_error when b = 0.
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// Throws std::domain_error when a = 0.
  Elem inv(Elem a) const;
  /// a^e; negative exponents require a != 0, and 0^0 = 1.
  Elem pow(Elem a, long long e) const;
  /// alpha^k for any integer k.
  Elem exp(long long k) const;

  /// Discrete logarithm to base alpha, in [0, q-2]. Throws on zero.
  std::uint32_t dlog(Elem x) const;
  /// dlog(x) mod 3: the index m of the class R_m containing x.
  int r_class(Elem x) const { return static_cast<int>(dlog(x) % 3); }
  /// True iff x = y^3 for some nonzero y. Throws on zero.
  bool is_cube(Elem x) const;
  /// True iff x = y^k for some nonzero y. Throws on zero.
  bool is_power(Elem x, std::uint32_t k) const;
  /// All solutions of x^3 = c, ascending by code. Throws on c = 0.
  std::vector<Elem> cube_roots(Elem c) const;
  /// Quadratic character extended by eta(0) = 0. Throws for even q.
  int eta(Elem x) const;
  /// Square roots ascending by code: {0} for 0, two roots for nonzero
  /// squares, none otherwise. Throws for even q.
  std::vector<Elem> sqrt(Elem x) const;
  /// Absolute trace to GF(p), returned as an integer in [0, p-1].
  std::uint32_t abs_trace(Elem x) const { return trace_[x.code]; }

  /// The elements of the field in code order.
  std::vector<Elem> elements() const;
  /// The nonzero elements in code order.
  std::vector<Elem> nonzero() const;

 private:
  Field() = default;

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Elem primitive_{};
  std::vector<std::uint32_t> exp_;  // 2(q-1) entries, exp_[k] = alpha^k
  std::vector<std::int32_t> log_;   // log_[0] unused (-1)
  std::vector<std::int32_t> zech_;  // log(1 + alpha^n), -1 when it is zero
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> trace_;
};

/// A field element bound to its field, for readable scalar code.
///
/// Mixing elements of different fields throws std::invalid_argument.
class FieldElement {
 public:
  FieldElement(const Field& field, Elem e) : field_(&field), e_(e) {}
  FieldElement(const Field& field, long long n) : field_(&field), e_(field.from_int(n)) {}

  const Field& field() const { return *field_; }
  Elem elem() const { return e_; }
  bool is_zero() const { return e_.code == 0; }

  FieldElement operator-() const { return {*field_, field_->neg(e_)}; }
  FieldElement inverse() const { return {*field_, field_->inv(e_)}; }
  FieldElement pow(long long k) const { return {*field_, field_->pow(e_, k)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return {a.same(b), a.field_->add(a.e_, b.e_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return {a.same(b), a.field_->sub(a.e_, b.e_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return {a.same(b), a.field_->mul(a.e_, b.e_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return {a.same(b), a.field_->div(a.e_, b.e_)};
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    a.same(b);
    return a.e_ == b.e_;
  }

 private:
  const Field& same(const FieldElement& other) const {
    if (field_ != other.field_) throw std::invalid_argument("field elements belong to different fields");
    return *field_;
  }

  const Field* field_;
  Elem e_;
};

}  // namespace twc

template <>
struct std::hash<twc::Elem> {
  std::size_t operator()(twc::Elem e) const noexcept { return e.code; }
};
