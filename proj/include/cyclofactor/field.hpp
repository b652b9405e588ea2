#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "cyclofactor/error.hpp"

namespace cyclofactor {

// An element of F_q, always held as the canonical residue in [0, q-1].
struct Fq {
  std::uint64_t value = 0;
  friend constexpr auto operator<=>(const Fq&, const Fq&) = default;
};

// Deterministic Miller-Rabin (exact for 64-bit inputs).
bool is_prime_u64(std::uint64_t n);

// Distinct prime factors of n, ascending (trial division; n < 2^63).
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

// The prime field F_q for an odd prime q < 2^31, with the 2-adic splitting
// q - 1 = 2^s * t_odd and the smallest primitive root g.  All operations are
// pure and the context is immutable, so instances can be shared freely
// across threads.
class FieldCtx {
 public:
  explicit FieldCtx(std::uint64_t q);

  std::uint64_t q() const { return q_; }
  unsigned s() const { return s_; }
  std::uint64_t t_odd() const { return t_odd_; }
  Fq g() const { return g_; }
  const std::vector<std::uint64_t>& q_minus_one_factors() const {
    return q1_factors_;
  }

  // Canonicalizes any integer (negatives allowed) into [0, q-1].
  Fq element(std::int64_t v) const;
  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }

  Fq add(Fq a, Fq b) const {
    std::uint64_t r = a.value + b.value;
    return Fq{r >= q_ ? r - q_ : r};
  }
  Fq sub(Fq a, Fq b) const {
    return Fq{a.value >= b.value ? a.value - b.value
                                 : a.value + q_ - b.value};
  }
  Fq neg(Fq a) const { return Fq{a.value == 0 ? 0 : q_ - a.value}; }
  Fq mul(Fq a, Fq b) const { return Fq{a.value * b.value % q_}; }
  Fq inv(Fq a) const;

  // a^e by square-and-multiply; 0^0 = 1.
  Fq pow(Fq a, std::uint64_t e) const;

  // Least k >= 1 with a^k = 1; requires a != 0.
  std::uint64_t element_order(Fq a) const;

  // 0 iff a = 0, +1 iff a is a nonzero square, -1 otherwise.
  int legendre(Fq a) const;

  // A square root of a (requires legendre(a) != -1); of the two roots the
  // numerically smaller canonical residue is returned.
  Fq sqrt(Fq a) const;

  // g^((q-1)/m), an element of order exactly m; requires m | q-1.
  Fq root_of_unity(std::uint64_t m) const;

 private:
  std::uint64_t q_ = 0;
  unsigned s_ = 0;
  std::uint64_t t_odd_ = 0;
  Fq g_{};
  std::vector<std::uint64_t> q1_factors_;
};

}  // namespace cyclofactor
