#pragma once

#include <cstdint>

#include "cyclofactor/field.hpp"

namespace cyclofactor {

// a + b*delta in F_{q^2} = F_q[delta]/(delta^2 + 1); components canonical.
struct ExtElement {
  Fq a{};
  Fq b{};
  friend constexpr auto operator<=>(const ExtElement&,
                                    const ExtElement&) = default;
};

// F_{q^2} for q = 3 (mod 4).  That congruence makes -1 a nonresidue, so
// delta^2 = -1 is a valid defining relation and the Frobenius x -> x^q is
// simply conjugation a + b*delta -> a - b*delta.  Carries the splitting
// q^2 - 1 = 2^u * v_odd and a canonical generator beta_top of the 2-Sylow
// subgroup of F_{q^2}*.
class ExtCtx {
 public:
  explicit ExtCtx(FieldCtx base);

  const FieldCtx& base() const { return base_; }
  std::uint64_t q() const { return base_.q(); }
  std::uint64_t Q() const { return Q_; }
  unsigned u() const { return u_; }
  std::uint64_t v_odd() const { return v_odd_; }
  ExtElement beta_top() const { return beta_top_; }

  ExtElement zero() const { return {}; }
  ExtElement one() const { return {Fq{1}, Fq{0}}; }
  ExtElement delta() const { return {Fq{0}, Fq{1}}; }
  ExtElement embed(Fq a) const { return {a, Fq{0}}; }
  ExtElement make(std::int64_t a, std::int64_t b) const {
    return {base_.element(a), base_.element(b)};
  }
  bool is_zero(ExtElement x) const { return x.a.value == 0 && x.b.value == 0; }

  ExtElement add(ExtElement x, ExtElement y) const {
    return {base_.add(x.a, y.a), base_.add(x.b, y.b)};
  }
  ExtElement sub(ExtElement x, ExtElement y) const {
    return {base_.sub(x.a, y.a), base_.sub(x.b, y.b)};
  }
  ExtElement neg(ExtElement x) const {
    return {base_.neg(x.a), base_.neg(x.b)};
  }
  ExtElement mul(ExtElement x, ExtElement y) const {
    // (a + b d)(c + e d) = (ac - be) + (ae + bc) d with d^2 = -1.
    return {base_.sub(base_.mul(x.a, y.a), base_.mul(x.b, y.b)),
            base_.add(base_.mul(x.a, y.b), base_.mul(x.b, y.a))};
  }
  ExtElement scale(Fq c, ExtElement x) const {
    return {base_.mul(c, x.a), base_.mul(c, x.b)};
  }
  ExtElement inv(ExtElement x) const;
  ExtElement pow(ExtElement x, std::uint64_t e) const;

  // x^q, computed as the conjugate a - b*delta.
  ExtElement frobenius(ExtElement x) const {
    return {x.a, base_.neg(x.b)};
  }

  // T(x) = x + x^q; lands in the base field (the delta component cancels).
  Fq trace(ExtElement x) const { return base_.add(x.a, x.a); }

  // x^(q+1) = x * conj(x) = a^2 + b^2, a base-field element; requires x != 0.
  Fq chi(ExtElement x) const;

  // beta_{2^k} = beta_top^(2^(u-k)), of multiplicative order exactly 2^k.
  ExtElement beta(unsigned k) const;

  std::uint64_t element_order(ExtElement x) const;

 private:
  FieldCtx base_;
  std::uint64_t Q_ = 0;
  unsigned u_ = 0;
  std::uint64_t v_odd_ = 0;
  ExtElement beta_top_{};
  std::vector<std::uint64_t> ext_order_factors_;  // distinct primes of Q-1
};

}  // namespace cyclofactor
