#include "cyclofactor/quad_ext.hpp"

#include <algorithm>

namespace cyclofactor {

ExtCtx::ExtCtx(FieldCtx base) : base_(std::move(base)) {
  std::uint64_t q = base_.q();
  if (q % 4 != 3)
    fail(errc::bad_modulus, "extension context requires q = 3 (mod 4)");
  Q_ = q * q;
  std::uint64_t m = Q_ - 1;
  while (m % 2 == 0) {
    m /= 2;
    ++u_;
  }
  v_odd_ = m;

  // Q - 1 = (q-1)(q+1), so its prime factors come from the two halves.
  ext_order_factors_ = distinct_prime_factors(q - 1);
  for (std::uint64_t p : distinct_prime_factors(q + 1)) {
    if (std::find(ext_order_factors_.begin(), ext_order_factors_.end(), p) ==
        ext_order_factors_.end())
      ext_order_factors_.push_back(p);
  }
  std::sort(ext_order_factors_.begin(), ext_order_factors_.end());

  // Deterministic generator of the 2-Sylow subgroup: scan elements in
  // lexicographic (a, b) order and keep the first c^v_odd of order 2^u.
  Fq minus_one = base_.element(-1);
  std::uint64_t half = std::uint64_t{1} << (u_ - 1);
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      if (a == 0 && b == 0) continue;
      ExtElement e = pow(ExtElement{Fq{a}, Fq{b}}, v_odd_);
      ExtElement probe = pow(e, half);
      if (probe.b.value == 0 && probe.a == minus_one) {
        beta_top_ = e;
        return;
      }
    }
  }
  fail(errc::bad_modulus, "no generator of the 2-Sylow subgroup found");
}

ExtElement ExtCtx::inv(ExtElement x) const {
  if (is_zero(x)) fail(errc::division_by_zero, "inverse of zero");
  Fq norm = base_.add(base_.mul(x.a, x.a), base_.mul(x.b, x.b));
  Fq ni = base_.inv(norm);
  return {base_.mul(x.a, ni), base_.neg(base_.mul(x.b, ni))};
}

ExtElement ExtCtx::pow(ExtElement x, std::uint64_t e) const {
  ExtElement r = one();
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Fq ExtCtx::chi(ExtElement x) const {
  if (is_zero(x)) fail(errc::zero_element, "chi of zero is undefined");
  return base_.add(base_.mul(x.a, x.a), base_.mul(x.b, x.b));
}

ExtElement ExtCtx::beta(unsigned k) const {
  if (k > u_) fail(errc::k_out_of_range, "beta level must be in [0, u]");
  return pow(beta_top_, std::uint64_t{1} << (u_ - k));
}

std::uint64_t ExtCtx::element_order(ExtElement x) const {
  if (is_zero(x)) fail(errc::zero_element, "order of zero is undefined");
  std::uint64_t o = Q_ - 1;
  for (std::uint64_t p : ext_order_factors_) {
    while (o % p == 0 && pow(x, o / p) == one()) o /= p;
  }
  return o;
}

}  // namespace cyclofactor
