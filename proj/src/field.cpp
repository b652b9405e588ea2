#include "cyclofactor/field.hpp"

namespace cyclofactor {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  // This base set decides primality exactly for every 64-bit integer.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

FieldCtx::FieldCtx(std::uint64_t q) : q_(q) {
  if (q % 2 == 0) fail(errc::even_modulus, "q must be odd");
  if (q >= (std::uint64_t{1} << 31))
    fail(errc::modulus_too_large, "q must be < 2^31");
  if (q < 3 || !is_prime_u64(q)) fail(errc::not_prime, "q must be prime");

  std::uint64_t m = q - 1;
  while (m % 2 == 0) {
    m /= 2;
    ++s_;
  }
  t_odd_ = m;
  q1_factors_ = distinct_prime_factors(q - 1);

  // Smallest primitive root: a generates F_q* iff a^((q-1)/p) != 1 for every
  // prime p | q-1.
  for (std::uint64_t a = 2; a < q; ++a) {
    bool generator = true;
    for (std::uint64_t p : q1_factors_) {
      if (pow(Fq{a}, (q - 1) / p).value == 1) {
        generator = false;
        break;
      }
    }
    if (generator) {
      g_ = Fq{a};
      return;
    }
  }
  // q = 3 is handled by the loop (a = 2); q >= 3 prime always has a root.
  fail(errc::not_prime, "no primitive root found");
}

Fq FieldCtx::element(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(q_);
  if (m < 0) m += static_cast<std::int64_t>(q_);
  return Fq{static_cast<std::uint64_t>(m)};
}

Fq FieldCtx::inv(Fq a) const {
  if (a.value == 0) fail(errc::division_by_zero, "inverse of zero");
  return pow(a, q_ - 2);
}

Fq FieldCtx::pow(Fq a, std::uint64_t e) const {
  Fq r{1};
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t FieldCtx::element_order(Fq a) const {
  if (a.value == 0) fail(errc::zero_element, "order of zero is undefined");
  std::uint64_t o = q_ - 1;
  for (std::uint64_t p : q1_factors_) {
    while (o % p == 0 && pow(a, o / p).value == 1) o /= p;
  }
  return o;
}

int FieldCtx::legendre(Fq a) const {
  if (a.value == 0) return 0;
  return pow(a, (q_ - 1) / 2).value == 1 ? 1 : -1;
}

Fq FieldCtx::sqrt(Fq a) const {
  if (a.value == 0) return Fq{0};
  if (legendre(a) == -1) fail(errc::non_residue, "not a quadratic residue");
  Fq r{};
  if (q_ % 4 == 3) {
    r = pow(a, (q_ + 1) / 4);
  } else {
    // Tonelli-Shanks on the 2-adic splitting q - 1 = 2^s * t_odd.
    Fq z{2};
    while (legendre(z) != -1) ++z.value;
    unsigned m = s_;
    Fq c = pow(z, t_odd_);
    Fq t = pow(a, t_odd_);
    r = pow(a, (t_odd_ + 1) / 2);
    while (t.value != 1) {
      unsigned i = 0;
      Fq t2 = t;
      while (t2.value != 1) {
        t2 = mul(t2, t2);
        ++i;
      }
      Fq b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
  }
  Fq other = neg(r);
  return r.value <= other.value ? r : other;
}

Fq FieldCtx::root_of_unity(std::uint64_t m) const {
  if (m == 0 || (q_ - 1) % m != 0)
    fail(errc::order_does_not_divide, "m must divide q-1");
  return pow(g_, (q_ - 1) / m);
}

}  // namespace cyclofactor
