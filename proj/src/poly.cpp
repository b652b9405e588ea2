#include "cyclofactor/poly.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace cyclofactor {

namespace {

constexpr std::size_t kKaratsubaThreshold = 64;
constexpr int kBruteDegreeCap = 4096;
constexpr std::uint64_t kBruteModulusCap = std::uint64_t{1} << 16;
constexpr std::uint64_t kEdfSeed = 0x5eed0ddc0eff5ULL;

void trim(std::vector<std::uint64_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::vector<std::uint64_t> mul_school(const FieldCtx& F,
                                      const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
  const std::uint64_t q = F.q();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % q;
    }
  }
  return out;
}

// Product with exact output length a.size() + b.size() - 1, never trimmed:
// the karatsuba cross-term subtraction needs the intermediate products at
// their full lengths even when their top coefficients vanish.
std::vector<std::uint64_t> mul_raw(const FieldCtx& F,
                                   const std::vector<std::uint64_t>& a,
                                   const std::vector<std::uint64_t>& b) {
  if (std::min(a.size(), b.size()) <= kKaratsubaThreshold)
    return mul_school(F, a, b);

  const std::uint64_t q = F.q();
  const std::size_t h = std::max(a.size(), b.size()) / 2;
  auto lo = [&](const std::vector<std::uint64_t>& v) {
    std::vector<std::uint64_t> r(v.begin(),
                                 v.begin() + std::min(h, v.size()));
    return r;
  };
  auto hi = [&](const std::vector<std::uint64_t>& v) {
    if (v.size() <= h) return std::vector<std::uint64_t>{};
    return std::vector<std::uint64_t>(v.begin() + h, v.end());
  };
  auto vadd = [&](std::vector<std::uint64_t> x,
                  const std::vector<std::uint64_t>& y) {
    if (x.size() < y.size()) x.resize(y.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i) {
      x[i] += y[i];
      if (x[i] >= q) x[i] -= q;
    }
    return x;
  };

  auto a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
  auto z0 = mul_raw(F, a0, b0);
  auto z2 = (a1.empty() || b1.empty()) ? std::vector<std::uint64_t>{}
                                       : mul_raw(F, a1, b1);
  auto z1 = mul_raw(F, vadd(a0, a1), vadd(b0, b1));
  // z1 -= z0 + z2; z1's length dominates both by construction.
  for (std::size_t i = 0; i < z1.size(); ++i) {
    std::uint64_t sub = 0;
    if (i < z0.size()) sub += z0[i];
    if (i < z2.size()) sub += z2[i];
    sub %= q;
    z1[i] = z1[i] >= sub ? z1[i] - sub : z1[i] + q - sub;
  }

  std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) {
    std::uint64_t& o = out[i + h];
    o += z1[i];
    if (o >= q) o -= q;
  }
  for (std::size_t i = 0; i < z2.size(); ++i) {
    std::uint64_t& o = out[i + 2 * h];
    o += z2[i];
    if (o >= q) o -= q;
  }
  return out;
}

}  // namespace

Polynomial Polynomial::from_coeffs(const FieldCtx& F,
                                   std::vector<std::int64_t> coeffs) {
  std::vector<std::uint64_t> c;
  c.reserve(coeffs.size());
  for (std::int64_t v : coeffs) c.push_back(F.element(v).value);
  return from_residues(std::move(c));
}

Polynomial Polynomial::from_residues(std::vector<std::uint64_t> coeffs) {
  Polynomial p;
  trim(coeffs);
  p.c_ = std::move(coeffs);
  return p;
}

Polynomial Polynomial::constant(Fq c) {
  return from_residues({c.value});
}

Polynomial Polynomial::x() {
  return from_residues({0, 1});
}

Polynomial Polynomial::x_pow_minus_c(const FieldCtx& F, std::uint64_t m,
                                     Fq c) {
  std::vector<std::uint64_t> v(m + 1, 0);
  v[0] = F.neg(c).value;
  v[m] = 1;
  return from_residues(std::move(v));
}

bool Polynomial::operator<(const Polynomial& other) const {
  if (c_.size() != other.c_.size()) return c_.size() < other.c_.size();
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != other.c_[i]) return c_[i] < other.c_[i];
  }
  return false;
}

Polynomial poly_add(const FieldCtx& F, const Polynomial& f,
                    const Polynomial& g) {
  std::vector<std::uint64_t> c(std::max(f.coeffs().size(), g.coeffs().size()),
                               0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = F.add(Fq{f.coeff(i)}, Fq{g.coeff(i)}).value;
  return Polynomial::from_residues(std::move(c));
}

Polynomial poly_sub(const FieldCtx& F, const Polynomial& f,
                    const Polynomial& g) {
  std::vector<std::uint64_t> c(std::max(f.coeffs().size(), g.coeffs().size()),
                               0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = F.sub(Fq{f.coeff(i)}, Fq{g.coeff(i)}).value;
  return Polynomial::from_residues(std::move(c));
}

Polynomial poly_neg(const FieldCtx& F, const Polynomial& f) {
  std::vector<std::uint64_t> c(f.coeffs());
  for (auto& v : c) v = F.neg(Fq{v}).value;
  return Polynomial::from_residues(std::move(c));
}

Polynomial poly_mul(const FieldCtx& F, const Polynomial& f,
                    const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  return Polynomial::from_residues(mul_raw(F, f.coeffs(), g.coeffs()));
}

PolyDivMod poly_divmod(const FieldCtx& F, const Polynomial& f,
                       const Polynomial& g) {
  if (g.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  if (f.degree() < g.degree()) return {{}, f};

  std::vector<std::uint64_t> rem(f.coeffs());
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  std::vector<std::uint64_t> quot(rem.size() - dg, 0);
  const Fq lead_inv = F.inv(Fq{g.leading()});
  const std::uint64_t q = F.q();

  for (std::size_t i = rem.size(); i-- > dg;) {
    if (rem[i] == 0) continue;
    std::uint64_t c = F.mul(Fq{rem[i]}, lead_inv).value;
    quot[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) {
      std::uint64_t sub = c * g.coeff(j) % q;
      std::uint64_t& r = rem[i - dg + j];
      r = r >= sub ? r - sub : r + q - sub;
    }
  }
  return {Polynomial::from_residues(std::move(quot)),
          Polynomial::from_residues(std::move(rem))};
}

Polynomial poly_div(const FieldCtx& F, const Polynomial& f,
                    const Polynomial& g) {
  return poly_divmod(F, f, g).quot;
}

Polynomial poly_mod(const FieldCtx& F, const Polynomial& f,
                    const Polynomial& g) {
  return poly_divmod(F, f, g).rem;
}

Polynomial poly_make_monic(const FieldCtx& F, const Polynomial& f) {
  if (f.is_zero() || f.is_monic()) return f;
  Fq inv = F.inv(Fq{f.leading()});
  std::vector<std::uint64_t> c(f.coeffs());
  for (auto& v : c) v = F.mul(Fq{v}, inv).value;
  return Polynomial::from_residues(std::move(c));
}

Polynomial poly_gcd(const FieldCtx& F, Polynomial f, Polynomial g) {
  while (!g.is_zero()) {
    Polynomial r = poly_mod(F, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return poly_make_monic(F, f);
}

Polynomial poly_modpow(const FieldCtx& F, Polynomial base, std::uint64_t e,
                       const Polynomial& mod) {
  Polynomial r = poly_mod(F, Polynomial::constant(F.one()), mod);
  base = poly_mod(F, base, mod);
  while (e) {
    if (e & 1) r = poly_mod(F, poly_mul(F, r, base), mod);
    base = poly_mod(F, poly_mul(F, base, base), mod);
    e >>= 1;
  }
  return r;
}

Polynomial poly_derivative(const FieldCtx& F, const Polynomial& f) {
  if (f.degree() < 1) return {};
  std::vector<std::uint64_t> c(f.degree(), 0);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    c[i - 1] = F.mul(Fq{f.coeff(i)}, F.element(static_cast<std::int64_t>(i % F.q()))).value;
  return Polynomial::from_residues(std::move(c));
}

Fq poly_eval(const FieldCtx& F, const Polynomial& f, Fq x) {
  Fq acc{0};
  for (std::size_t i = f.coeffs().size(); i-- > 0;)
    acc = F.add(F.mul(acc, x), Fq{f.coeff(i)});
  return acc;
}

namespace detail {

std::optional<bool> binomial_irreducibility(const FieldCtx& F,
                                            const Polynomial& f) {
  const int l = f.degree();
  if (l < 2) return std::nullopt;
  for (int i = 1; i < l; ++i)
    if (f.coeff(i) != 0) return std::nullopt;
  if (f.coeff(0) == 0) return false;  // x^l, reducible for l >= 2
  Fq a = F.neg(Fq{f.coeff(0)});       // f = x^l - a
  if (a.value == 1) return false;     // x - 1 divides x^l - 1
  // x^l - a is irreducible iff every prime p | l divides ord(a) but not
  // (q-1)/ord(a), and 4 | l implies 4 | q-1.
  std::uint64_t k = F.element_order(a);
  for (std::uint64_t p : distinct_prime_factors(static_cast<std::uint64_t>(l))) {
    if (k % p != 0) return false;
    if (((F.q() - 1) / k) % p == 0) return false;
  }
  if (l % 4 == 0 && (F.q() - 1) % 4 != 0) return false;
  return true;
}

bool is_irreducible_generic(const FieldCtx& F, const Polynomial& f) {
  const int m = f.degree();
  if (m == 1) return true;
  // Rabin: f irreducible iff x^(q^m) = x (mod f) and, for each prime p | m,
  // gcd(x^(q^(m/p)) - x, f) = 1.
  std::vector<std::uint64_t> checkpoints;
  for (std::uint64_t p :
       distinct_prime_factors(static_cast<std::uint64_t>(m)))
    checkpoints.push_back(static_cast<std::uint64_t>(m) / p);
  std::sort(checkpoints.begin(), checkpoints.end());

  Polynomial h = poly_mod(F, Polynomial::x(), f);
  std::size_t next = 0;
  for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(m); ++i) {
    h = poly_modpow(F, h, F.q(), f);  // h = x^(q^i) mod f
    if (next < checkpoints.size() && i == checkpoints[next]) {
      ++next;
      Polynomial g =
          poly_gcd(F, poly_sub(F, h, poly_mod(F, Polynomial::x(), f)), f);
      if (g.degree() != 0) return false;
    }
  }
  return h == poly_mod(F, Polynomial::x(), f);
}

}  // namespace detail

bool is_irreducible(const FieldCtx& F, const Polynomial& f) {
  if (f.degree() < 1) fail(errc::constant_polynomial, "degree must be >= 1");
  if (!f.is_monic()) fail(errc::non_monic, "polynomial must be monic");
  if (f.degree() == 1) return true;
  if (auto fast = detail::binomial_irreducibility(F, f)) return *fast;
  return detail::is_irreducible_generic(F, f);
}

namespace {

// Squarefree decomposition in characteristic q: returns (g, multiplicity)
// pairs with the g squarefree, monic and pairwise coprime.
void squarefree_split(const FieldCtx& F, const Polynomial& f,
                      std::uint64_t mult,
                      std::vector<std::pair<Polynomial, std::uint64_t>>& out) {
  if (f.degree() < 1) return;
  Polynomial fp = poly_derivative(F, f);
  if (fp.is_zero()) {
    // f = h(x^q); over the prime field h's coefficients carry over directly.
    std::vector<std::uint64_t> h((f.degree() / F.q()) + 1, 0);
    for (std::size_t i = 0; i < h.size(); ++i)
      h[i] = f.coeff(i * F.q());
    squarefree_split(F, Polynomial::from_residues(std::move(h)),
                     mult * F.q(), out);
    return;
  }
  Polynomial c = poly_gcd(F, f, fp);
  Polynomial w = poly_div(F, f, c);
  std::uint64_t i = 1;
  while (w.degree() > 0) {
    Polynomial y = poly_gcd(F, w, c);
    Polynomial z = poly_div(F, w, y);
    if (z.degree() > 0) out.emplace_back(z, mult * i);
    ++i;
    w = std::move(y);
    c = poly_div(F, c, w);
  }
  if (c.degree() > 0) squarefree_split(F, c, mult, out);
}

// Equal-degree split (Cantor-Zassenhaus) of h = product of factors of
// degree d, using the supplied generator.
void equal_degree_split(const FieldCtx& F, const Polynomial& h, int d,
                        std::mt19937_64& rng,
                        std::vector<Polynomial>& out) {
  if (h.degree() == d) {
    out.push_back(h);
    return;
  }
  std::uniform_int_distribution<std::uint64_t> coeff(0, F.q() - 1);
  while (true) {
    std::vector<std::uint64_t> rc(static_cast<std::size_t>(h.degree()), 0);
    for (auto& v : rc) v = coeff(rng);
    Polynomial a = Polynomial::from_residues(std::move(rc));
    if (a.degree() < 1) continue;
    // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
    Polynomial t = poly_mod(F, a, h);
    Polynomial acc = t;
    for (int j = 1; j < d; ++j) {
      t = poly_modpow(F, t, F.q(), h);
      acc = poly_mod(F, poly_mul(F, acc, t), h);
    }
    Polynomial b = poly_modpow(F, acc, (F.q() - 1) / 2, h);
    Polynomial g = poly_gcd(
        F, poly_sub(F, b, Polynomial::constant(F.one())), h);
    if (g.degree() > 0 && g.degree() < h.degree()) {
      equal_degree_split(F, g, d, rng, out);
      equal_degree_split(F, poly_div(F, h, g), d, rng, out);
      return;
    }
  }
}

void factor_squarefree(const FieldCtx& F, Polynomial f,
                       std::mt19937_64& rng, std::vector<Polynomial>& out) {
  // Distinct-degree split on x^(q^i) - x, then equal-degree split.
  Polynomial h = poly_mod(F, Polynomial::x(), f);
  int i = 0;
  while (f.degree() >= 2 * (i + 1)) {
    ++i;
    h = poly_modpow(F, h, F.q(), f);
    Polynomial g =
        poly_gcd(F, poly_sub(F, h, poly_mod(F, Polynomial::x(), f)), f);
    if (g.degree() > 0) {
      equal_degree_split(F, g, i, rng, out);
      f = poly_div(F, f, g);
      h = poly_mod(F, h, f);
    }
  }
  if (f.degree() > 0) out.push_back(f);
}

}  // namespace

std::vector<Polynomial> brute_factor(const FieldCtx& F, const Polynomial& f) {
  if (f.degree() > kBruteDegreeCap)
    fail(errc::degree_too_large, "brute factorization capped at degree 4096");
  if (F.q() >= kBruteModulusCap)
    fail(errc::bad_modulus, "brute factorization capped at q < 2^16");
  if (f.is_zero())
    fail(errc::division_by_zero, "cannot factor the zero polynomial");

  std::vector<Polynomial> out;
  if (f.degree() < 1) return out;

  std::mt19937_64 rng(kEdfSeed);
  std::vector<std::pair<Polynomial, std::uint64_t>> squarefree;
  squarefree_split(F, poly_make_monic(F, f), 1, squarefree);
  for (const auto& [g, mult] : squarefree) {
    std::vector<Polynomial> parts;
    factor_squarefree(F, g, rng, parts);
    for (const auto& p : parts)
      for (std::uint64_t m = 0; m < mult; ++m) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial cyclotomic_poly(const FieldCtx& F, std::uint64_t m) {
  if (m == 0 || m > 4096)
    fail(errc::bad_modulus, "cyclotomic index must be in [1, 4096]");
  if (m % F.q() == 0)
    fail(errc::bad_modulus, "cyclotomic index must be coprime to q");

  std::map<std::uint64_t, Polynomial> memo;
  auto phi = [&](auto&& self, std::uint64_t k) -> const Polynomial& {
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    Polynomial num = Polynomial::x_pow_minus_c(F, k, F.one());
    for (std::uint64_t d = 1; d <= k / 2; ++d) {
      if (k % d == 0) num = poly_div(F, num, self(self, d));
    }
    return memo.emplace(k, std::move(num)).first->second;
  };
  return phi(phi, m);
}

}  // namespace cyclofactor
