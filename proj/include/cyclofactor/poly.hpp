#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclofactor/field.hpp"

namespace cyclofactor {

// Dense polynomial over F_q: coefficients ascending by degree, canonical
// residues, no trailing zeros.  The zero polynomial has an empty list.
class Polynomial {
 public:
  Polynomial() = default;

  // Reduces arbitrary integer coefficients into F_q and trims.
  static Polynomial from_coeffs(const FieldCtx& F,
                                std::vector<std::int64_t> coeffs);
  // Takes residues assumed canonical; trims trailing zeros.
  static Polynomial from_residues(std::vector<std::uint64_t> coeffs);
  static Polynomial constant(Fq c);
  static Polynomial x();
  // x^m - c (monic binomial; c may be 0).
  static Polynomial x_pow_minus_c(const FieldCtx& F, std::uint64_t m, Fq c);

  bool is_zero() const { return c_.empty(); }
  // Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : 0;
  }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return leading() == 1; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  bool operator==(const Polynomial&) const = default;
  // Canonical order for multiset comparisons: degree, then coefficients from
  // the top down.
  bool operator<(const Polynomial& other) const;

 private:
  std::vector<std::uint64_t> c_;
};

Polynomial poly_add(const FieldCtx& F, const Polynomial& f,
                    const Polynomial& g);
Polynomial poly_sub(const FieldCtx& F, const Polynomial& f,
                    const Polynomial& g);
Polynomial poly_neg(const FieldCtx& F, const Polynomial& f);
Polynomial poly_mul(const FieldCtx& F, const Polynomial& f,
                    const Polynomial& g);

struct PolyDivMod {
  Polynomial quot;
  Polynomial rem;
};
PolyDivMod poly_divmod(const FieldCtx& F, const Polynomial& f,
                       const Polynomial& g);
Polynomial poly_div(const FieldCtx& F, const Polynomial& f,
                    const Polynomial& g);
Polynomial poly_mod(const FieldCtx& F, const Polynomial& f,
                    const Polynomial& g);

// Monic gcd; gcd(0, 0) = 0.
Polynomial poly_gcd(const FieldCtx& F, Polynomial f, Polynomial g);

Polynomial poly_modpow(const FieldCtx& F, Polynomial base, std::uint64_t e,
                       const Polynomial& mod);
Polynomial poly_derivative(const FieldCtx& F, const Polynomial& f);
Fq poly_eval(const FieldCtx& F, const Polynomial& f, Fq x);
Polynomial poly_make_monic(const FieldCtx& F, const Polynomial& f);

// Irreducibility over F_q for monic f of degree >= 1.  Binomials x^l - a take
// the order-criterion fast path; everything else runs the generic test on
// Frobenius powers of x.
bool is_irreducible(const FieldCtx& F, const Polynomial& f);

namespace detail {
// The generic test alone, bypassing the binomial fast path (exposed so the
// two routes can be compared against each other).
bool is_irreducible_generic(const FieldCtx& F, const Polynomial& f);
std::optional<bool> binomial_irreducibility(const FieldCtx& F,
                                            const Polynomial& f);
}  // namespace detail

// Complete factorization into monic irreducibles with multiplicity, sorted
// canonically.  Squarefree split, then distinct-degree split on Frobenius
// powers, then randomized equal-degree split with a fixed per-call seed.
// Caps: deg f <= 4096 and q < 2^16.
std::vector<Polynomial> brute_factor(const FieldCtx& F, const Polynomial& f);

// The m-th cyclotomic polynomial reduced into F_q[x], via the division
// ladder over the divisors of m.  Requires gcd(m, q) = 1 and m <= 4096.
Polynomial cyclotomic_poly(const FieldCtx& F, std::uint64_t m);

}  // namespace cyclofactor
