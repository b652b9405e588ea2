#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclofactor/poly.hpp"
#include "cyclofactor/subgroups.hpp"

namespace cyclofactor {

enum class ShapeTag { linear, binomial, trinomial };

// A structured monic factor: x - c, x^(2^r) - c, or
// x^(2^(r+1)) + a*x^(2^r) + c.  Construction canonicalizes: a binomial with
// r = 0 is a linear factor, and a trinomial with a = 0 collapses to the
// binomial x^(2^(r+1)) - (-c).
class FactorShape {
 public:
  static FactorShape linear(Fq c);
  static FactorShape binomial(unsigned r, Fq c);
  static FactorShape trinomial(const FieldCtx& F, unsigned r, Fq a, Fq c);

  ShapeTag tag() const { return tag_; }
  unsigned r() const { return r_; }
  // Middle coefficient (trinomial only).
  Fq a() const { return a_; }
  // Constant parameter: the subtracted c for linear/binomial shapes, the
  // literal constant term for trinomials.
  Fq c() const { return c_; }

  std::uint64_t degree() const;
  Polynomial expand(const FieldCtx& F) const;

  bool operator==(const FactorShape&) const = default;
  // Emission order: degree, then shape tag, then coefficient tuple.
  std::array<std::uint64_t, 4> sort_key() const;

 private:
  FactorShape(ShapeTag tag, unsigned r, Fq a, Fq c)
      : tag_(tag), r_(r), a_(a), c_(c) {}
  ShapeTag tag_ = ShapeTag::linear;
  unsigned r_ = 0;
  Fq a_{};
  Fq c_{};
};

bool shape_less(const FactorShape& lhs, const FactorShape& rhs);

enum class CaseTag { q1mod4, q3mod4, special_2t1, special_4t1 };
enum class ModulusKind { x2nd_minus_one, cyclotomic };

std::string case_tag_name(CaseTag tag);

struct FactorMeta {
  std::uint64_t q = 0;
  std::uint64_t d = 1;
  unsigned n = 1;
  CaseTag tag = CaseTag::q1mod4;
  ModulusKind kind = ModulusKind::x2nd_minus_one;
};

// An ordered multiset of monic factor shapes together with the modulus they
// multiply to: x^(2^n*d) - 1, or the cyclotomic polynomial of index 2^n*d.
class Factorization {
 public:
  Factorization(FactorMeta meta, std::vector<FactorShape> factors);

  const FactorMeta& meta() const { return meta_; }
  const std::vector<FactorShape>& factors() const { return factors_; }
  std::size_t count() const { return factors_.size(); }
  // 2^n * d.
  std::uint64_t input_degree() const;
  // Total degree of the modulus (equals input_degree for x^m - 1).
  std::uint64_t modulus_degree() const;
  Polynomial modulus(const FieldCtx& F) const;

 private:
  FactorMeta meta_;
  std::vector<FactorShape> factors_;
};

// Complete irreducible factorization of x^(2^n*d) - 1 over F_q; d odd with
// d | q-1, n >= 1.
Factorization factor_x2nd_minus_1(const FieldCtx& F, std::uint64_t d,
                                  unsigned n);

// The prime-pair templates (q = 2t+1 or q = 4t+1 with t prime); emits the
// same multiset as the general route with d = t, built from powers of the
// fixed generators 4 resp. 16.
Factorization factor_special(const FieldCtx& F, unsigned n);

// Irreducible factorization of the cyclotomic polynomial of index 2^n*d for
// an odd prime d | q-1; requires n >= s (q = 1 mod 4) resp. n >= u.
Factorization factor_cyclotomic(const FieldCtx& F, std::uint64_t d,
                                unsigned n);
// Same with d = t inferred from the prime pair.
Factorization factor_cyclotomic_special(const FieldCtx& F, unsigned n);

// One decomposable block of the x^(2^n*d) - 1 ladder: the polynomial
// Phi_{2^k}(x^(2^r*d)) (k = 0 denotes x^d - 1) together with the final
// factors assigned to it.  Concatenating the factors of all blocks gives
// factor_x2nd_minus_1, and each block's factors multiply back to its
// polynomial.
struct LadderBlock {
  unsigned k = 0;
  unsigned r = 0;
  Polynomial block;
  std::vector<FactorShape> factors;
};

std::vector<LadderBlock> cyclotomic_ladder(const FieldCtx& F, std::uint64_t d,
                                           unsigned n);

// Oracle checks for an emitted factorization.
struct VerifyReport {
  bool product_ok = false;
  bool irreducible_ok = false;
  // Unset when the brute-force oracle caps (deg <= 4096, q < 2^16) exclude
  // the modulus.
  std::optional<bool> oracle_match;
  bool all_ok() const {
    return product_ok && irreducible_ok && oracle_match.value_or(true);
  }
};

VerifyReport verify_factorization(const FieldCtx& F, const Factorization& f);

}  // namespace cyclofactor
