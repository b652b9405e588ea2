#include "cyclofactor/factor.hpp"

#include <algorithm>

#include "cyclofactor/trace_table.hpp"

namespace cyclofactor {

FactorShape FactorShape::linear(Fq c) {
  return FactorShape(ShapeTag::linear, 0, Fq{0}, c);
}

FactorShape FactorShape::binomial(unsigned r, Fq c) {
  if (r == 0) return linear(c);
  return FactorShape(ShapeTag::binomial, r, Fq{0}, c);
}

FactorShape FactorShape::trinomial(const FieldCtx& F, unsigned r, Fq a,
                                   Fq c) {
  if (a.value == 0) return binomial(r + 1, F.neg(c));
  return FactorShape(ShapeTag::trinomial, r, a, c);
}

std::uint64_t FactorShape::degree() const {
  return std::uint64_t{1} << (tag_ == ShapeTag::trinomial ? r_ + 1 : r_);
}

Polynomial FactorShape::expand(const FieldCtx& F) const {
  if (tag_ == ShapeTag::trinomial) {
    std::uint64_t half = std::uint64_t{1} << r_;
    std::vector<std::uint64_t> v(2 * half + 1, 0);
    v[0] = c_.value;
    v[half] = a_.value;
    v[2 * half] = 1;
    return Polynomial::from_residues(std::move(v));
  }
  return Polynomial::x_pow_minus_c(F, degree(), c_);
}

std::array<std::uint64_t, 4> FactorShape::sort_key() const {
  std::uint64_t tag_rank = static_cast<std::uint64_t>(tag_);
  if (tag_ == ShapeTag::trinomial)
    return {degree(), tag_rank, a_.value, c_.value};
  return {degree(), tag_rank, c_.value, 0};
}

bool shape_less(const FactorShape& lhs, const FactorShape& rhs) {
  return lhs.sort_key() < rhs.sort_key();
}

std::string case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::q1mod4: return "q1mod4";
    case CaseTag::q3mod4: return "q3mod4";
    case CaseTag::special_2t1: return "special-2t1";
    case CaseTag::special_4t1: return "special-4t1";
  }
  return "unknown";
}

Factorization::Factorization(FactorMeta meta, std::vector<FactorShape> factors)
    : meta_(meta), factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(), shape_less);
}

std::uint64_t Factorization::input_degree() const {
  return meta_.d << meta_.n;
}

std::uint64_t Factorization::modulus_degree() const {
  if (meta_.kind == ModulusKind::x2nd_minus_one) return input_degree();
  // phi(2^n * d) for odd prime d.
  return (std::uint64_t{1} << (meta_.n - 1)) * (meta_.d - 1);
}

Polynomial Factorization::modulus(const FieldCtx& F) const {
  if (meta_.kind == ModulusKind::x2nd_minus_one)
    return Polynomial::x_pow_minus_c(F, input_degree(), F.one());
  // Phi_{2^n d}(x) = (x^(2^(n-1) d) + 1) / (x^(2^(n-1)) + 1).
  std::uint64_t half = input_degree() / 2;
  Polynomial num =
      Polynomial::x_pow_minus_c(F, half, F.element(-1));
  Polynomial den = Polynomial::x_pow_minus_c(
      F, std::uint64_t{1} << (meta_.n - 1), F.element(-1));
  return poly_div(F, num, den);
}

namespace {

void validate_inputs(const FieldCtx& F, std::uint64_t d, unsigned n) {
  if (d == 0 || d % 2 == 0) fail(errc::bad_divisor, "d must be odd");
  if ((F.q() - 1) % d != 0) fail(errc::bad_divisor, "d must divide q-1");
  if (n == 0) fail(errc::degenerate_n, "n must be >= 1");
  if (n >= 40 || d > (std::uint64_t{1} << 40) >> n)
    fail(errc::degenerate_n, "2^n * d is too large");
}

// Shared emission state for one factorization run.
struct Emitter {
  const FieldCtx& F;
  RootSet roots;
  std::optional<ExtCtx> ext;
  std::optional<TraceTables> traces;

  Emitter(const FieldCtx& field, std::uint64_t d) : F(field) {
    roots = build_rootset(F, d);
    if (F.q() % 4 == 3) {
      ext.emplace(F);
      traces.emplace(*ext);
    }
  }

  unsigned u() const { return ext->u(); }

  // The 2^(level-2) distinct traces at one level; level 2 has the single
  // trace T(beta_4) = 0.
  std::vector<Fq> level_traces(unsigned level) const {
    if (level == 2) return {F.zero()};
    return traces->sequence(level).traces;
  }

  Fq gamma_pow(std::uint64_t j) const { return F.pow(roots.gamma, j); }

  // Factors of x^d - 1 (k = 0) or Phi_2(x^d) (the sign argument).
  void emit_linears(std::vector<FactorShape>& out, bool negated) const {
    for (std::uint64_t j = 0; j < roots.d; ++j) {
      Fq g = gamma_pow(j);
      out.push_back(FactorShape::linear(negated ? F.neg(g) : g));
    }
  }

  // q = 1 (mod 4): the linear factors of Phi_{2^k}(x^d) for 1 <= k <= s.
  void emit_alpha_linears(std::vector<FactorShape>& out, unsigned k) const {
    Fq alpha = roots.alphas[k - 1];
    std::uint64_t count = std::uint64_t{1} << (k - 1);
    for (std::uint64_t i = 1; i <= count; ++i) {
      Fq root = F.pow(alpha, 2 * i - 1);
      for (std::uint64_t j = 0; j < roots.d; ++j)
        out.push_back(FactorShape::linear(F.mul(root, gamma_pow(j))));
    }
  }

  // q = 1 (mod 4): binomial factors x^(2^r) - alpha_{2^s}^(2i-1) gamma^j.
  void emit_alpha_binomials(std::vector<FactorShape>& out, unsigned r) const {
    Fq alpha = roots.alphas[F.s() - 1];
    std::uint64_t count = std::uint64_t{1} << (F.s() - 1);
    for (std::uint64_t i = 1; i <= count; ++i) {
      Fq root = F.pow(alpha, 2 * i - 1);
      for (std::uint64_t j = 0; j < roots.d; ++j)
        out.push_back(FactorShape::binomial(r, F.mul(root, gamma_pow(j))));
    }
  }

  // q = 3 (mod 4): the level-k factors of Phi_{2^k}(x^(2^r d)).  Levels
  // 2..u-1 give quadratics x^2 - gamma^j T x + gamma^(2j) (r = 0 there);
  // level u gives trinomials with constant -gamma^(2j).
  void emit_trace_shapes(std::vector<FactorShape>& out, unsigned level,
                         unsigned r) const {
    Fq chi = (level == u()) ? F.element(-1) : F.one();
    std::vector<Fq> ts = level_traces(level);
    for (std::uint64_t j = 0; j < roots.d; ++j) {
      Fq gj = gamma_pow(j);
      Fq g2j = F.mul(gj, gj);
      Fq constant = F.mul(chi, g2j);
      for (Fq t : ts) {
        out.push_back(FactorShape::trinomial(
            F, r, F.neg(F.mul(gj, t)), constant));
      }
    }
  }
};

std::vector<LadderBlock> build_ladder(const FieldCtx& F, std::uint64_t d,
                                      unsigned n) {
  validate_inputs(F, d, n);
  Emitter em(F, d);
  std::vector<LadderBlock> blocks;

  auto block_poly = [&](unsigned k, unsigned r) {
    // Phi_{2^k}(x^(2^r d)) = x^(2^(k-1+r) d) + 1 for k >= 1.
    if (k == 0) return Polynomial::x_pow_minus_c(F, d, F.one());
    std::uint64_t deg = (std::uint64_t{1} << (k - 1 + r)) * d;
    return Polynomial::x_pow_minus_c(F, deg, F.element(-1));
  };

  if (F.q() % 4 == 1) {
    const unsigned s = F.s();
    LadderBlock base{0, 0, block_poly(0, 0), {}};
    em.emit_linears(base.factors, false);
    blocks.push_back(std::move(base));
    for (unsigned k = 1; k <= std::min(n, s); ++k) {
      LadderBlock b{k, 0, block_poly(k, 0), {}};
      em.emit_alpha_linears(b.factors, k);
      blocks.push_back(std::move(b));
    }
    for (unsigned r = 1; n > s && r <= n - s; ++r) {
      LadderBlock b{s, r, block_poly(s, r), {}};
      em.emit_alpha_binomials(b.factors, r);
      blocks.push_back(std::move(b));
    }
  } else {
    // s = 1: the ladder is x^d - 1 and Phi_2(x^(2^r d)) = Phi_{2^(r+1)}(x^d)
    // for r = 0..n-1; each level r+1 splits by traces.
    const unsigned u = em.u();
    LadderBlock base{0, 0, block_poly(0, 0), {}};
    em.emit_linears(base.factors, false);
    blocks.push_back(std::move(base));
    for (unsigned r = 0; r < n; ++r) {
      unsigned level = r + 1;
      LadderBlock b{1, r, block_poly(1, r), {}};
      if (level == 1) {
        em.emit_linears(b.factors, true);
      } else if (level <= u - 1) {
        em.emit_trace_shapes(b.factors, level, 0);
      } else {
        em.emit_trace_shapes(b.factors, u, level - u);
      }
      blocks.push_back(std::move(b));
    }
  }
  return blocks;
}

Factorization from_blocks(const FieldCtx& F, std::uint64_t d, unsigned n,
                          CaseTag tag,
                          const std::vector<LadderBlock>& blocks) {
  std::vector<FactorShape> all;
  for (const auto& b : blocks)
    all.insert(all.end(), b.factors.begin(), b.factors.end());
  return Factorization({F.q(), d, n, tag, ModulusKind::x2nd_minus_one},
                       std::move(all));
}

}  // namespace

std::vector<LadderBlock> cyclotomic_ladder(const FieldCtx& F, std::uint64_t d,
                                           unsigned n) {
  return build_ladder(F, d, n);
}

Factorization factor_x2nd_minus_1(const FieldCtx& F, std::uint64_t d,
                                  unsigned n) {
  CaseTag tag = (F.q() % 4 == 1) ? CaseTag::q1mod4 : CaseTag::q3mod4;
  return from_blocks(F, d, n, tag, build_ladder(F, d, n));
}

Factorization factor_special(const FieldCtx& F, unsigned n) {
  if (n == 0) fail(errc::degenerate_n, "n must be >= 1");

  if (auto t2 = special_pair_2t1(F)) {
    // q = 2t+1: powers of 4 drive every coefficient.
    const std::uint64_t t = *t2;
    validate_inputs(F, t, n);
    Emitter em(F, t);
    const unsigned u = em.u();
    std::vector<FactorShape> out;
    const Fq four = F.element(4);
    for (std::uint64_t j = 0; j < t; ++j) {
      Fq fj = F.pow(four, j);
      Fq f2j = F.mul(fj, fj);
      out.push_back(FactorShape::linear(fj));
      out.push_back(FactorShape::linear(F.neg(fj)));
      for (unsigned k = 2; k <= std::min(n, u - 1); ++k) {
        for (Fq tr : em.level_traces(k))
          out.push_back(
              FactorShape::trinomial(F, 0, F.neg(F.mul(fj, tr)), f2j));
      }
      if (n >= u) {
        for (unsigned r = 0; r <= n - u; ++r) {
          for (Fq tr : em.level_traces(u))
            out.push_back(FactorShape::trinomial(
                F, r, F.neg(F.mul(fj, tr)), F.neg(f2j)));
        }
      }
    }
    return Factorization(
        {F.q(), t, n, CaseTag::special_2t1, ModulusKind::x2nd_minus_one},
        std::move(out));
  }

  if (auto t4 = special_pair_4t1(F)) {
    // q = 4t+1: (x +- 16^j)(x +- sqrt(-1) 16^j) and the binomial towers.
    const std::uint64_t t = *t4;
    validate_inputs(F, t, n);
    RootSet roots = build_rootset(F, t);
    const Fq i = *roots.sqrt_minus_one;
    std::vector<FactorShape> out;
    for (std::uint64_t j = 0; j < t; ++j) {
      Fq gj = F.pow(F.element(16), j);
      out.push_back(FactorShape::linear(gj));
      out.push_back(FactorShape::linear(F.neg(gj)));
      if (n >= 2) {
        Fq igj = F.mul(i, gj);
        out.push_back(FactorShape::linear(igj));
        out.push_back(FactorShape::linear(F.neg(igj)));
        for (unsigned r = 1; r <= n - 2; ++r) {
          out.push_back(FactorShape::binomial(r, igj));
          out.push_back(FactorShape::binomial(r, F.neg(igj)));
        }
      }
    }
    return Factorization(
        {F.q(), t, n, CaseTag::special_4t1, ModulusKind::x2nd_minus_one},
        std::move(out));
  }

  fail(errc::not_special_prime_pair,
       "q is neither 2t+1 nor 4t+1 with t prime");
}

Factorization factor_cyclotomic(const FieldCtx& F, std::uint64_t d,
                                unsigned n) {
  if (d < 3 || !is_prime_u64(d))
    fail(errc::bad_divisor, "d must be an odd prime");
  validate_inputs(F, d, n);

  Emitter em(F, d);
  std::vector<FactorShape> out;
  CaseTag tag;
  if (F.q() % 4 == 1) {
    const unsigned s = F.s();
    if (n < s) fail(errc::n_too_small, "need n >= s for irreducible factors");
    tag = CaseTag::q1mod4;
    Fq alpha = em.roots.alphas[s - 1];
    std::uint64_t count = std::uint64_t{1} << (s - 1);
    for (std::uint64_t i = 1; i <= count; ++i) {
      Fq root = F.pow(alpha, 2 * i - 1);
      for (std::uint64_t j = 1; j < d; ++j)
        out.push_back(
            FactorShape::binomial(n - s, F.mul(root, em.gamma_pow(j))));
    }
  } else {
    const unsigned u = em.u();
    if (n < u) fail(errc::n_too_small, "need n >= u for irreducible factors");
    tag = CaseTag::q3mod4;
    std::vector<Fq> ts = em.level_traces(u);
    for (std::uint64_t j = 1; j < d; ++j) {
      Fq gj = em.gamma_pow(j);
      Fq constant = F.neg(F.mul(gj, gj));  // chi(beta_{2^u}) = -1
      for (Fq tr : ts)
        out.push_back(FactorShape::trinomial(F, n - u, F.neg(F.mul(gj, tr)),
                                             constant));
    }
  }
  return Factorization({F.q(), d, n, tag, ModulusKind::cyclotomic},
                       std::move(out));
}

Factorization factor_cyclotomic_special(const FieldCtx& F, unsigned n) {
  CaseTag tag;
  std::uint64_t t;
  if (auto t2 = special_pair_2t1(F)) {
    tag = CaseTag::special_2t1;
    t = *t2;
  } else if (auto t4 = special_pair_4t1(F)) {
    tag = CaseTag::special_4t1;
    t = *t4;
  } else {
    fail(errc::not_special_prime_pair,
         "q is neither 2t+1 nor 4t+1 with t prime");
  }
  Factorization general = factor_cyclotomic(F, t, n);
  return Factorization({F.q(), t, n, tag, ModulusKind::cyclotomic},
                       std::vector<FactorShape>(general.factors()));
}

VerifyReport verify_factorization(const FieldCtx& F, const Factorization& f) {
  VerifyReport report;
  Polynomial modulus = f.modulus(F);

  std::vector<Polynomial> expanded;
  expanded.reserve(f.count());
  for (const auto& shape : f.factors()) expanded.push_back(shape.expand(F));

  Polynomial product = Polynomial::constant(F.one());
  for (const auto& p : expanded) product = poly_mul(F, product, p);
  report.product_ok = product == modulus;

  report.irreducible_ok = true;
  for (const auto& p : expanded) {
    if (!is_irreducible(F, p)) {
      report.irreducible_ok = false;
      break;
    }
  }

  if (modulus.degree() <= 4096 && F.q() < (std::uint64_t{1} << 16)) {
    std::vector<Polynomial> oracle = brute_factor(F, modulus);
    std::sort(expanded.begin(), expanded.end());
    report.oracle_match = oracle == expanded;
  }
  return report;
}

}  // namespace cyclofactor
