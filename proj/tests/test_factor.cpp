#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>

#include "cyclofactor/factor.hpp"
#include "cyclofactor/trace_table.hpp"

using namespace cyclofactor;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return errc::not_prime;
}

std::vector<std::uint64_t> odd_divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= m; d += 2)
    if (m % d == 0) out.push_back(d);
  return out;
}

std::vector<Polynomial> expand_sorted(const FieldCtx& F,
                                      const Factorization& f) {
  std::vector<Polynomial> out;
  for (const auto& s : f.factors()) out.push_back(s.expand(F));
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial product_of(const FieldCtx& F, const Factorization& f) {
  Polynomial p = Polynomial::constant(F.one());
  for (const auto& s : f.factors()) p = poly_mul(F, p, s.expand(F));
  return p;
}

}  // namespace

TEST_CASE("expand") {
  FieldCtx F(23);
  CHECK(FactorShape::linear(Fq{5}).expand(F) ==
        Polynomial::from_coeffs(F, {-5, 1}));
  CHECK(FactorShape::binomial(2, Fq{3}).expand(F) ==
        Polynomial::from_coeffs(F, {-3, 0, 0, 0, 1}));
  CHECK(FactorShape::trinomial(F, 1, Fq{7}, Fq{3}).expand(F) ==
        Polynomial::from_coeffs(F, {3, 0, 7, 0, 1}));
}

TEST_CASE("shape canonicalization") {
  FieldCtx F(23);
  CHECK(FactorShape::binomial(0, Fq{5}) == FactorShape::linear(Fq{5}));
  // Zero middle coefficient collapses to a binomial: x^2 + c = x^2 - (-c).
  CHECK(FactorShape::trinomial(F, 0, Fq{0}, Fq{4}) ==
        FactorShape::binomial(1, F.element(-4)));
  CHECK(FactorShape::linear(Fq{5}).degree() == 1);
  CHECK(FactorShape::binomial(3, Fq{5}).degree() == 8);
  CHECK(FactorShape::trinomial(F, 3, Fq{1}, Fq{5}).degree() == 16);
}

TEST_CASE("trivial split of x^2 - 1 over F_5") {
  FieldCtx F(5);
  Factorization f = factor_x2nd_minus_1(F, 1, 1);
  REQUIRE(f.count() == 2);
  CHECK(f.factors()[0] == FactorShape::linear(Fq{1}));
  CHECK(f.factors()[1] == FactorShape::linear(Fq{4}));
}

TEST_CASE("recorded factor counts") {
  FieldCtx f23(23);
  CHECK(factor_x2nd_minus_1(f23, 11, 5).count() == 143);
  CHECK(factor_x2nd_minus_1(f23, 11, 6).count() == 187);

  FieldCtx f347(347);
  CHECK(factor_x2nd_minus_1(f347, 173, 3).count() == 865);
}

TEST_CASE("matches the brute-force oracle on x^12 - 1 over F_13") {
  FieldCtx F(13);
  Factorization f = factor_x2nd_minus_1(F, 3, 2);
  Polynomial modulus = Polynomial::x_pow_minus_c(F, 12, F.one());
  CHECK(expand_sorted(F, f) == brute_factor(F, modulus));
}

TEST_CASE("input validation") {
  FieldCtx F(23);
  CHECK(code_of([&] { factor_x2nd_minus_1(F, 4, 2); }) == errc::bad_divisor);
  CHECK(code_of([&] { factor_x2nd_minus_1(F, 7, 2); }) == errc::bad_divisor);
  CHECK(code_of([&] { factor_x2nd_minus_1(F, 11, 0); }) ==
        errc::degenerate_n);
  CHECK(code_of([&] { factor_x2nd_minus_1(F, 11, 39); }) ==
        errc::degenerate_n);
}

TEST_CASE("factor_special agrees with the general route") {
  {
    FieldCtx F(347);
    Factorization special = factor_special(F, 3);
    Factorization general = factor_x2nd_minus_1(F, 173, 3);
    CHECK(special.meta().tag == CaseTag::special_2t1);
    CHECK(special.factors() == general.factors());
  }
  {
    FieldCtx F(53);
    for (unsigned n : {1u, 2u, 3u, 4u}) {
      Factorization special = factor_special(F, n);
      Factorization general = factor_x2nd_minus_1(F, 13, n);
      CHECK(special.meta().tag == CaseTag::special_4t1);
      CHECK(special.count() == (n == 1 ? 26 : 26 * n));
      CHECK(special.factors() == general.factors());
    }
  }
  {
    FieldCtx F(149);
    Factorization f = factor_special(F, 3);
    CHECK(f.count() == 222);
    CHECK(f.factors() == factor_x2nd_minus_1(F, 37, 3).factors());
  }
  // 89 = 8*11 + 1 fits neither prime-pair form.
  FieldCtx f89(89);
  CHECK(code_of([&] { factor_special(f89, 2); }) ==
        errc::not_special_prime_pair);
  FieldCtx f5(5);
  CHECK(code_of([&] { factor_special(f5, 2); }) ==
        errc::not_special_prime_pair);
}

TEST_CASE("cyclotomic factorizations") {
  {
    // Phi_352 over F_23: 40 quartic trinomials with multipliers {4,7,19,16}.
    FieldCtx F(23);
    Factorization phi = factor_cyclotomic(F, 11, 5);
    CHECK(phi.count() == 40);
    CHECK(phi.modulus_degree() == 160);  // phi(352) = 16 * 10
    for (const auto& s : phi.factors()) {
      CHECK(s.tag() == ShapeTag::trinomial);
      CHECK(s.degree() == 4);
    }
    CHECK(product_of(F, phi) == phi.modulus(F));
    CHECK(phi.modulus(F) == cyclotomic_poly(F, 352));
  }
  {
    // Phi_464 over F_59: 56 trinomials x^4 +- 4^j*36 x^2 - 16^j.
    FieldCtx F(59);
    Factorization phi = factor_cyclotomic(F, 29, 4);
    CHECK(phi.count() == 56);
    for (const auto& s : phi.factors())
      CHECK(is_irreducible(F, s.expand(F)));
  }
  {
    // Phi_148 over F_149 splits into linears (x +- sqrt(-1) 16^j).
    FieldCtx F(149);
    Factorization phi = factor_cyclotomic(F, 37, 2);
    CHECK(phi.count() == 72);
    for (const auto& s : phi.factors()) CHECK(s.degree() == 1);
    CHECK(product_of(F, phi) == cyclotomic_poly(F, 148));

    Factorization special = factor_cyclotomic_special(F, 2);
    CHECK(special.meta().tag == CaseTag::special_4t1);
    CHECK(special.factors() == phi.factors());
  }

  FieldCtx F(23);
  CHECK(code_of([&] { factor_cyclotomic(F, 11, 3); }) == errc::n_too_small);
  CHECK(code_of([&] { factor_cyclotomic(F, 9, 5); }) == errc::bad_divisor);
  FieldCtx f13(13);
  CHECK(code_of([&] { factor_cyclotomic(f13, 3, 1); }) == errc::n_too_small);
}

TEST_CASE("cyclotomic ladder blocks") {
  {
    FieldCtx F(23);
    auto blocks = cyclotomic_ladder(F, 11, 1);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].block == Polynomial::x_pow_minus_c(F, 11, F.one()));
    CHECK(blocks[1].block ==
          Polynomial::x_pow_minus_c(F, 11, F.element(-1)));
  }
  {
    FieldCtx F(13);
    auto blocks = cyclotomic_ladder(F, 3, 3);
    Polynomial product = Polynomial::constant(F.one());
    for (const auto& b : blocks) product = poly_mul(F, product, b.block);
    CHECK(product == Polynomial::x_pow_minus_c(F, 24, F.one()));
  }
  {
    // d = 1 reduces to the 2-power ladder.
    FieldCtx F(13);
    auto blocks = cyclotomic_ladder(F, 1, 4);
    CHECK(blocks[0].block == Polynomial::from_coeffs(F, {-1, 1}));
    Polynomial product = Polynomial::constant(F.one());
    for (const auto& b : blocks) product = poly_mul(F, product, b.block);
    CHECK(product == Polynomial::x_pow_minus_c(F, 16, F.one()));
  }

  // Each block's assigned factors multiply back to the block polynomial,
  // in both residue classes of q.
  for (auto [q, d, n] : {std::tuple<std::uint64_t, std::uint64_t, unsigned>{
                             23, 11, 5},
                         {13, 3, 3},
                         {347, 173, 3},
                         {89, 11, 4}}) {
    FieldCtx F(q);
    auto blocks = cyclotomic_ladder(F, d, n);
    std::size_t total = 0;
    for (const auto& b : blocks) {
      Polynomial product = Polynomial::constant(F.one());
      for (const auto& s : b.factors)
        product = poly_mul(F, product, s.expand(F));
      CHECK(product == b.block);
      total += b.factors.size();
    }
    CHECK(total == factor_x2nd_minus_1(F, d, n).count());
  }
}

TEST_CASE("completeness: emitted product is exactly x^(2^n d) - 1") {
  for (std::uint64_t q = 3; q < 300; q += 2) {
    if (!is_prime_u64(q)) continue;
    FieldCtx F(q);
    for (std::uint64_t d : odd_divisors(q - 1)) {
      for (unsigned n = 1; (d << n) <= 4096; ++n) {
        Factorization f = factor_x2nd_minus_1(F, d, n);
        CHECK(product_of(F, f) ==
              Polynomial::x_pow_minus_c(F, d << n, F.one()));
      }
    }
  }
}

TEST_CASE("count formulas on a spot grid") {
  for (std::uint64_t q : {13ull, 29ull, 23ull, 59ull, 89ull, 101ull}) {
    FieldCtx F(q);
    std::optional<ExtCtx> ext;
    if (q % 4 == 3) ext.emplace(F);
    for (std::uint64_t d : odd_divisors(q - 1)) {
      for (unsigned n = 1; (d << n) <= 1024; ++n) {
        std::uint64_t count = factor_x2nd_minus_1(F, d, n).count();
        if (q % 4 == 1) {
          if (n > F.s())
            CHECK(count ==
                  (std::uint64_t{1} << (F.s() - 1)) * (n - F.s() + 2) * d);
          else
            CHECK(count == (std::uint64_t{1} << n) * d);
        } else if (n >= ext->u()) {
          unsigned u = ext->u();
          CHECK(count ==
                d * ((std::uint64_t{1} << (u - 2)) * (n - u + 2) + 1));
        }
      }
    }
  }
}

TEST_CASE("reducibility boundary at the top 2-power level") {
  // Over F_23 (u = 4): level-3 trinomial blocks x^4 - T x^2 + c are
  // reducible; the level-4 factors and x^2 + gamma^j are irreducible, while
  // higher binomials x^(2^r) + gamma^j are reducible.
  FieldCtx F(23);
  ExtCtx E(F);
  TraceTables tt(E);
  RootSet roots = build_rootset(F, 11);

  for (std::uint64_t j : {0ull, 1ull, 5ull}) {
    Fq gj = F.pow(roots.gamma, j);
    Fq g2j = F.mul(gj, gj);
    for (Fq tr : tt.sequence(3).traces) {
      Polynomial block = FactorShape::trinomial(F, 1, F.neg(F.mul(gj, tr)),
                                                g2j)
                             .expand(F);
      CHECK(!is_irreducible(F, block));
    }
    for (Fq tr : tt.sequence(4).traces) {
      Polynomial factor = FactorShape::trinomial(F, 1, F.neg(F.mul(gj, tr)),
                                                 F.neg(g2j))
                              .expand(F);
      CHECK(is_irreducible(F, factor));
    }
    CHECK(is_irreducible(F, FactorShape::binomial(1, F.neg(gj)).expand(F)));
    CHECK(!is_irreducible(F, FactorShape::binomial(2, F.neg(gj)).expand(F)));
  }
}

TEST_CASE("large q and deep towers stay exact") {
  // 65537 = 2^16 + 1: s = 16, t_odd = 1; the n > s branch at scale.
  FieldCtx F(65537);
  Factorization f = factor_x2nd_minus_1(F, 1, 20);
  CHECK(f.count() == (std::uint64_t{1} << 15) * (20 - 16 + 2));
  CHECK(f.meta().tag == CaseTag::q1mod4);
  // Spot-check a binomial factor: top-level roots have order 2^16.
  const FactorShape& top = f.factors().back();
  CHECK(top.degree() == 16);  // 2^(n-s) = 2^4
  CHECK(F.element_order(top.c()) == (std::uint64_t{1} << 16));
}

TEST_CASE("factors are emitted sorted, distinct, deterministically") {
  FieldCtx F(23);
  Factorization a = factor_x2nd_minus_1(F, 11, 5);
  Factorization b = factor_x2nd_minus_1(F, 11, 5);
  CHECK(a.factors() == b.factors());
  CHECK(std::is_sorted(a.factors().begin(), a.factors().end(), shape_less));
  // x^m - 1 is squarefree (gcd(m, q) = 1), so no shape repeats.
  CHECK(std::adjacent_find(a.factors().begin(), a.factors().end()) ==
        a.factors().end());
}

TEST_CASE("verification catches corrupted factorizations") {
  FieldCtx F(23);
  Factorization good = factor_x2nd_minus_1(F, 11, 2);
  VerifyReport ok = verify_factorization(F, good);
  CHECK(ok.product_ok);
  CHECK(ok.irreducible_ok);
  REQUIRE(ok.oracle_match.has_value());
  CHECK(*ok.oracle_match);
  CHECK(ok.all_ok());

  // Drop one factor: the product and the oracle multiset both break.
  std::vector<FactorShape> damaged(good.factors().begin(),
                                   good.factors().end() - 1);
  Factorization bad(good.meta(), damaged);
  VerifyReport rep = verify_factorization(F, bad);
  CHECK(!rep.product_ok);
  REQUIRE(rep.oracle_match.has_value());
  CHECK(!*rep.oracle_match);
  CHECK(!rep.all_ok());

  // Replace a factor with a reducible polynomial of the same degree.
  std::vector<FactorShape> reducible(good.factors().begin(),
                                     good.factors().end());
  reducible.back() = FactorShape::binomial(2, Fq{1});  // x^4 - 1
  VerifyReport rep2 = verify_factorization(F, {good.meta(), reducible});
  CHECK(!rep2.irreducible_ok);
}
