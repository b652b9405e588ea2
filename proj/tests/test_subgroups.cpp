#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>

#include "cyclofactor/subgroups.hpp"

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

std::vector<std::uint64_t> odd_primes_below(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 3; q < bound; q += 2)
    if (is_prime_u64(q)) out.push_back(q);
  return out;
}

ClaimStatus claim(const SubgroupReport& r, const std::string& name) {
  for (const auto& c : r.claims)
    if (c.name == name) return c.status;
  FAIL("unknown claim ", name);
  return ClaimStatus::fail;
}

}  // namespace

TEST_CASE("is_square and has_odd_order") {
  FieldCtx f53(53);
  CHECK(is_square(f53, Fq{13}));
  CHECK(!is_square(f53, Fq{2}));
  CHECK(is_square(f53, Fq{1}));
  CHECK(code_of([&] { is_square(f53, Fq{0}); }) == errc::zero_element);

  FieldCtx f23(23);
  CHECK(has_odd_order(f23, Fq{4}));
  CHECK(has_odd_order(f53, Fq{16}));
  for (std::uint64_t q : {23ull, 53ull}) {
    FieldCtx F(q);
    CHECK(!has_odd_order(F, F.element(-1)));
  }
}

TEST_CASE("subgroup_report on the recorded primes") {
  {
    FieldCtx F(23);
    SubgroupReport r = subgroup_report(F);
    CHECK(r.is_2t1_pair);
    CHECK(r.special_t == 11);
    CHECK(r.o_q_generator == Fq{4});
    CHECK(r.o_q_order == 11);
    CHECK(r.s_q_order == 11);
    CHECK(r.all_passed());
    CHECK(claim(r, "pair_2t1_squares_generated_by_4") == ClaimStatus::pass);
    CHECK(claim(r, "pair_4t1_order_of_t") == ClaimStatus::not_applicable);
  }
  {
    FieldCtx F(53);
    SubgroupReport r = subgroup_report(F);
    CHECK(r.is_4t1_pair);
    CHECK(r.special_t == 13);
    CHECK(F.element_order(Fq{13}) == 13);
    CHECK(r.o_q_generator == Fq{16});
    CHECK(r.s_q_generator == Fq{4});
    CHECK(r.all_passed());
    CHECK(claim(r, "pair_4t1_sqrt_t_is_square") == ClaimStatus::pass);
  }
  {
    // The boundary case q = 13 = 4*3+1: the generator claims hold here too,
    // decided by direct order computation.
    FieldCtx F(13);
    SubgroupReport r = subgroup_report(F);
    CHECK(r.is_4t1_pair);
    CHECK(r.special_t == 3);
    CHECK(claim(r, "pair_4t1_order_of_4") == ClaimStatus::pass);
    CHECK(claim(r, "pair_4t1_order_of_16") == ClaimStatus::pass);
    CHECK(r.all_passed());
  }
  {
    FieldCtx F(3);
    SubgroupReport r = subgroup_report(F);
    CHECK(r.o_q_order == 1);
    CHECK(r.s_q_order == 1);
    CHECK(r.all_passed());
  }
}

TEST_CASE("subgroup_report above the enumeration cap uses order checks") {
  // 10007 = 2*5003 + 1 with 5003 prime, well above the exhaustive-count
  // threshold.
  FieldCtx F(10007);
  SubgroupReport r = subgroup_report(F);
  CHECK(r.is_2t1_pair);
  CHECK(r.special_t == 5003);
  CHECK(r.o_q_order == 5003);
  CHECK(r.s_q_order == 5003);
  CHECK(r.o_q_generator == Fq{4});
  CHECK(r.all_passed());
}

TEST_CASE("subgroup orders and inclusion for all odd primes below 2000") {
  for (std::uint64_t q : odd_primes_below(2000)) {
    FieldCtx F(q);
    SubgroupReport r = subgroup_report(F);
    CHECK(r.all_passed());
    CHECK(r.o_q_order == F.t_odd());
    CHECK(r.s_q_order == (q - 1) / 2);
    CHECK(r.s_q_order - r.o_q_order ==
          ((std::uint64_t{1} << (F.s() - 1)) - 1) * F.t_odd());
    CHECK((r.o_q_order == r.s_q_order) == (q % 4 == 3));
  }
}

TEST_CASE("powers of 4 are exactly the squares when q = 2t+1, q < 2000") {
  for (std::uint64_t q : odd_primes_below(2000)) {
    FieldCtx F(q);
    auto t = special_pair_2t1(F);
    if (!t) continue;
    std::set<std::uint64_t> squares, powers;
    for (std::uint64_t a = 1; a < q; ++a)
      if (F.legendre(Fq{a}) == 1) squares.insert(a);
    Fq p = F.one();
    for (std::uint64_t j = 0; j < *t; ++j) {
      powers.insert(p.value);
      p = F.mul(p, Fq{4});
    }
    CHECK(squares == powers);
  }
}

TEST_CASE("generator orders for q = 4t+1 pairs below 2000") {
  for (std::uint64_t q : odd_primes_below(2000)) {
    FieldCtx F(q);
    auto t = special_pair_4t1(F);
    if (!t) continue;
    CHECK(F.element_order(F.element(*t)) == *t);
    CHECK(F.element_order(Fq{4}) == 2 * *t);
    CHECK(F.element_order(Fq{16}) == *t);
    Fq rt = F.sqrt(F.element(*t));
    CHECK(is_square(F, rt));
  }
}

TEST_CASE("legendre(2) follows the eighth-power rule below 2000") {
  for (std::uint64_t q : odd_primes_below(2000)) {
    FieldCtx F(q);
    bool expected = (q % 8 == 1 || q % 8 == 7);
    CHECK((F.legendre(Fq{2}) == 1) == expected);
    if (q < 211) {
      bool seen = false;
      for (std::uint64_t a = 1; a < q && !seen; ++a)
        seen = F.mul(Fq{a}, Fq{a}) == Fq{2};
      CHECK(seen == expected);
    }
  }
}

TEST_CASE("build_rootset") {
  {
    FieldCtx F(149);
    RootSet rs = build_rootset(F, 37);
    CHECK(rs.gamma == Fq{16});
    CHECK(F.element_order(rs.gamma) == 37);
    REQUIRE(rs.sqrt_minus_one.has_value());
    CHECK((rs.sqrt_minus_one->value == 44 || rs.sqrt_minus_one->value == 105));
    CHECK(*rs.sqrt_minus_one == Fq{105});  // 2 * 16^9 = -44
    CHECK(F.mul(*rs.sqrt_minus_one, *rs.sqrt_minus_one) == F.element(-1));
    REQUIRE(rs.sqrt_t.has_value());
    CHECK(F.mul(*rs.sqrt_t, *rs.sqrt_t) == Fq{37});
  }
  {
    FieldCtx F(23);
    RootSet rs = build_rootset(F, 11);
    CHECK(rs.gamma == Fq{4});
    CHECK(F.element_order(rs.gamma) == 11);
    CHECK(!rs.sqrt_minus_one.has_value());
    CHECK(rs.alphas.size() == 1);
    CHECK(rs.alphas[0] == F.element(-1));
  }
  {
    FieldCtx F(53);
    RootSet rs = build_rootset(F, 13);
    REQUIRE(rs.sqrt_t.has_value());
    CHECK(*rs.sqrt_t == Fq{15});  // 16^3, the paper's choice; pair {15, 38}
    CHECK(*rs.sqrt_minus_one == Fq{30});
  }
  {
    FieldCtx F(23);
    RootSet rs = build_rootset(F, 1);
    CHECK(rs.gamma == Fq{1});
  }

  FieldCtx F(23);
  CHECK(code_of([&] { build_rootset(F, 2); }) == errc::bad_divisor);
  CHECK(code_of([&] { build_rootset(F, 7); }) == errc::bad_divisor);

  // Non-special q: gamma falls back to g^((q-1)/d) and alphas have exact
  // 2-power orders.
  FieldCtx f89(89);  // 89 = 8*11+1, not a prime pair
  RootSet rs = build_rootset(f89, 11);
  CHECK(f89.element_order(rs.gamma) == 11);
  REQUIRE(rs.alphas.size() == 3);
  for (unsigned k = 1; k <= 3; ++k)
    CHECK(f89.element_order(rs.alphas[k - 1]) == (std::uint64_t{1} << k));
  CHECK(rs.sqrt_minus_one.has_value());
  CHECK(!rs.sqrt_t.has_value());
}
