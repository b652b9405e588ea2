#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclofactor/field.hpp"

namespace cyclofactor {

enum class ClaimStatus { pass, fail, not_applicable };

struct ClaimCheck {
  std::string name;
  ClaimStatus status = ClaimStatus::not_applicable;
  std::string detail;
};

// Structure report for the square subgroup S_q and the odd-order subgroup
// O_q, with the prime-pair generator claims checked against this q.
struct SubgroupReport {
  std::uint64_t q = 0;
  std::optional<std::uint64_t> special_t;  // t with q = 2t+1 or q = 4t+1, both prime
  bool is_2t1_pair = false;
  bool is_4t1_pair = false;
  std::uint64_t s_q_order = 0;
  std::uint64_t o_q_order = 0;
  Fq o_q_generator{};
  std::optional<Fq> s_q_generator;
  std::vector<ClaimCheck> claims;

  bool all_passed() const;
};

// The canonical roots feeding the factor templates: a primitive d-th root
// gamma, the 2-power roots alpha_{2^k} for k = 1..s, and (when they exist in
// F_q) square roots of -1 and of t.
struct RootSet {
  std::uint64_t d = 1;
  Fq gamma{};
  std::vector<Fq> alphas;            // alphas[k-1] = alpha_{2^k}, k = 1..s
  std::optional<Fq> sqrt_minus_one;  // present iff q = 1 (mod 4)
  std::optional<Fq> sqrt_t;          // present iff q = 4t+1 with t prime
};

bool is_square(const FieldCtx& F, Fq a);
bool has_odd_order(const FieldCtx& F, Fq a);

// When q = 2t+1 (resp. q = 4t+1) with t prime, returns t.
std::optional<std::uint64_t> special_pair_2t1(const FieldCtx& F);
std::optional<std::uint64_t> special_pair_4t1(const FieldCtx& F);

SubgroupReport subgroup_report(const FieldCtx& F);

// Requires d odd with d | q-1.  In the prime-pair cases with d = t the
// generators are pinned to 4 (q = 2t+1) and 16 (q = 4t+1) so that emitted
// coefficients are reproducible; otherwise gamma = g^((q-1)/d).
RootSet build_rootset(const FieldCtx& F, std::uint64_t d);

}  // namespace cyclofactor
