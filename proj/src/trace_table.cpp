#include "cyclofactor/trace_table.hpp"

namespace cyclofactor {

Fq TraceTables::initial_trace(unsigned k) const {
  if (k < 2 || k > ext_.u())
    fail(errc::k_out_of_range, "initial trace level must be in [2, u]");
  const FieldCtx& F = ext_.base();
  Fq t = F.zero();  // T(beta_4) = 0
  for (unsigned j = 3; j <= k; ++j) {
    Fq chi_j = (j == ext_.u()) ? F.element(-1) : F.one();
    Fq arg = F.add(t, F.add(chi_j, chi_j));
    t = F.pow(arg, (F.q() + 1) / 4);
  }
  return t;
}

const TraceTable& TraceTables::sequence(unsigned k) const {
  if (k < 3 || k > ext_.u())
    fail(errc::k_out_of_range, "trace table level must be in [3, u]");
  std::lock_guard lock(mu_);
  ensure_built(k);
  return memo_.at(k);
}

void TraceTables::ensure_built(unsigned k) const {
  for (unsigned lvl = 3; lvl <= k; ++lvl) {
    if (memo_.contains(lvl)) continue;
    const FieldCtx& F = ext_.base();
    std::size_t size = std::size_t{1} << (lvl - 2);
    std::size_t half = size / 2;
    Fq t_lvl = initial_trace(lvl);
    Fq chi_lvl = (lvl == ext_.u()) ? F.element(-1) : F.one();

    TraceTable tab;
    tab.k = lvl;
    tab.traces.resize(size);
    tab.traces[0] = t_lvl;
    for (std::size_t i = 2; i <= half; ++i) {
      Fq mid = trace_of_power(lvl - 1, i - 1);
      tab.traces[i - 1] =
          F.sub(F.mul(t_lvl, mid), F.mul(chi_lvl, tab.traces[i - 2]));
    }
    for (std::size_t i = 0; i < half; ++i)
      tab.traces[half + i] = F.neg(tab.traces[i]);
    memo_.emplace(lvl, std::move(tab));
  }
}

Fq TraceTables::trace_of_power(unsigned level, std::uint64_t m) const {
  const FieldCtx& F = ext_.base();
  Fq two = F.element(2);
  if (level == 0) return two;
  m &= (std::uint64_t{1} << level) - 1;
  if (m == 0) return two;
  if (level == 1) return F.neg(two);  // beta_2 = -1
  if (level == 2) return m == 2 ? F.neg(two) : F.zero();  // beta_4 has order 4
  std::uint64_t half = std::uint64_t{1} << (level - 1);
  if (m >= half) return F.neg(trace_of_power(level, m - half));
  if (m % 2 == 0) return trace_of_power(level - 1, m / 2);
  if (m < half / 2) return memo_.at(level).traces[(m - 1) / 2];
  // Odd exponent in the unindexed quarter: hop to the Frobenius conjugate
  // (same trace), which lands in a handled range.
  return trace_of_power(level, m * ext_.q());
}

}  // namespace cyclofactor
