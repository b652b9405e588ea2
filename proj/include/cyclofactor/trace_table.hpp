#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "cyclofactor/quad_ext.hpp"

namespace cyclofactor {

// The 2^(k-2) distinct traces T(beta_{2^k}^odd) at one level k.  The first
// half comes from the linear recursion, the second half holds the negations
// of the first, so traces[i + 2^(k-3)] = -traces[i].
struct TraceTable {
  unsigned k = 0;
  std::vector<Fq> traces;
};

// Builds trace tables level by level from the recursion
//   T_{2i-1}(beta_{2^k}) = T(beta_{2^k}) T(beta_{2^(k-1)}^(i-1))
//                          - chi(beta_{2^k}) T(beta_{2^k}^(2i-3)),
// seeded with T(beta_4) = 0 and
//   T(beta_{2^k}) = (T(beta_{2^(k-1)}) + 2 chi(beta_{2^k}))^((q+1)/4).
// No extension-field arithmetic is used here; the direct computation lives
// in the tests and cross-checks these values.  Tables are memoized per level
// behind a mutex, so concurrent readers are safe.
class TraceTables {
 public:
  explicit TraceTables(const ExtCtx& ext) : ext_(ext) {}

  // T(beta_{2^k}), built by the closed-form chain; 2 <= k <= u.
  Fq initial_trace(unsigned k) const;

  // The full table at level k; 3 <= k <= u.
  const TraceTable& sequence(unsigned k) const;

 private:
  // T(beta_{2^level}^m) using already-built tables for that level and below.
  Fq trace_of_power(unsigned level, std::uint64_t m) const;
  void ensure_built(unsigned k) const;

  ExtCtx ext_;
  mutable std::map<unsigned, TraceTable> memo_;
  mutable std::mutex mu_;
};

}  // namespace cyclofactor
