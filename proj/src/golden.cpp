#include "cyclofactor/golden.hpp"

#include <algorithm>

#include "cyclofactor/trace_table.hpp"

namespace cyclofactor {

std::vector<std::string> diff_factorization(
    const Factorization& actual, std::uint64_t expected_count,
    std::span<const FactorShape> required_members) {
  std::vector<std::string> notes;
  if (actual.count() != expected_count) {
    notes.push_back("count mismatch: expected " +
                    std::to_string(expected_count) + ", got " +
                    std::to_string(actual.count()));
  }
  for (const auto& shape : required_members) {
    if (!std::binary_search(actual.factors().begin(), actual.factors().end(),
                            shape, shape_less)) {
      std::string which;
      switch (shape.tag()) {
        case ShapeTag::linear:
          which = "linear c=" + std::to_string(shape.c().value);
          break;
        case ShapeTag::binomial:
          which = "binomial r=" + std::to_string(shape.r()) +
                  " c=" + std::to_string(shape.c().value);
          break;
        case ShapeTag::trinomial:
          which = "trinomial r=" + std::to_string(shape.r()) +
                  " a=" + std::to_string(shape.a().value) +
                  " c=" + std::to_string(shape.c().value);
          break;
      }
      notes.push_back("missing factor: " + which);
    }
  }
  return notes;
}

namespace {

void note_if(std::vector<std::string>& notes, bool ok, std::string text) {
  if (!ok) notes.push_back(std::move(text));
}

// q = 347 = 2*173+1: u = 3, T(beta_8) = 107, gamma = 4; x^(173*2^n) - 1
// splits into 173(2n-1) factors for n >= 3.
ExampleOutcome example_1() {
  ExampleOutcome out{1, 347, "x^(173*2^n)-1 over F_347", false, {}};
  FieldCtx F(347);
  ExtCtx ext(F);
  TraceTables tt(ext);
  note_if(out.notes, ext.u() == 3, "u != 3");
  note_if(out.notes, tt.initial_trace(3) == Fq{107}, "T(beta_8) != 107");

  for (unsigned n : {3u, 4u}) {
    Factorization f = factor_special(F, n);
    std::vector<FactorShape> required = {
        FactorShape::linear(F.element(1)),
        FactorShape::linear(F.element(-1)),
        FactorShape::binomial(1, F.element(-1)),  // x^2 + 1
        // x^2 +- 107x - 1
        FactorShape::trinomial(F, 0, F.element(107), F.element(-1)),
        FactorShape::trinomial(F, 0, F.element(-107), F.element(-1)),
    };
    if (n == 4) {
      // x^4 +- 107x^2 - 1
      required.push_back(FactorShape::trinomial(F, 1, F.element(107),
                                                F.element(-1)));
      required.push_back(FactorShape::trinomial(F, 1, F.element(-107),
                                                F.element(-1)));
    }
    auto notes = diff_factorization(f, 173 * (2 * n - 1), required);
    out.notes.insert(out.notes.end(), notes.begin(), notes.end());
  }
  out.passed = out.notes.empty();
  return out;
}

// q = 23 = 2*11+1: u = 4, traces {+-5} and {4, 7, 19, 16}; 143 and 187
// factors for x^352-1 and x^704-1; Phi_352 has 40 quartic trinomials.
ExampleOutcome example_2() {
  ExampleOutcome out{2, 23, "x^352-1, x^704-1 and Phi_352 over F_23", false, {}};
  FieldCtx F(23);
  ExtCtx ext(F);
  TraceTables tt(ext);
  note_if(out.notes, ext.u() == 4, "u != 4");
  note_if(out.notes, tt.initial_trace(3) == F.element(-5),
          "T(beta_8) != -5");
  note_if(out.notes, tt.initial_trace(4) == Fq{4}, "T(beta_16) != 4");
  note_if(out.notes,
          tt.sequence(4).traces ==
              std::vector<Fq>{Fq{4}, Fq{7}, Fq{19}, Fq{16}},
          "trace table at k=4 != {4, 7, 19, 16}");

  Factorization f352 = factor_x2nd_minus_1(F, 11, 5);
  std::vector<FactorShape> req352 = {
      // x^2 +- 5x + 1 (level 3, j = 0)
      FactorShape::trinomial(F, 0, Fq{5}, Fq{1}),
      FactorShape::trinomial(F, 0, F.element(-5), Fq{1}),
      // x^2 +- 4x - 1 and x^2 +- 7x - 1 (level 4, j = 0)
      FactorShape::trinomial(F, 0, Fq{4}, F.element(-1)),
      FactorShape::trinomial(F, 0, Fq{19}, F.element(-1)),
      FactorShape::trinomial(F, 0, Fq{7}, F.element(-1)),
      FactorShape::trinomial(F, 0, Fq{16}, F.element(-1)),
  };
  auto notes = diff_factorization(f352, 143, req352);
  out.notes.insert(out.notes.end(), notes.begin(), notes.end());

  Factorization f704 = factor_x2nd_minus_1(F, 11, 6);
  notes = diff_factorization(f704, 187, {});
  out.notes.insert(out.notes.end(), notes.begin(), notes.end());

  // Phi_352: (x^4 +- 4^j*4 x^2 - 16^j)(x^4 +- 4^j*7 x^2 - 16^j), j = 1..10.
  Factorization phi = factor_cyclotomic(F, 11, 5);
  std::vector<FactorShape> req_phi;
  for (std::uint64_t j = 1; j <= 10; ++j) {
    Fq gj = F.pow(Fq{4}, j);
    Fq c = F.neg(F.mul(gj, gj));
    for (std::uint64_t eta : {4ull, 7ull}) {
      req_phi.push_back(
          FactorShape::trinomial(F, 1, F.mul(gj, Fq{eta}), c));
      req_phi.push_back(
          FactorShape::trinomial(F, 1, F.neg(F.mul(gj, Fq{eta})), c));
    }
  }
  notes = diff_factorization(phi, 40, req_phi);
  out.notes.insert(out.notes.end(), notes.begin(), notes.end());

  out.passed = out.notes.empty();
  return out;
}

// q = 149 = 4*37+1: sqrt(-1) = 2*16^9 = 105 (the pair {44, 105}); 74n
// factors of x^(37*2^n) - 1.
ExampleOutcome example_3() {
  ExampleOutcome out{3, 149, "x^(37*2^n)-1 over F_149", false, {}};
  FieldCtx F(149);
  RootSet roots = build_rootset(F, 37);
  note_if(out.notes, roots.gamma == Fq{16}, "gamma != 16");
  note_if(out.notes,
          roots.sqrt_minus_one && *roots.sqrt_minus_one == Fq{105},
          "canonical sqrt(-1) != 105");

  for (unsigned n : {2u, 3u}) {
    Factorization f = factor_special(F, n);
    std::vector<FactorShape> required = {
        FactorShape::linear(Fq{1}),
        FactorShape::linear(F.element(-1)),
        FactorShape::linear(Fq{105}),  // x - sqrt(-1)
        FactorShape::linear(Fq{44}),   // x + sqrt(-1)
    };
    if (n == 3) {
      required.push_back(FactorShape::binomial(1, Fq{105}));
      required.push_back(FactorShape::binomial(1, Fq{44}));
    }
    auto notes = diff_factorization(f, 74 * n, required);
    out.notes.insert(out.notes.end(), notes.begin(), notes.end());
  }
  out.passed = out.notes.empty();
  return out;
}

// q = 53 = 4*13+1: sqrt(-1) = 2*16^3 = 30 (pair {30, 23}), sqrt(13) = 15
// (pair {15, 38}); 26n factors.
ExampleOutcome example_4() {
  ExampleOutcome out{4, 53, "x^(13*2^n)-1 over F_53", false, {}};
  FieldCtx F(53);
  RootSet roots = build_rootset(F, 13);
  note_if(out.notes, roots.gamma == Fq{16}, "gamma != 16");
  note_if(out.notes,
          roots.sqrt_minus_one && *roots.sqrt_minus_one == Fq{30},
          "canonical sqrt(-1) != 30");
  note_if(out.notes, roots.sqrt_t && *roots.sqrt_t == Fq{15},
          "sqrt(13) != 15");

  for (unsigned n : {2u, 3u}) {
    Factorization f = factor_special(F, n);
    std::vector<FactorShape> required = {
        FactorShape::linear(Fq{1}),
        FactorShape::linear(F.element(-1)),
        FactorShape::linear(Fq{30}),
        FactorShape::linear(Fq{23}),
    };
    auto notes = diff_factorization(f, 26 * n, required);
    out.notes.insert(out.notes.end(), notes.begin(), notes.end());
  }
  out.passed = out.notes.empty();
  return out;
}

// q = 59 = 2*29+1: u = 3, T(beta_8) = 36; Phi_464 is a product of 56
// irreducible trinomials x^4 +- 4^j*36 x^2 - 16^j.
ExampleOutcome example_5() {
  ExampleOutcome out{5, 59, "Phi_464 over F_59", false, {}};
  FieldCtx F(59);
  ExtCtx ext(F);
  TraceTables tt(ext);
  note_if(out.notes, ext.u() == 3, "u != 3");
  note_if(out.notes, tt.initial_trace(3) == Fq{36}, "T(beta_8) != 36");

  Factorization phi = factor_cyclotomic(F, 29, 4);
  std::vector<FactorShape> required;
  for (std::uint64_t j = 1; j <= 28; ++j) {
    Fq gj = F.pow(Fq{4}, j);
    Fq c = F.neg(F.mul(gj, gj));
    required.push_back(FactorShape::trinomial(F, 1, F.mul(gj, Fq{36}), c));
    required.push_back(
        FactorShape::trinomial(F, 1, F.neg(F.mul(gj, Fq{36})), c));
  }
  auto notes = diff_factorization(phi, 56, required);
  out.notes.insert(out.notes.end(), notes.begin(), notes.end());

  for (const auto& shape : phi.factors()) {
    if (!is_irreducible(F, shape.expand(F))) {
      out.notes.push_back("reducible factor emitted");
      break;
    }
  }
  out.passed = out.notes.empty();
  return out;
}

}  // namespace

std::vector<ExampleOutcome> run_examples(std::optional<std::uint64_t> only_q) {
  std::vector<ExampleOutcome> all;
  if (!only_q || *only_q == 347) all.push_back(example_1());
  if (!only_q || *only_q == 23) all.push_back(example_2());
  if (!only_q || *only_q == 149) all.push_back(example_3());
  if (!only_q || *only_q == 53) all.push_back(example_4());
  if (!only_q || *only_q == 59) all.push_back(example_5());
  return all;
}

}  // namespace cyclofactor
