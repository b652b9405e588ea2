#pragma once

#include <stdexcept>
#include <string>

namespace cyclofactor {

// Reason codes for domain errors. Tests and the CLI match on these rather
// than on message text.
enum class errc {
  not_prime,
  even_modulus,
  modulus_too_large,
  zero_element,
  non_residue,
  order_does_not_divide,
  k_out_of_range,
  division_by_zero,
  bad_divisor,
  degenerate_n,
  not_special_prime_pair,
  non_monic,
  constant_polynomial,
  degree_too_large,
  bad_modulus,
  n_too_small,
  parse_error,
};

constexpr const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::even_modulus: return "EvenModulus";
    case errc::modulus_too_large: return "ModulusTooLarge";
    case errc::zero_element: return "ZeroElement";
    case errc::non_residue: return "NonResidue";
    case errc::order_does_not_divide: return "OrderDoesNotDivide";
    case errc::k_out_of_range: return "KOutOfRange";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::bad_divisor: return "BadDivisor";
    case errc::degenerate_n: return "DegenerateN";
    case errc::not_special_prime_pair: return "NotSpecialPrimePair";
    case errc::non_monic: return "NonMonic";
    case errc::constant_polynomial: return "ConstantPolynomial";
    case errc::degree_too_large: return "DegreeTooLarge";
    case errc::bad_modulus: return "BadModulus";
    case errc::n_too_small: return "NTooSmall";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace cyclofactor
