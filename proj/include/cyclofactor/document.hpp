#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclofactor/factor.hpp"

namespace cyclofactor {

enum class PrettyMode { canonical, balanced };

struct FactorRecord {
  std::string shape;  // "linear" | "binomial" | "trinomial"
  unsigned r = 0;
  std::vector<std::uint64_t> coefficients;  // [c] or [a, c]
  std::string pretty;
  bool operator==(const FactorRecord&) const = default;
};

struct VerificationRecord {
  bool product_ok = false;
  bool irreducible_ok = false;
  std::optional<bool> oracle_match;
  bool operator==(const VerificationRecord&) const = default;
};

// The machine-readable result of one factor/cyclotomic command.
struct OutputDocument {
  std::uint64_t q = 0;
  std::uint64_t d = 1;
  unsigned n = 1;
  std::string case_tag;
  std::string modulus;  // e.g. "x^352-1" or "Phi_352"
  std::uint64_t count = 0;
  std::vector<FactorRecord> factors;
  std::optional<VerificationRecord> verification;
  bool operator==(const OutputDocument&) const = default;
};

// Renders one factor in the paper's display style, canonical residues by
// default ("x^4 + 16*x^2 + 7") or balanced residues on request
// ("x^4 - 7*x^2 + 7").
std::string pretty_factor(const FieldCtx& F, const FactorShape& shape,
                          PrettyMode mode);

// Inverse of pretty_factor for both modes.
FactorShape parse_pretty(const FieldCtx& F, std::string_view text);

OutputDocument build_document(const FieldCtx& F, const Factorization& f,
                              PrettyMode mode, bool verify);

std::string render_text(const OutputDocument& doc);
std::string render_json(const OutputDocument& doc);
OutputDocument document_from_json(const std::string& text);

std::string render_subgroup_text(const SubgroupReport& r);
std::string render_subgroup_json(const SubgroupReport& r);

// Write-temp-then-rename so readers never observe a partial file.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace cyclofactor
