#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cyclofactor/document.hpp"
#include "cyclofactor/golden.hpp"

namespace {

using namespace cyclofactor;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerifyFailed = 2;

struct CommonFlags {
  std::uint64_t q = 0;
  std::uint64_t d = 0;
  bool special = false;
  unsigned n = 1;
  bool verify = false;
  std::string format = "text";
  std::string pretty = "canonical";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool needs_d) {
  cmd->add_option("--q", flags.q, "odd prime modulus")->required();
  if (needs_d) {
    auto* d_opt = cmd->add_option("--d", flags.d, "odd divisor of q-1");
    auto* s_opt = cmd->add_flag(
        "--special", flags.special,
        "use the prime-pair templates (q=2t+1 or q=4t+1) and infer d=t");
    d_opt->excludes(s_opt);
    s_opt->excludes(d_opt);
  }
  cmd->add_option("--n", flags.n, "power-of-two exponent")->required();
  cmd->add_flag("--verify", flags.verify,
                "check the output against the polynomial oracle");
  cmd->add_option("--format", flags.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--pretty", flags.pretty,
                  "coefficient rendering: canonical or balanced")
      ->check(CLI::IsMember({"canonical", "balanced"}));
  cmd->add_option("--out", flags.out_path, "write output to a file atomically");
}

int emit_document(const FieldCtx& F, const Factorization& fact,
                  const CommonFlags& flags) {
  PrettyMode mode = flags.pretty == "balanced" ? PrettyMode::balanced
                                               : PrettyMode::canonical;
  OutputDocument doc = build_document(F, fact, mode, flags.verify);
  std::string rendered =
      flags.format == "json" ? render_json(doc) : render_text(doc);
  if (!flags.out_path.empty())
    write_atomic(flags.out_path, rendered);
  else
    std::cout << rendered;
  if (doc.verification) {
    const auto& v = *doc.verification;
    if (!v.product_ok || !v.irreducible_ok ||
        (v.oracle_match && !*v.oracle_match)) {
      std::cerr << "verification failed\n";
      return kExitVerifyFailed;
    }
  }
  return kExitOk;
}

int run_factor(const CommonFlags& flags, bool cyclotomic) {
  if (!flags.special && flags.d == 0) {
    std::cerr << "error: one of --d or --special is required\n";
    return kExitInputError;
  }
  FieldCtx F(flags.q);
  Factorization fact = [&] {
    if (cyclotomic)
      return flags.special ? factor_cyclotomic_special(F, flags.n)
                           : factor_cyclotomic(F, flags.d, flags.n);
    return flags.special ? factor_special(F, flags.n)
                         : factor_x2nd_minus_1(F, flags.d, flags.n);
  }();
  return emit_document(F, fact, flags);
}

int run_subgroup(std::uint64_t q, const std::string& format,
                 const std::string& out_path) {
  FieldCtx F(q);
  SubgroupReport report = subgroup_report(F);
  std::string rendered = format == "json" ? render_subgroup_json(report)
                                          : render_subgroup_text(report);
  if (!out_path.empty())
    write_atomic(out_path, rendered);
  else
    std::cout << rendered;
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int run_examples_cmd(std::optional<std::uint64_t> only_q) {
  std::vector<ExampleOutcome> outcomes = run_examples(only_q);
  if (outcomes.empty()) {
    std::cerr << "error: no example with that q\n";
    return kExitInputError;
  }
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    std::printf("example %d (q=%llu) %s: %s\n", o.number,
                static_cast<unsigned long long>(o.q), o.title.c_str(),
                o.passed ? "PASS" : "FAIL");
    for (const auto& note : o.notes) std::printf("  %s\n", note.c_str());
    passed += o.passed;
  }
  std::printf("%zu/%zu examples passed\n", passed, outcomes.size());
  return passed == outcomes.size() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "explicit factorization of x^(2^n*d)-1 and cyclotomic polynomials "
      "over prime fields"};
  app.require_subcommand(1);

  CommonFlags factor_flags, cyclo_flags;
  auto* factor_cmd =
      app.add_subcommand("factor", "factor x^(2^n*d)-1 over F_q");
  add_common(factor_cmd, factor_flags, true);
  auto* cyclo_cmd = app.add_subcommand(
      "cyclotomic", "factor the cyclotomic polynomial of index 2^n*d");
  add_common(cyclo_cmd, cyclo_flags, true);

  std::uint64_t subgroup_q = 0;
  std::string subgroup_format = "text", subgroup_out;
  auto* subgroup_cmd = app.add_subcommand(
      "subgroup", "report the square and odd-order subgroup structure");
  subgroup_cmd->add_option("--q", subgroup_q, "odd prime modulus")->required();
  subgroup_cmd->add_option("--format", subgroup_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  subgroup_cmd->add_option("--out", subgroup_out,
                           "write output to a file atomically");

  std::uint64_t only_q = 0;
  auto* examples_cmd = app.add_subcommand(
      "examples", "rerun the five recorded worked examples and diff them");
  auto* only_opt =
      examples_cmd->add_option("--only", only_q, "restrict to one q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (factor_cmd->parsed()) return run_factor(factor_flags, false);
    if (cyclo_cmd->parsed()) return run_factor(cyclo_flags, true);
    if (subgroup_cmd->parsed())
      return run_subgroup(subgroup_q, subgroup_format, subgroup_out);
    if (examples_cmd->parsed()) {
      return run_examples_cmd(only_opt->count()
                                  ? std::optional<std::uint64_t>(only_q)
                                  : std::nullopt);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << " [" << errc_name(e.code())
              << "]\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
