#include "cyclofactor/document.hpp"

#include <cctype>
#include <charconv>
#include <fstream>

#include "json.hpp"

namespace cyclofactor {

namespace {

using ordered_json = nlohmann::ordered_json;

// One printable term: coefficient (canonical residue) at x^exp.
struct Term {
  std::uint64_t coeff;
  std::uint64_t exp;
};

std::vector<Term> shape_terms(const FieldCtx& F, const FactorShape& s) {
  std::vector<Term> terms;
  terms.push_back({1, s.degree()});
  if (s.tag() == ShapeTag::trinomial) {
    terms.push_back({s.a().value, std::uint64_t{1} << s.r()});
    terms.push_back({s.c().value, 0});
  } else {
    terms.push_back({F.neg(s.c()).value, 0});
  }
  return terms;
}

void append_term(std::string& out, const FieldCtx& F, Term t, PrettyMode mode,
                 bool leading) {
  std::uint64_t v = t.coeff;
  bool negative = false;
  if (mode == PrettyMode::balanced && v > (F.q() - 1) / 2) {
    v = F.q() - v;
    negative = true;
  }
  if (!leading) out += negative ? " - " : " + ";
  if (t.exp == 0) {
    out += std::to_string(v);
    return;
  }
  if (v != 1) {
    out += std::to_string(v);
    out += "*";
  }
  out += "x";
  if (t.exp != 1) {
    out += "^";
    out += std::to_string(t.exp);
  }
}

}  // namespace

std::string pretty_factor(const FieldCtx& F, const FactorShape& shape,
                          PrettyMode mode) {
  std::string out;
  bool leading = true;
  for (Term t : shape_terms(F, shape)) {
    if (t.coeff == 0) continue;
    append_term(out, F, t, mode, leading);
    leading = false;
  }
  return out;
}

FactorShape parse_pretty(const FieldCtx& F, std::string_view text) {
  // Terms are "c*x^e", "x^e", "x", or "c", joined by " + " / " - ".
  std::vector<std::pair<std::uint64_t, Fq>> terms;  // (exp, coeff)
  std::size_t pos = 0;
  bool negative = false;
  auto skip_blanks = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_blanks();
  while (pos < text.size()) {
    std::uint64_t coeff = 1, exp = 0;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      auto [next, ec] = std::from_chars(text.data() + pos,
                                        text.data() + text.size(), coeff);
      if (ec != std::errc{}) fail(errc::parse_error, "bad coefficient");
      pos = static_cast<std::size_t>(next - text.data());
      have_coeff = true;
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    if (pos < text.size() && text[pos] == 'x') {
      ++pos;
      exp = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        auto [next, ec] = std::from_chars(text.data() + pos,
                                          text.data() + text.size(), exp);
        if (ec != std::errc{}) fail(errc::parse_error, "bad exponent");
        pos = static_cast<std::size_t>(next - text.data());
      }
    } else if (!have_coeff) {
      fail(errc::parse_error, "expected a term");
    }
    Fq c = F.element(static_cast<std::int64_t>(coeff % F.q()));
    if (negative) c = F.neg(c);
    terms.emplace_back(exp, c);

    skip_blanks();
    if (pos == text.size()) break;
    if (text[pos] == '+') negative = false;
    else if (text[pos] == '-') negative = true;
    else fail(errc::parse_error, "expected + or -");
    ++pos;
    skip_blanks();
  }

  if (terms.size() < 2 || terms.size() > 3 || terms[0].second.value != 1)
    fail(errc::parse_error, "not a monic factor shape");
  std::uint64_t deg = terms[0].first;
  if (deg == 0 || (deg & (deg - 1)) != 0)
    fail(errc::parse_error, "degree must be a power of two");
  unsigned log = 0;
  while ((std::uint64_t{1} << log) < deg) ++log;

  if (terms.size() == 2) {
    if (terms[1].first != 0) fail(errc::parse_error, "missing constant term");
    return FactorShape::binomial(log, F.neg(terms[1].second));
  }
  if (terms[1].first != deg / 2 || terms[2].first != 0)
    fail(errc::parse_error, "not a trinomial in x^(2^r)");
  return FactorShape::trinomial(F, log - 1, terms[1].second, terms[2].second);
}

OutputDocument build_document(const FieldCtx& F, const Factorization& f,
                              PrettyMode mode, bool verify) {
  OutputDocument doc;
  doc.q = f.meta().q;
  doc.d = f.meta().d;
  doc.n = f.meta().n;
  doc.case_tag = case_tag_name(f.meta().tag);
  doc.modulus = f.meta().kind == ModulusKind::x2nd_minus_one
                    ? "x^" + std::to_string(f.input_degree()) + "-1"
                    : "Phi_" + std::to_string(f.input_degree());
  doc.count = f.count();
  doc.factors.reserve(f.count());
  for (const auto& shape : f.factors()) {
    FactorRecord rec;
    switch (shape.tag()) {
      case ShapeTag::linear: rec.shape = "linear"; break;
      case ShapeTag::binomial: rec.shape = "binomial"; break;
      case ShapeTag::trinomial: rec.shape = "trinomial"; break;
    }
    rec.r = shape.r();
    if (shape.tag() == ShapeTag::trinomial)
      rec.coefficients = {shape.a().value, shape.c().value};
    else
      rec.coefficients = {shape.c().value};
    rec.pretty = pretty_factor(F, shape, mode);
    doc.factors.push_back(std::move(rec));
  }
  if (verify) {
    VerifyReport rep = verify_factorization(F, f);
    doc.verification =
        VerificationRecord{rep.product_ok, rep.irreducible_ok,
                           rep.oracle_match};
  }
  return doc;
}

std::string render_text(const OutputDocument& doc) {
  std::string out = "# q=" + std::to_string(doc.q) +
                    " d=" + std::to_string(doc.d) +
                    " n=" + std::to_string(doc.n) + " case=" + doc.case_tag +
                    " modulus=" + doc.modulus +
                    " count=" + std::to_string(doc.count) + "\n";
  for (const auto& f : doc.factors) {
    out += f.pretty;
    out += "\n";
  }
  if (doc.verification) {
    const auto& v = *doc.verification;
    out += "# verification product_ok=";
    out += v.product_ok ? "true" : "false";
    out += " irreducible_ok=";
    out += v.irreducible_ok ? "true" : "false";
    out += " oracle_match=";
    out += v.oracle_match ? (*v.oracle_match ? "true" : "false") : "skipped";
    out += "\n";
  }
  return out;
}

namespace {

ordered_json document_to_json(const OutputDocument& doc) {
  ordered_json j;
  j["meta"] = {{"q", doc.q},       {"d", doc.d},
               {"n", doc.n},       {"case", doc.case_tag},
               {"modulus", doc.modulus}, {"count", doc.count}};
  j["factors"] = ordered_json::array();
  for (const auto& f : doc.factors) {
    j["factors"].push_back({{"shape", f.shape},
                            {"r", f.r},
                            {"coefficients", f.coefficients},
                            {"pretty", f.pretty}});
  }
  if (doc.verification) {
    const auto& v = *doc.verification;
    ordered_json jv;
    jv["product_ok"] = v.product_ok;
    jv["irreducible_ok"] = v.irreducible_ok;
    if (v.oracle_match) jv["oracle_match"] = *v.oracle_match;
    else jv["oracle_match"] = nullptr;
    j["verification"] = jv;
  }
  return j;
}

}  // namespace

std::string render_json(const OutputDocument& doc) {
  return document_to_json(doc).dump(2) + "\n";
}

OutputDocument document_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  OutputDocument doc;
  const auto& meta = j.at("meta");
  doc.q = meta.at("q").get<std::uint64_t>();
  doc.d = meta.at("d").get<std::uint64_t>();
  doc.n = meta.at("n").get<unsigned>();
  doc.case_tag = meta.at("case").get<std::string>();
  doc.modulus = meta.at("modulus").get<std::string>();
  doc.count = meta.at("count").get<std::uint64_t>();
  for (const auto& jf : j.at("factors")) {
    FactorRecord rec;
    rec.shape = jf.at("shape").get<std::string>();
    rec.r = jf.at("r").get<unsigned>();
    rec.coefficients =
        jf.at("coefficients").get<std::vector<std::uint64_t>>();
    rec.pretty = jf.at("pretty").get<std::string>();
    doc.factors.push_back(std::move(rec));
  }
  if (j.contains("verification")) {
    const auto& jv = j.at("verification");
    VerificationRecord v;
    v.product_ok = jv.at("product_ok").get<bool>();
    v.irreducible_ok = jv.at("irreducible_ok").get<bool>();
    if (!jv.at("oracle_match").is_null())
      v.oracle_match = jv.at("oracle_match").get<bool>();
    doc.verification = v;
  }
  return doc;
}

namespace {

const char* claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::not_applicable: return "not-applicable";
  }
  return "unknown";
}

}  // namespace

std::string render_subgroup_text(const SubgroupReport& r) {
  std::string out = "# q=" + std::to_string(r.q);
  if (r.special_t) {
    out += r.is_2t1_pair ? " pair=2t+1" : " pair=4t+1";
    out += " t=" + std::to_string(*r.special_t);
  }
  out += "\n|S_q| = " + std::to_string(r.s_q_order);
  if (r.s_q_generator)
    out += "  generator " + std::to_string(r.s_q_generator->value);
  out += "\n|O_q| = " + std::to_string(r.o_q_order) + "  generator " +
         std::to_string(r.o_q_generator.value) + "\n";
  for (const auto& c : r.claims) {
    out += c.name;
    out += ": ";
    out += claim_status_name(c.status);
    out += "\n";
  }
  return out;
}

std::string render_subgroup_json(const SubgroupReport& r) {
  ordered_json j;
  j["q"] = r.q;
  if (r.special_t) {
    j["pair"] = r.is_2t1_pair ? "2t+1" : "4t+1";
    j["t"] = *r.special_t;
  }
  j["s_q_order"] = r.s_q_order;
  j["o_q_order"] = r.o_q_order;
  j["o_q_generator"] = r.o_q_generator.value;
  if (r.s_q_generator) j["s_q_generator"] = r.s_q_generator->value;
  j["claims"] = ordered_json::array();
  for (const auto& c : r.claims)
    j["claims"].push_back({{"name", c.name},
                           {"status", claim_status_name(c.status)}});
  return j.dump(2) + "\n";
}

void write_atomic(const std::filesystem::path& path,
                  std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(errc::parse_error, "cannot open " + tmp.string());
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    if (!out) fail(errc::parse_error, "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace cyclofactor
