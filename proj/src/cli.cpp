#include "cdiff/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "cdiff/error.hpp"
#include "cdiff/numtheory.hpp"
#include "cdiff/report.hpp"
#include "cdiff/verifier.hpp"

namespace cdiff {

namespace {

template <typename T>
bool parse_int(std::string_view text, T& value) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

struct Settings {
  std::string field;
  std::string d;
  std::string c;
  std::uint64_t k = 0;
  std::uint64_t budget_q = 0;
  std::uint64_t budget_n4 = 0;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::uint64_t count = 100;
  unsigned max_uniformity = 2;
  unsigned n = 0;
  std::string out_file;
};

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "text") return Format::Text;
  throw Error(Errc::InvalidArgument, "unknown format " + text);
}

FieldContext build_field(const Settings& s, std::uint64_t budget_q) {
  const FieldSpec spec = parse_field_spec(s.field);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec.n && q <= budget_q; ++i) q *= spec.p;
  if (is_prime(spec.p) && q > budget_q) {
    throw Error(Errc::BudgetExceeded, "field " + s.field + " exceeds --budget-q " + std::to_string(budget_q));
  }
  return FieldContext::build(spec);
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Mismatch: return kExitMismatch;
    case Verdict::PredictorInconsistent: return kExitInconsistent;
    default: return kExitOk;
  }
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::BudgetExceeded:
    case Errc::FieldTooLarge:
    case Errc::Overflow: return kExitBudget;
    default: return kExitUsage;
  }
}

}  // namespace

std::uint64_t parse_exponent(std::string_view text, const FieldContext& f, std::uint64_t k) {
  const std::uint64_t q = f.q();
  const std::uint64_t p = f.p();
  std::uint64_t value = 0;
  if (parse_int(text, value)) {
    if (value == 0) throw Error(Errc::InvalidArgument, "d must be >= 1");
    return value;
  }
  auto require = [&](bool ok, const char* why) {
    if (!ok) throw Error(Errc::InvalidArgument, std::string("d=") + std::string(text) + ": " + why);
  };
  if (text == "inv" || text == "q-2") {
    require(q > 2, "needs q > 2");
    return q - 2;
  }
  if (text == "q-3") {
    require(q > 3, "needs q > 3");
    return q - 3;
  }
  if (text == "(q+3)/2") {
    require(q % 2 == 1, "needs odd q");
    return (q + 3) / 2;
  }
  if (text == "(q-3)/2") {
    require(q % 2 == 1 && q > 3, "needs odd q > 3");
    return (q - 3) / 2;
  }
  if (text == "(p^k+1)/2") {
    require(p % 2 == 1, "needs odd p");
    require(k >= 1, "needs --k >= 1");
    // Only the residue mod q - 1 matters, and p^k + 1 stays even mod 2(q - 1).
    return (pow_mod(p, k, 2 * (q - 1)) + 1) / 2;
  }
  throw Error(Errc::InvalidArgument, "cannot parse d=" + std::string(text));
}

Elem parse_multiplier(std::string_view text, const FieldContext& f) {
  if (text.starts_with("e:")) {
    std::uint64_t raw = 0;
    if (!parse_int(text.substr(2), raw)) throw Error(Errc::InvalidArgument, "cannot parse c=" + std::string(text));
    return f.element(raw);
  }
  std::int64_t k = 0;
  if (!parse_int(text, k)) throw Error(Errc::InvalidArgument, "cannot parse c=" + std::string(text));
  return f.from_int(k);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"c-differential spectra of power maps over finite fields", "cdiff"};
  app.require_subcommand(1);
  Settings sp, ve, sw, sc, ga, fu;

  auto add_output = [](CLI::App* cmd, Settings& s) {
    cmd->add_option("--format", s.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", s.out_file, "write the result to FILE instead of stdout");
  };
  auto add_case = [](CLI::App* cmd, Settings& s, bool with_c) {
    cmd->add_option("--field", s.field, "p^n or p^n/c0,...,cn")->required();
    cmd->add_option("--d", s.d, "exponent: integer, inv, q-2, q-3, (q+3)/2, (q-3)/2, (p^k+1)/2")->required();
    if (with_c) cmd->add_option("--c", s.c, "multiplier: integer mod p, -1, or e:ENCODING")->required();
    cmd->add_option("--k", s.k, "k for d=(p^k+1)/2");
  };

  auto* spectrum = app.add_subcommand("spectrum", "c-differential spectrum of x^d");
  add_case(spectrum, sp, true);
  spectrum->add_option("--budget-q", sp.budget_q, "largest field order to enumerate")->default_val(FieldLimits{}.max_q);
  add_output(spectrum, sp);

  auto* verify = app.add_subcommand("verify", "compare the enumerated spectrum with the closed forms");
  add_case(verify, ve, true);
  verify->add_option("--budget-q", ve.budget_q, "largest field order to enumerate")->default_val(FieldLimits{}.max_q);
  verify->add_option("--budget-n4", ve.budget_n4, "largest q for the N4 enumeration")->default_val(kDefaultN4BudgetQ);
  add_output(verify, ve);

  auto* sweep = app.add_subcommand("sweep", "verify every c != 1");
  add_case(sweep, sw, false);
  sweep->add_option("--budget-q", sw.budget_q, "largest field order to sweep")->default_val(kDefaultSweepBudgetQ);
  sweep->add_option("--budget-n4", sw.budget_n4, "largest q for the N4 enumeration (0 skips it)")->default_val(0);
  add_output(sweep, sw);

  auto* scan = app.add_subcommand("scan", "exponents with small c-differential uniformity");
  scan->add_option("--field", sc.field, "p^n or p^n/c0,...,cn")->required();
  scan->add_option("--c", sc.c, "multiplier: integer mod p, -1, or e:ENCODING")->required();
  scan->add_option("--max-uniformity", sc.max_uniformity, "largest uniformity to report")->default_val(2);
  scan->add_option("--budget-q", sc.budget_q, "largest field order to scan")->default_val(kDefaultSweepBudgetQ);
  add_output(scan, sc);

  auto* gamma = app.add_subcommand("gamma", "the cubic character sum over GF(5^n)");
  gamma->add_option("--n", ga.n, "extension degree")->required()->check(CLI::Range(1u, 60u));
  gamma->add_option("--budget-q", ga.budget_q, "largest 5^n for the direct sum")->default_val(FieldLimits{}.max_q);
  add_output(gamma, ga);

  auto* fuzz = app.add_subcommand("fuzz", "random checks of the spectrum identities");
  fuzz->add_option("--seed", fu.seed, "splitmix64 seed")->default_val(1);
  fuzz->add_option("--count", fu.count, "number of cases")->default_val(100);
  fuzz->add_option("--budget-q", fu.budget_q, "largest field order drawn")->default_val(343);
  add_output(fuzz, fu);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Settings& s = spectrum->parsed() ? sp
                        : verify->parsed() ? ve
                        : sweep->parsed()  ? sw
                        : scan->parsed()   ? sc
                        : gamma->parsed()  ? ga
                                           : fu;
    const Format format = parse_format(s.format);
    std::string text;
    int code = kExitOk;

    if (spectrum->parsed()) {
      const auto f = build_field(s, s.budget_q);
      const PowerMap map = make_power_map(f, parse_exponent(s.d, f, s.k), parse_multiplier(s.c, f));
      const auto sp = c_spectrum(f, map);
      const auto u = c_uniformity(f, map, sp);
      const auto key = make_case_key(f, map.d, map.c);
      if (format == Format::Json) text = render_json(spectrum_json(key, sp, u));
      else if (format == Format::Csv) text = spectrum_csv(key, sp, u);
      else text = spectrum_text(key, sp, u);
    } else if (verify->parsed()) {
      const auto f = build_field(s, s.budget_q);
      const VerifyOptions opts{s.budget_q, s.budget_n4};
      const auto r = verify_case(f, parse_exponent(s.d, f, s.k), parse_multiplier(s.c, f), opts);
      if (format == Format::Json) text = render_json(to_json(r));
      else if (format == Format::Csv) text = verify_csv(std::span(&r, 1));
      else text = verify_text(r);
      code = exit_for(r.verdict);
    } else if (sweep->parsed()) {
      const auto f = build_field(s, s.budget_q);
      const VerifyOptions opts{s.budget_q, s.budget_n4};
      const auto r = sweep_c(f, parse_exponent(s.d, f, s.k), opts, s.budget_q);
      if (format == Format::Json) text = render_json(to_json(r));
      else if (format == Format::Csv) text = verify_csv(r.reports);
      else text = sweep_text(r);
      const auto worst = [&](Verdict v) {
        return std::any_of(r.reports.begin(), r.reports.end(), [v](const auto& x) { return x.verdict == v; });
      };
      if (worst(Verdict::Mismatch)) code = kExitMismatch;
      else if (worst(Verdict::PredictorInconsistent)) code = kExitInconsistent;
    } else if (scan->parsed()) {
      const auto f = build_field(s, s.budget_q);
      const auto r = scan_exponents(f, parse_multiplier(s.c, f), s.max_uniformity, s.budget_q);
      if (format == Format::Json) text = render_json(to_json(r));
      else if (format == Format::Csv) text = scan_csv(r);
      else text = scan_text(r);
    } else if (gamma->parsed()) {
      const auto r = gamma_report(s.n, s.budget_q);
      if (format == Format::Json) text = render_json(to_json(r));
      else if (format == Format::Csv) text = gamma_csv(r);
      else text = gamma_text(r);
    } else if (fuzz->parsed()) {
      const auto r = fuzz_identities(s.seed, s.count, s.budget_q);
      if (format == Format::Json) text = render_json(to_json(r));
      else if (format == Format::Csv) text = fuzz_csv(r);
      else text = fuzz_text(r);
      if (r.failed > 0) code = 1;
    }

    if (s.out_file.empty()) {
      out << text;
    } else {
      std::ofstream file(s.out_file, std::ios::binary);
      if (!file) throw Error(Errc::InvalidArgument, "cannot open " + s.out_file);
      file << text;
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace cdiff
