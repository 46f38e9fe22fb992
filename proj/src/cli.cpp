#include "fibtl/cli.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "fibtl/bracket.hpp"
#include "fibtl/fibrep.hpp"
#include "fibtl/tl.hpp"

namespace fibtl::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", std::abs(x) < 5e-11 ? 0.0 : x);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  char buf[96];
  const double re = std::abs(z.real()) < 5e-13 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
  std::snprintf(buf, sizeof buf, "%.12f%+.12fi", re, im);
  return buf;
}

int parse_sign(const std::string& text) {
  if (text == "+" || text == "+1" || text == "1") return 1;
  if (text == "-" || text == "-1") return -1;
  throw UsageError("--delta-sign must be + or -, got '" + text + "'");
}

struct ModelOptions {
  std::optional<double> delta;
  std::string delta_sign = "+";
  std::optional<std::string> phase;

  void attach(CLI::App* cmd) {
    auto* d = cmd->add_option("--delta", delta, "Loop value (|delta| >= 1); overrides --delta-sign");
    auto* s = cmd->add_option("--delta-sign", delta_sign, "Sign of delta = +-phi (+ or -)");
    d->excludes(s);
    cmd->add_option("--phase", phase, "Phase theta of A = e^{i theta}, e.g. 3pi/5 or 1.885");
  }

  ModelParams build() const {
    if (delta) return ModelParams::from_delta(*delta, phase ? parse_phase(*phase) : kFibonacciPhase);
    const ModelParams base = ModelParams::fibonacci(parse_sign(delta_sign));
    return phase ? ModelParams::from_delta(base.delta, parse_phase(*phase)) : base;
  }
};

struct BraidOptions {
  int strands = 0;
  std::string word;

  void attach(CLI::App* cmd) {
    cmd->add_option("--strands", strands, "Number of strands n")->required();
    cmd->add_option("--word", word, "Signed generator indices, e.g. \"1 -2 1\"");
  }

  BraidWord build() const { return parse_braid(word, strands); }
};

enum class Evaluator { kTL, kStateSum, kBoth };

struct BracketOptions {
  BraidOptions braid;
  bool oracle = false;
  bool both = false;
  bool normalized = false;
  bool json = false;

  void attach(CLI::App* cmd, bool allow_normalized) {
    braid.attach(cmd);
    cmd->add_flag("--oracle", oracle, "Use the 2^N state-sum evaluator");
    cmd->add_flag("--both", both, "Run both evaluators and compare (exit 1 on mismatch)");
    if (allow_normalized) cmd->add_flag("--normalized", normalized, "Writhe-normalized invariant f = (-A^3)^-w <K>");
    cmd->add_flag("--json", json, "Emit JSON");
  }

  Evaluator evaluator() const { return both ? Evaluator::kBoth : oracle ? Evaluator::kStateSum : Evaluator::kTL; }
};

const char* evaluator_name(Evaluator e) {
  switch (e) {
    case Evaluator::kTL: return "tl";
    case Evaluator::kStateSum: return "state-sum";
    case Evaluator::kBoth: return "both";
  }
  return "";
}

struct Bracket {
  LaurentPoly value;
  std::optional<bool> agree;
};

Bracket evaluate_bracket(const BraidWord& b, Evaluator evaluator, std::ostream& err) {
  switch (evaluator) {
    case Evaluator::kTL: return {bracket_via_tl(b), std::nullopt};
    case Evaluator::kStateSum: return {bracket_state_sum(b), std::nullopt};
    case Evaluator::kBoth: {
      LaurentPoly tl = bracket_via_tl(b);
      LaurentPoly oracle = bracket_state_sum(b);
      const bool agree = tl == oracle;
      if (!agree) err << "mismatch: tl = " << tl << ", state-sum = " << oracle << "\n";
      return {std::move(tl), agree};
    }
  }
  throw std::logic_error("unknown evaluator");
}

int cmd_bracket(const BracketOptions& o, std::ostream& out, std::ostream& err) {
  const BraidWord b = o.braid.build();
  Bracket result = evaluate_bracket(b, o.evaluator(), err);
  if (o.normalized) result.value = writhe_normalization(b) * result.value;
  if (o.json) {
    nlohmann::json j{{"braid", to_json(b)},
                     {"invariant", o.normalized ? "normalized" : "bracket"},
                     {"evaluator", evaluator_name(o.evaluator())},
                     {"polynomial", to_json(result.value)},
                     {"text", result.value.to_string()}};
    if (result.agree) j["agree"] = *result.agree;
    out << j.dump(2) << "\n";
  } else {
    out << result.value << "\n";
    if (result.agree) out << "agree: " << (*result.agree ? "true" : "false") << "\n";
  }
  return result.agree.value_or(true) ? kSuccess : kCheckFailed;
}

int cmd_jones(const BracketOptions& o, std::ostream& out, std::ostream& err) {
  const BraidWord b = o.braid.build();
  Bracket result = evaluate_bracket(b, o.evaluator(), err);
  const JonesPoly v = jones_substitute(writhe_normalization(b) * result.value);
  if (o.json) {
    nlohmann::json j{{"braid", to_json(b)},
                     {"evaluator", evaluator_name(o.evaluator())},
                     {"exponent_unit", "t^(1/4)"},
                     {"jones_q", to_json(v.in_q)},
                     {"text", v.to_string()}};
    if (result.agree) j["agree"] = *result.agree;
    out << j.dump(2) << "\n";
  } else {
    out << v.to_string() << "\n";
    if (result.agree) out << "agree: " << (*result.agree ? "true" : "false") << "\n";
  }
  return result.agree.value_or(true) ? kSuccess : kCheckFailed;
}

struct EvalOptions {
  BraidOptions braid;
  std::string phase = "3pi/5";
  bool normalized = false;
  bool json = false;
};

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  const BraidWord b = o.braid.build();
  const double theta = parse_phase(o.phase);
  const LaurentPoly p = o.normalized ? normalized_bracket(b) : bracket_via_tl(b);
  const std::complex<double> z = lp_eval(p, theta);
  if (o.json) {
    out << nlohmann::json{{"braid", to_json(b)},
                          {"invariant", o.normalized ? "normalized" : "bracket"},
                          {"theta", theta},
                          {"value", {z.real(), z.imag()}}}
                   .dump(2)
        << "\n";
  } else {
    out << format_complex(z) << "\n";
  }
  return kSuccess;
}

struct VerifyOptions {
  std::string module;
  int n = 0;
  double tol = 1e-10;
  bool literal_right_end = false;
  bool json = false;
  ModelOptions model;
};

int emit_report(const RelationReport& r, bool json, std::ostream& out) {
  if (json)
    out << to_json(r).dump(2) << "\n";
  else
    out << format_report(r) << (r.all_pass() ? "all relations pass\n" : "some relations FAIL\n");
  return r.all_pass() ? kSuccess : kCheckFailed;
}

int cmd_fib_verify(const VerifyOptions& o, std::ostream& out) {
  if (o.n < 1 || o.n > kMaxDenseMatrixLength)
    throw UsageError("--n must be in [1, " + std::to_string(kMaxDenseMatrixLength) + "]");
  const RightEndRule rule = o.literal_right_end ? RightEndRule::kLiteral : RightEndRule::kUniform;
  return emit_report(verify_model(o.n, o.model.build(), o.tol, rule), o.json, out);
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  if (o.module == "tl") {
    if (o.n < 1 || o.n > 7) throw UsageError("--n must be in [1, 7] for --module tl");
    return emit_report(verify_tl_relations(o.n), o.json, out);
  }
  return cmd_fib_verify(o, out);
}

struct MatrixOptions {
  int n = 0;
  int gen = 0;
  bool braid = false;
  bool literal_right_end = false;
  bool json = false;
  ModelOptions model;
};

int cmd_fib_matrix(const MatrixOptions& o, std::ostream& out) {
  if (o.n < 1 || o.n > kMaxDenseMatrixLength)
    throw UsageError("--n must be in [1, " + std::to_string(kMaxDenseMatrixLength) + "]");
  if (o.gen == 0 || std::abs(o.gen) > o.n + 1)
    throw UsageError("--gen must satisfy 1 <= |gen| <= n + 1");
  if (o.gen < 0 && !o.braid) throw UsageError("negative --gen (inverse letter) requires --braid");
  const ModelParams params = o.model.build();
  const RightEndRule rule = o.literal_right_end ? RightEndRule::kLiteral : RightEndRule::kUniform;
  const RepMatrix m = o.braid ? braid_generator_matrix(o.n, o.gen, params) : tl_generator_matrix(o.n, o.gen, params, rule);
  if (o.json) {
    nlohmann::json j = to_json(m);
    j["generator"] = o.gen;
    j["kind"] = o.braid ? "braid" : "tl";
    j["delta"] = params.delta;
    j["phase"] = params.phase;
    out << j.dump(2) << "\n";
    return kSuccess;
  }
  out << "# basis:";
  for (const auto& s : m.basis->sequences()) out << ' ' << s.to_string();
  out << "\n";
  for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.entries.cols(); ++c) {
      if (c > 0) out << ' ';
      out << (o.braid ? format_complex(m.entries(r, c)) : format_real(m.entries(r, c).real()));
    }
    out << "\n";
  }
  return kSuccess;
}

int cmd_dims(int max_n, bool json, std::ostream& out) {
  if (max_n < 1 || max_n > 90) throw UsageError("--max must be in [1, 90]");
  if (json) {
    auto rows = nlohmann::json::array();
    for (int n = 1; n <= max_n; ++n) rows.push_back({{"n", n}, {"dim", fib_dim(n)}});
    out << rows.dump(2) << "\n";
  } else {
    out << "# n dim\n";
    for (int n = 1; n <= max_n; ++n) out << n << ' ' << fib_dim(n) << "\n";
  }
  return kSuccess;
}

}  // namespace

double parse_phase(const std::string& text) {
  static const std::regex pi_form(R"(^\s*([+-]?)(\d+(?:\.\d+)?)?\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d+)?))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    double value = std::numbers::pi;
    if (m[2].matched) value *= std::stod(m[2].str());
    if (m[3].matched) {
      const double den = std::stod(m[3].str());
      if (den == 0.0) throw UsageError("phase '" + text + "' divides by zero");
      value /= den;
    }
    return m[1].str() == "-" ? -value : value;
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse phase '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(value)) throw UsageError("cannot parse phase '" + text + "'");
  return value;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bracket / Jones polynomials of braid closures and the Fibonacci braid representation", "fibtl"};
  app.require_subcommand(1);

  BracketOptions bracket_opts;
  auto* bracket = app.add_subcommand("bracket", "Bracket polynomial of a braid closure");
  bracket_opts.attach(bracket, true);

  BracketOptions jones_opts;
  auto* jones = app.add_subcommand("jones", "Jones polynomial of a braid closure");
  jones_opts.attach(jones, false);

  EvalOptions eval_opts;
  auto* eval = app.add_subcommand("eval", "Evaluate the bracket at A = e^{i theta}");
  eval_opts.braid.attach(eval);
  eval->add_option("--phase", eval_opts.phase, "theta, e.g. 3pi/5");
  eval->add_flag("--normalized", eval_opts.normalized, "Evaluate the writhe-normalized invariant");
  eval->add_flag("--json", eval_opts.json, "Emit JSON");

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run a relation suite");
  verify->add_option("--module", verify_opts.module, "tl or fib")->required()->check(CLI::IsMember({"tl", "fib"}));
  verify->add_option("--n", verify_opts.n, "TL_n size (tl) or Fibonacci sequence length (fib)")->required();
  verify->add_option("--tol", verify_opts.tol, "Residual tolerance (fib)");
  verify->add_flag("--literal-right-end", verify_opts.literal_right_end, "Use the literal U_{n+1}|..P*> = 0 rule");
  verify->add_flag("--json", verify_opts.json, "Emit JSON");
  verify_opts.model.attach(verify);

  VerifyOptions fib_verify_opts;
  fib_verify_opts.module = "fib";
  auto* fib_verify = app.add_subcommand("fib-verify", "Relation suite of the Fibonacci representation");
  fib_verify->add_option("--n", fib_verify_opts.n, "Fibonacci sequence length")->required();
  fib_verify->add_option("--tol", fib_verify_opts.tol, "Residual tolerance");
  fib_verify->add_flag("--literal-right-end", fib_verify_opts.literal_right_end,
                       "Use the literal U_{n+1}|..P*> = 0 rule");
  fib_verify->add_flag("--json", fib_verify_opts.json, "Emit JSON");
  fib_verify_opts.model.attach(fib_verify);

  MatrixOptions matrix_opts;
  auto* fib_matrix = app.add_subcommand("fib-matrix", "Matrix of U_i or rho(sigma_i) on Fibonacci sequences");
  fib_matrix->add_option("--n", matrix_opts.n, "Fibonacci sequence length")->required();
  fib_matrix->add_option("--gen", matrix_opts.gen, "Generator index (negative for an inverse braid letter)")
      ->required();
  fib_matrix->add_flag("--braid", matrix_opts.braid, "Braid generator A I + A^-1 U_i instead of U_i");
  fib_matrix->add_flag("--literal-right-end", matrix_opts.literal_right_end, "Use the literal U_{n+1}|..P*> = 0 rule");
  fib_matrix->add_flag("--json", matrix_opts.json, "Emit JSON (row-major [re, im] pairs)");
  matrix_opts.model.attach(fib_matrix);

  int dims_max = 0;
  bool dims_json = false;
  auto* dims = app.add_subcommand("dims", "Table of Fibonacci space dimensions f_{n+1}");
  dims->add_option("--max", dims_max, "Largest sequence length")->required();
  dims->add_flag("--json", dims_json, "Emit JSON");

  std::vector<const char*> argv{"fibtl"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*bracket) return cmd_bracket(bracket_opts, out, err);
    if (*jones) return cmd_jones(jones_opts, out, err);
    if (*eval) return cmd_eval(eval_opts, out);
    if (*verify) return cmd_verify(verify_opts, out);
    if (*fib_verify) return cmd_fib_verify(fib_verify_opts, out);
    if (*fib_matrix) return cmd_fib_matrix(matrix_opts, out);
    if (*dims) return cmd_dims(dims_max, dims_json, out);
  } catch (const OracleCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace fibtl::cli
