#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "clausen/errors.hpp"
#include "clausen/identities.hpp"
#include "clausen/integrals.hpp"
#include "clausen/relations.hpp"
#include "clausen/specfun.hpp"
#include "expression.hpp"

namespace clausen::cli {

namespace {

using json = nlohmann::ordered_json;

void require_args(const std::string& what, const std::vector<std::string>& args, std::size_t n) {
  if (args.size() != n) {
    throw ArgumentError(what + " expects " + std::to_string(n) + " argument(s), got " + std::to_string(args.size()));
  }
}

Real parse_value(const std::string& text, const PrecisionContext& ctx) {
  return Expression::parse(text).evaluate(ctx);
}

std::string scientific(const Real& x) { return x.to_scientific(6); }

}  // namespace

int cmd_eval(const std::string& function, const std::vector<std::string>& args, const CliConfig& config,
             std::ostream& out) {
  const PrecisionContext ctx = make_context(config.digits);
  std::string value;
  if (function == "kronecker") {
    require_args("kronecker", args, 2);
    value = std::to_string(kronecker(Discriminant(parse_integer(args[0])), parse_integer(args[1])));
  } else {
    Real result;
    if (function == "cl2") {
      require_args("cl2", args, 1);
      if (const auto pm = parse_pi_multiple(args[0])) {
        result = clausen2_pi(pm->numerator, pm->denominator, ctx);
      } else {
        result = clausen2(parse_value(args[0], ctx), ctx);
      }
    } else if (function == "L") {
      require_args("L", args, 2);
      result = dirichlet_L(LSeriesPoint{Discriminant(parse_integer(args[0])), parse_value(args[1], ctx)}, ctx);
    } else if (function == "hurwitz") {
      require_args("hurwitz", args, 2);
      result = hurwitz_zeta(parse_value(args[0], ctx), parse_value(args[1], ctx), ctx);
    } else if (function == "A") {
      require_args("A", args, 1);
      result = zagier_A(parse_value(args[0], ctx), ctx);
    } else {
      throw ArgumentError("unknown function '" + function + "' (expected cl2, L, hurwitz, A, kronecker)");
    }
    value = result.to_fixed(config.digits);
  }

  if (config.format == Format::json) {
    json j;
    j["command"] = "eval";
    j["function"] = function;
    j["arguments"] = args;
    j["digits"] = config.digits;
    j["value"] = value;
    out << j.dump(2) << '\n';
  } else {
    out << value << '\n';
  }
  return kSuccess;
}

int cmd_integrate(const std::string& target, const std::vector<std::string>& args, const CliConfig& config,
                  std::ostream& out) {
  const PrecisionContext ctx = make_context(config.digits);
  const TanhSinh quad(ctx, QuadratureOptions{.workers = config.workers});
  QuadratureResult summary;
  if (target == "i7") {
    require_args("integrate i7", args, 0);
    const I7Result r = integrate_I7(quad, config.digits);
    summary = QuadratureResult{r.value, r.lower.error_estimate + r.upper.error_estimate,
                               std::max(r.lower.levels_used, r.upper.levels_used),
                               r.lower.evaluations + r.upper.evaluations};
  } else if (target == "custom") {
    require_args("integrate custom", args, 3);
    const Real a = parse_value(args[0], ctx);
    const Real b = parse_value(args[1], ctx);
    const Expression f = Expression::parse(args[2], true);
    summary = quad.integrate([&](const Abscissa& p) { return f.evaluate(ctx, p.x); }, a, b, config.digits);
  } else {
    throw ArgumentError("unknown integration target '" + target + "' (expected i7 or custom)");
  }

  if (config.format == Format::json) {
    json j;
    j["command"] = "integrate";
    j["target"] = target;
    j["digits"] = config.digits;
    j["value"] = summary.value.to_fixed(config.digits);
    j["error_estimate"] = scientific(summary.error_estimate);
    j["levels_used"] = summary.levels_used;
    j["evaluations"] = summary.evaluations;
    out << j.dump(2) << '\n';
  } else {
    out << summary.value.to_fixed(config.digits) << '\n'
        << "error_estimate " << scientific(summary.error_estimate) << '\n'
        << "levels_used " << summary.levels_used << '\n'
        << "evaluations " << summary.evaluations << '\n';
  }
  return kSuccess;
}

int cmd_verify(const std::string& id, const CliConfig& config, std::ostream& out) {
  VerifyOptions options;
  options.workers = config.workers;
  if (config.seed) options.seed = *config.seed;
  std::vector<IdentityReport> reports;
  if (id == "all") {
    reports = verify_all(config.digits, options);
  } else {
    reports.push_back(verify(id, config.digits, options));
  }
  out << (config.format == Format::json ? format_json(reports) : format_text(reports));
  return summarize(reports).all_passed() ? kSuccess : kVerificationFailed;
}

int cmd_discover(const CliConfig& config, double norm_bound, std::ostream& out) {
  const PrecisionContext ctx = make_context(config.digits);
  IntegerRelation rel;
  try {
    rel = rediscover_six_term_relation(ctx, norm_bound);
  } catch (const PrecisionError&) {
    throw;
  } catch (const Error& e) {
    throw ConvergenceError(std::string(e.what()) + "; try a larger --digits", 0);
  }
  std::ostringstream coeffs;
  for (std::size_t i = 0; i < rel.coefficients.size(); ++i) coeffs << (i ? " " : "") << rel.coefficients[i];
  if (config.format == Format::json) {
    json j;
    j["command"] = "discover";
    j["digits"] = config.digits;
    j["basis"] = {"Cl2(2phi7)", "Cl2(4phi7)", "Cl2(6phi7)", "Cl2(2pi/7)", "Cl2(4pi/7)", "Cl2(6pi/7)"};
    j["coefficients"] = rel.coefficients;
    j["residual"] = scientific(rel.residual);
    j["norm_bound"] = rel.norm_bound;
    out << j.dump(2) << '\n';
  } else {
    out << coeffs.str() << '\n' << "residual " << scientific(rel.residual) << '\n';
  }
  return kSuccess;
}

double i7_integrand(double theta) {
  const double phi = std::atan(std::sqrt(7.0));
  return std::log(std::fabs(std::sin(theta + phi) / std::sin(theta - phi)));
}

std::vector<double> sample_abscissas(int points) {
  const double a = std::numbers::pi / 3;
  const double b = std::numbers::pi / 2;
  const double phi = std::atan(std::sqrt(7.0));
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    double x = a + (b - a) * (i + 0.5) / points;
    if (std::fabs(x - phi) < kSampleGuardBand) x = phi + (x < phi ? -2 : 2) * kSampleGuardBand;
    xs.push_back(x);
  }
  return xs;
}

int cmd_sample(int points, const CliConfig&, std::ostream& out) {
  if (points < 2) throw ArgumentError("sample needs at least 2 points");
  out << "theta,value\n";
  char line[64];
  for (double x : sample_abscissas(points)) {
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", x, i7_integrand(x));
    out << line;
  }
  return kSuccess;
}

int cmd_constants(const CliConfig& config, std::ostream& out) {
  const PrecisionContext ctx = make_context(config.digits);
  const std::pair<const char*, const Real*> table[] = {
      {"pi", &ctx.pi()}, {"ln2", &ctx.ln2()}, {"sqrt3", &ctx.sqrt3()}, {"sqrt7", &ctx.sqrt7()}, {"phi7", &ctx.phi7()}};
  if (config.format == Format::json) {
    json j;
    j["command"] = "constants";
    j["digits"] = config.digits;
    for (const auto& [name, value] : table) j[name] = value->to_fixed(config.digits);
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [name, value] : table) out << name << ' ' << value->to_fixed(config.digits) << '\n';
  }
  return kSuccess;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"High-precision Clausen, Hurwitz zeta and Dirichlet L evaluation; I7 = L_{-7}(2) verification"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string output;
  app.add_option("--digits", config.digits, "Decimal digits of the result")->check(CLI::Range(10, kMaxTargetDigits));
  app.add_option("--workers", config.workers, "Concurrent quadrature evaluations")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  auto* seed_opt = app.add_option("--seed", seed, "Seed for sampled identity checks");
  auto* output_opt = app.add_option("--output", output, "Write output to this file");

  std::string function;
  std::vector<std::string> eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate cl2 THETA | L D S | hurwitz S A | A X | kronecker D N");
  eval->add_option("function", function, "cl2, L, hurwitz, A or kronecker")->required();
  eval->add_option("args", eval_args, "Function arguments");

  std::string target;
  std::vector<std::string> integrate_args;
  auto* integrate = app.add_subcommand("integrate", "Integrate i7 | custom A B EXPR (variable t)");
  integrate->add_option("target", target, "i7 or custom")->required();
  integrate->add_option("args", integrate_args, "Bounds and integrand for custom");

  std::string id;
  auto* verify_cmd = app.add_subcommand("verify", "Verify an identity by id, or all");
  verify_cmd->add_option("id", id, "Identity id or 'all'")->required();

  double norm_bound = 1e6;
  auto* discover = app.add_subcommand("discover", "Rediscover the six-term Clausen relation by PSLQ");
  discover->add_option("--norm-bound", norm_bound, "Largest coefficient norm searched")->check(CLI::PositiveNumber);

  int points = 0;
  auto* sample = app.add_subcommand("sample", "CSV samples of the I7 integrand on (pi/3, pi/2)");
  sample->add_option("points", points, "Number of rows")->required();

  auto* constants = app.add_subcommand("constants", "Print the cached constants");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  config.format = format == "json" ? Format::json : Format::text;
  if (*seed_opt) config.seed = seed;
  if (*output_opt) config.output_path = output;

  std::ofstream file;
  std::ostream* sink = &out;
  if (config.output_path) {
    file.open(*config.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *config.output_path << " for writing\n";
      return kUsageError;
    }
    sink = &file;
  }

  try {
    if (*eval) return cmd_eval(function, eval_args, config, *sink);
    if (*integrate) return cmd_integrate(target, integrate_args, config, *sink);
    if (*verify_cmd) return cmd_verify(id, config, *sink);
    if (*discover) return cmd_discover(config, norm_bound, *sink);
    if (*sample) return cmd_sample(points, config, *sink);
    if (*constants) return cmd_constants(config, *sink);
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << " (minimum --digits " << e.minimum_digits() << ")\n";
    return kUsageError;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const IntegrandError& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace clausen::cli
