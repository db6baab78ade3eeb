#include "sandwich/cli.hpp"

#include "sandwich/axiom_suite.hpp"
#include "sandwich/certificate_json.hpp"
#include "sandwich/decimal.hpp"
#include "sandwich/parser.hpp"
#include "sandwich/table.hpp"
#include "sandwich/transform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>

namespace sandwich::cli {

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotConvergent:
    case ErrorCode::SandwichGap:
    case ErrorCode::ReciprocalOfNull:
    case ErrorCode::NotSeparated:
      return 2;
    case ErrorCode::VerificationFailed:
      return 3;
    default:
      return 1;
  }
}

namespace {

struct Settings {
  EngineConfig engine;
  GridSpec grid;
  std::string table_dir = "./tables";
};

Rational rational_field(const nlohmann::json& v, const std::string& key) {
  std::string text = v.is_string() ? v.get<std::string>() : v.dump();
  auto r = Scalar::parse_rational(text);
  if (!r) throw Error(ErrorCode::InvalidArgument, "config: " + key + " is not a number: " + text);
  return *r;
}

void load_config(const std::string& path, Settings& s) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read config " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidArgument, "config is not JSON: " + std::string(ex.what()));
  }
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "config must be a JSON object");
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& key = it.key();
      const auto& v = it.value();
      if (key == "eta_eval") {
        s.engine.tolerances.eta_eval = v.get<double>();
      } else if (key == "eta_lim") {
        s.engine.tolerances.eta_lim = v.get<double>();
      } else if (key == "eta_env") {
        s.engine.tolerances.eta_env = v.get<double>();
      } else if (key == "table_dir") {
        s.table_dir = v.get<std::string>();
      } else if (key == "grid") {
        if (v.contains("start")) s.grid.start = rational_field(v["start"], "grid.start");
        if (v.contains("ratio")) s.grid.ratio = rational_field(v["ratio"], "grid.ratio");
        if (v.contains("count")) s.grid.count = v["count"].get<int>();
      } else if (key == "verify") {
        if (v.contains("decades")) s.engine.verify.decades = v["decades"].get<int>();
        if (v.contains("samples")) s.engine.verify.samples = v["samples"].get<int>();
      } else {
        throw Error(ErrorCode::InvalidArgument, "config: unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidArgument, "config: " + std::string(ex.what()));
  }
}

void validate_grid(const GridSpec& g) {
  if (g.ratio <= 1) throw Error(ErrorCode::InvalidArgument, "grid ratio must exceed 1");
  if (g.count < 2) throw Error(ErrorCode::InvalidArgument, "grid count must be at least 2");
}

Rational rational_flag(const std::string& text, const std::string& name) {
  auto r = Scalar::parse_rational(text);
  if (!r) throw Error(ErrorCode::InvalidArgument, name + " is not a number: " + text);
  return *r;
}

void print_pretty(std::ostream& out, const LimitCertificate& cert) {
  out << "expr        " << print(cert.expr) << '\n'
      << "limit       " << format_decimal(cert.limit) << '\n'
      << "path        " << path_name(cert.path) << '\n'
      << "tail_start  " << format_decimal(Scalar(cert.tail_start)) << '\n'
      << "gap         " << format_decimal(cert.gap) << '\n';
  for (const auto& row : cert.eps_table)
    out << "eps " << format_decimal(row.eps) << "  X " << format_decimal(row.x) << '\n';
  out << "trace      ";
  for (const auto& r : cert.witnesses.trace()) out << ' ' << r;
  out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified limits of functions on tails (x -> inf)", "sandwich"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<double> eta_lim, eta_env;
  bool pretty = false;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--eta-lim", eta_lim, "limit equality tolerance");
  app.add_option("--eta-env", eta_env, "largest acceptable final envelope gap");
  app.add_flag("--pretty", pretty, "human-readable output");

  std::string expr_text;
  auto* limit_cmd = app.add_subcommand("limit", "limit certificate as JSON");
  limit_cmd->add_option("expr", expr_text)->required();

  std::string eps_text;
  auto* witness_cmd = app.add_subcommand("witness", "X(eps) with |f(x) - L| < eps for x > X");
  witness_cmd->add_option("expr", expr_text)->required();
  witness_cmd->add_option("--eps", eps_text)->required();

  std::string start_text, ratio_text;
  std::optional<int> count;
  auto* envelope_cmd = app.add_subcommand("envelope", "suffix envelopes as CSV x,f,m,M");
  envelope_cmd->add_option("expr", expr_text)->required();
  envelope_cmd->add_option("--start", start_text);
  envelope_cmd->add_option("--ratio", ratio_text);
  envelope_cmd->add_option("--count", count);

  std::uint64_t seed = 42;
  int cases = 10;
  bool canary = false;
  auto* check_cmd = app.add_subcommand("check", "run the property battery, one JSON line per property");
  check_cmd->add_option("--seed", seed);
  check_cmd->add_option("--cases", cases);
  check_cmd->add_flag("--canary", canary, "perturb the sum law by 1e-3");

  std::string csv_path;
  auto* ingest_cmd = app.add_subcommand("ingest", "validate and register a table CSV");
  ingest_cmd->add_option("csv", csv_path)->required();

  std::string target_text;
  auto* transform_cmd = app.add_subcommand("transform", "rewrite a one-sided or -inf limit as a limit at +inf");
  transform_cmd->add_option("expr", expr_text)->required();
  transform_cmd->add_option("--to", target_text)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    out << error_json("UsageError", e.what());
    err << app.help();
    return 1;
  }

  try {
    Settings settings;
    if (!config_path.empty()) load_config(config_path, settings);
    if (eta_lim) settings.engine.tolerances.eta_lim = *eta_lim;
    if (eta_env) settings.engine.tolerances.eta_env = *eta_env;
    if (const char* dir = std::getenv("SANDWICH_TABLE_DIR"); dir && *dir) settings.table_dir = dir;
    validate_grid(settings.grid);

    TableStore store(settings.table_dir);
    auto parse_expr = [&] { return parse(expr_text, store.resolver()); };
    const int indent = pretty ? 2 : -1;

    if (limit_cmd->parsed()) {
      LimitEngine engine(settings.engine);
      LimitCertificate cert = engine.limit(parse_expr());
      if (pretty)
        print_pretty(out, cert);
      else
        out << certificate_json(cert);
      return 0;
    }
    if (witness_cmd->parsed()) {
      LimitEngine engine(settings.engine);
      Scalar eps(rational_flag(eps_text, "--eps"));
      if (eps.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "--eps must be positive");
      LimitCertificate cert = engine.limit(parse_expr());
      out << threshold_json(eps, engine.eps_witness(cert, eps), indent);
      return 0;
    }
    if (envelope_cmd->parsed()) {
      LimitEngine engine(settings.engine);
      GridSpec grid = settings.grid;
      if (!start_text.empty()) grid.start = rational_flag(start_text, "--start");
      if (!ratio_text.empty()) grid.ratio = rational_flag(ratio_text, "--ratio");
      if (count) grid.count = *count;
      validate_grid(grid);
      out << envelope_csv(engine.envelope(parse_expr(), grid));
      return 0;
    }
    if (check_cmd->parsed()) {
      LimitEngine engine = canary ? sum_law_canary(settings.engine) : LimitEngine(settings.engine);
      auto reports = run_battery(engine, seed, cases);
      bool ok = true;
      for (const auto& r : reports) {
        ok = ok && r.passed();
        if (pretty)
          out << r.id << (r.passed() ? "  pass  " : "  FAIL  ") << r.cases << " cases, " << r.failures.size()
              << " failures\n";
        else
          out << to_json_line(r) << '\n';
      }
      return ok ? 0 : 4;
    }
    if (ingest_cmd->parsed()) {
      nlohmann::ordered_json j;
      j["id"] = store.ingest(csv_path);
      out << j.dump(indent) << '\n';
      return 0;
    }
    if (transform_cmd->parsed()) {
      TailTarget target = TailTarget::parse(target_text);
      Expr t = transform_tail(parse_expr(), target);
      nlohmann::ordered_json j;
      j["expr"] = print(t);
      j["target"] = target.str();
      out << j.dump(indent) << '\n';
      return 0;
    }
    out << error_json("UsageError", "no command");
    return 1;
  } catch (const Error& e) {
    out << error_json(error_name(e.code()), e.detail());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    out << error_json("InternalError", e.what());
    return 1;
  }
}

}  // namespace sandwich::cli
