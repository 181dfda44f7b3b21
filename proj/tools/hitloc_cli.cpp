// Command-line front end: density and CF evaluation, sampling, entropy
// sweeps, capacity tables, offset curves and the validation suite.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hitloc/capacity.hpp"
#include "hitloc/entropy.hpp"
#include "hitloc/errors.hpp"
#include "hitloc/io.hpp"
#include "hitloc/ndfhl.hpp"
#include "hitloc/parallel.hpp"
#include "hitloc/validation.hpp"

namespace {

using namespace hitloc;

constexpr int kExitGateFailed = 1;
constexpr int kExitUsage = 2;

struct Common {
  int d = 3;
  double lambda = 1.0;
  double u = 1.0;
  std::string format = "csv";
  std::string output;
};

// "log:lo:hi:n", "lin:lo:hi:n" or a comma-separated list.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  const char sep = text.find(':') != std::string::npos ? ':' : ',';
  while (std::getline(ss, item, sep)) parts.push_back(item);

  auto number = [&text](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw DomainError("bad grid '" + text + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw DomainError("bad grid '" + text + "'");
    return v;
  };

  std::vector<double> grid;
  if (sep == ',') {
    for (const std::string& s : parts) grid.push_back(number(s));
    return grid;
  }
  if (parts.size() != 4 || (parts[0] != "log" && parts[0] != "lin")) {
    throw DomainError("grid must be log:lo:hi:n, lin:lo:hi:n or a comma list, got '" + text + "'");
  }
  const double lo = number(parts[1]);
  const double hi = number(parts[2]);
  const double n_real = number(parts[3]);
  const int n = static_cast<int>(n_real);
  if (n < 1 || n != n_real) throw DomainError("grid point count must be a positive integer");
  const bool log_scale = parts[0] == "log";
  if (log_scale && !(lo > 0.0 && hi > 0.0)) throw DomainError("log grid bounds must be > 0");
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    // Base-10 exponents keep decade points exact.
    grid.push_back(log_scale ? std::pow(10.0, std::log10(lo) + t * (std::log10(hi) - std::log10(lo)))
                             : lo + t * (hi - lo));
  }
  if (log_scale) {
    // Pin the endpoints so they print exactly as given.
    grid.front() = lo;
    grid.back() = hi;
  }
  return grid;
}

void add_params(CLI::App* cmd, Common& c, bool with_u = true) {
  cmd->add_option("--d", c.d, "Ambient dimension d (noise lives in R^{d-1})")->capture_default_str();
  cmd->add_option("--lambda", c.lambda, "Source-to-boundary distance")->capture_default_str();
  if (with_u) cmd->add_option("--u", c.u, "Normalized drift u >= 0")->capture_default_str();
}

void add_output(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--output", c.output, "Output file (stdout when omitted)");
}

// Writes through `emit` to --output or stdout.
template <class Emit>
void with_stream(const std::string& path, Emit emit) {
  if (path.empty()) {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + path + "'");
  emit(file);
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

void emit_scalar_rows(std::ostream& os, const Common& c, const char* arg, const char* value_name,
                      const std::vector<double>& args, const std::vector<double>& values) {
  if (c.format == "json") {
    os << '[';
    for (std::size_t i = 0; i < args.size(); ++i) {
      os << (i ? ",{" : "{") << "\"d\":" << c.d << ",\"lambda\":" << io::format_number(c.lambda)
         << ",\"u\":" << io::format_number(c.u) << ",\"" << arg << "\":" << io::format_number(args[i]) << ",\""
         << value_name << "\":" << io::format_number(values[i]) << '}';
    }
    os << "]\n";
    return;
  }
  os << "d,lambda,u," << arg << ',' << value_name << '\n';
  for (std::size_t i = 0; i < args.size(); ++i) {
    os << c.d << ',' << io::format_number(c.lambda) << ',' << io::format_number(c.u) << ','
       << io::format_number(args[i]) << ',' << io::format_number(values[i]) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_limit();

  CLI::App app{"Boundary-hitting noise: densities, entropy, capacity bounds and validation"};
  app.require_subcommand(1);

  Common c;
  std::vector<double> radii{0.0};
  std::vector<double> omega_norms{1.0};
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  std::string d_list = "2,3,4";
  std::string u_grid = "log:1e-3:1e2:25";
  std::optional<double> power;
  std::string power_grid;
  double tol = 1e-8;
  std::size_t validate_count = 200000;
  std::size_t sde_paths = 100000;
  std::uint64_t validate_seed = 7;

  CLI::App* pdf_cmd = app.add_subcommand("pdf", "Density at radius |n| = r (Cauchy branch at u = 0)");
  add_params(pdf_cmd, c);
  pdf_cmd->add_option("--r", radii, "Radius or comma-separated radii")->delimiter(',');
  add_output(pdf_cmd, c);

  CLI::App* cf_cmd = app.add_subcommand("cf", "Characteristic function at |omega|");
  add_params(cf_cmd, c);
  cf_cmd->add_option("--omega-norm", omega_norms, "Frequency norm(s), comma-separated")->delimiter(',');
  add_output(cf_cmd, c);

  CLI::App* sample_cmd = app.add_subcommand("sample", "Seeded draws; --output also writes a <output>.json sidecar");
  add_params(sample_cmd, c);
  sample_cmd->add_option("--count", count, "Number of draws")->capture_default_str();
  sample_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
  add_output(sample_cmd, c);

  CLI::App* sweep_cmd = app.add_subcommand("entropy-sweep", "h(N) over a u grid, plus g(p) at u = 0 per d");
  sweep_cmd->add_option("--d", d_list, "Comma-separated dimensions")->capture_default_str();
  sweep_cmd->add_option("--lambda", c.lambda, "Source-to-boundary distance")->capture_default_str();
  sweep_cmd->add_option("--u-grid", u_grid, "log:lo:hi:n, lin:lo:hi:n or a comma list")->capture_default_str();
  sweep_cmd->add_option("--tol", tol, "Quadrature tolerance, nats")->capture_default_str();
  add_output(sweep_cmd, c);

  CLI::App* cap_cmd = app.add_subcommand("capacity", "Capacity upper/lower bounds and c*");
  add_params(cap_cmd, c);
  auto* power_opt = cap_cmd->add_option("--power", power, "Input power P");
  auto* grid_opt = cap_cmd->add_option("--power-grid", power_grid, "log:lo:hi:n, lin:lo:hi:n or a comma list");
  power_opt->excludes(grid_opt);
  cap_cmd->add_option("--tol", tol, "Quadrature tolerance, nats")->capture_default_str();
  add_output(cap_cmd, c);

  CLI::App* offset_cmd = app.add_subcommand("offset-curve", "L(u) over a u grid, with the u = 0 endpoint first");
  add_params(offset_cmd, c, false);
  offset_cmd->add_option("--u-grid", u_grid, "log:lo:hi:n, lin:lo:hi:n or a comma list")->capture_default_str();
  add_output(offset_cmd, c);

  CLI::App* validate_cmd = app.add_subcommand("validate", "Run the validation suite; JSON lines, exit 1 on failure");
  validate_cmd->add_option("--seed", validate_seed, "Suite seed")->capture_default_str();
  validate_cmd->add_option("--count", validate_count, "Draws per CF gate")->capture_default_str();
  validate_cmd->add_option("--sde-paths", sde_paths, "Simulated paths for the SDE checks")->capture_default_str();
  validate_cmd->add_option("--output", c.output, "Output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (pdf_cmd->parsed()) {
      const NdfhlParams params{c.d, c.lambda, c.u};
      params.validate();
      std::vector<double> values;
      for (double r : radii) values.push_back(std::exp(log_pdf_dispatch_radial(params, r)));
      with_stream(c.output, [&](std::ostream& os) { emit_scalar_rows(os, c, "r", "pdf", radii, values); });
    } else if (cf_cmd->parsed()) {
      const NdfhlParams params{c.d, c.lambda, c.u};
      std::vector<double> values;
      for (double w : omega_norms) values.push_back(cf_radial(params, w));
      with_stream(c.output, [&](std::ostream& os) { emit_scalar_rows(os, c, "omega_norm", "cf", omega_norms, values); });
    } else if (sample_cmd->parsed()) {
      const SampleBatch batch = sample(NdfhlParams{c.d, c.lambda, c.u}, count, seed);
      with_stream(c.output, [&](std::ostream& os) {
        if (c.format == "json") {
          io::write_samples_json(os, batch);
        } else {
          io::write_samples_csv(os, batch);
        }
      });
      if (!c.output.empty() && c.format == "csv") {
        with_stream(c.output + ".json", [&](std::ostream& os) { io::write_sample_metadata_json(os, batch); });
      }
    } else if (sweep_cmd->parsed()) {
      const std::vector<double> dims = parse_grid(d_list);
      const std::vector<double> us = parse_grid(u_grid);
      std::vector<EntropyEstimate> rows;
      for (double dv : dims) {
        const int d = static_cast<int>(dv);
        if (d != dv) throw DomainError("--d entries must be integers");
        for (double u : us) rows.push_back(entropy_quadrature(NdfhlParams{d, c.lambda, u}, tol));
        rows.push_back(noise_entropy(NdfhlParams{d, c.lambda, 0.0}));
      }
      with_stream(c.output, [&](std::ostream& os) {
        if (c.format == "json") {
          io::write_entropy_json(os, rows);
        } else {
          io::write_entropy_csv(os, rows);
        }
      });
    } else if (cap_cmd->parsed()) {
      std::vector<double> powers;
      if (power) {
        powers.push_back(*power);
      } else if (!power_grid.empty()) {
        powers = parse_grid(power_grid);
      } else {
        throw DomainError("capacity: give --power or --power-grid");
      }
      const std::vector<CapacityReport> rows = capacity_sweep(NdfhlParams{c.d, c.lambda, c.u}, powers, tol);
      with_stream(c.output, [&](std::ostream& os) {
        if (c.format == "json") {
          io::write_capacity_json(os, rows);
        } else {
          io::write_capacity_csv(os, rows);
        }
      });
    } else if (offset_cmd->parsed()) {
      std::vector<double> us = {0.0};
      for (double u : parse_grid(u_grid)) us.push_back(u);
      const auto curve = offset_curve(c.d, c.lambda, us);
      with_stream(c.output, [&](std::ostream& os) {
        if (c.format == "json") {
          io::write_offset_json(os, c.d, c.lambda, curve);
        } else {
          io::write_offset_csv(os, c.d, c.lambda, curve);
        }
      });
    } else if (validate_cmd->parsed()) {
      SuiteConfig cfg;
      cfg.seed = validate_seed;
      cfg.count = validate_count;
      cfg.sde_paths = sde_paths;
      const std::vector<ValidationReport> reports = validation_suite(cfg);
      with_stream(c.output, [&](std::ostream& os) { io::write_validation_jsonl(os, reports); });
      if (!all_as_expected(reports)) {
        std::cerr << "validate: at least one gate did not match its expectation\n";
        return kExitGateFailed;
      }
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGateFailed;
  }
  return 0;
}
