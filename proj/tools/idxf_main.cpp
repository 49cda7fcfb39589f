// idxf: numerical certification and evaluation CLI for the weighted
// Bergman space, the relativistic pseudoharmonic-oscillator eigenbasis,
// and the index 2F2 coherent-state transform between them.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "idxf/bergman.hpp"
#include "idxf/bessel.hpp"
#include "idxf/errors.hpp"
#include "idxf/gamma.hpp"
#include "idxf/oscillator.hpp"
#include "idxf/report_io.hpp"
#include "idxf/transform.hpp"
#include "idxf/verification.hpp"
#include "idxf/version.hpp"

namespace {

using idxf::ComplexValue;
using idxf::ConfigError;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Options {
  std::string config_path;
  std::string suite = "all";
  std::optional<double> gamma;
  std::string mode = "strict";
  std::optional<double> tol;
  std::string out;
  std::string input;
  std::string grid;
  std::string what;
  std::string x;
  std::string n;
  std::string w;
  std::string z;
  bool linear = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output path: " + out_path);
  out << payload;
  if (!out) throw ConfigError("failed writing output: " + out_path);
}

// Values from --config fill any option the command line left untouched.
void merge_config(const CLI::App& cmd, Options& opt) {
  if (opt.config_path.empty()) return;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(opt.config_path));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
  const auto untouched = [&cmd](const std::string& flag) {
    const CLI::Option* o = cmd.get_option_no_throw("--" + flag);
    return o != nullptr && o->count() == 0;
  };
  const auto str = [&doc](const char* key, std::string& slot) {
    if (doc.contains(key)) slot = doc.at(key).get<std::string>();
  };
  try {
    if (untouched("suite")) str("suite", opt.suite);
    if (untouched("mode")) str("mode", opt.mode);
    if (untouched("out")) str("out", opt.out);
    if (untouched("input")) str("input", opt.input);
    if (untouched("grid")) str("grid", opt.grid);
    if (untouched("what")) str("what", opt.what);
    if (untouched("x")) str("x", opt.x);
    if (untouched("n")) str("n", opt.n);
    if (untouched("w")) str("w", opt.w);
    if (untouched("z")) str("z", opt.z);
    if (untouched("gamma") && doc.contains("gamma")) {
      opt.gamma = doc.at("gamma").get<double>();
    }
    if (untouched("tol") && doc.contains("tol")) {
      opt.tol = doc.at("tol").get<double>();
    }
    if (untouched("linear") && doc.contains("linear")) {
      opt.linear = doc.at("linear").get<bool>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config value has the wrong type: ") + e.what());
  }
}

idxf::GammaMode parse_mode(const std::string& mode) {
  if (mode == "strict") return idxf::GammaMode::kStrictHalfInteger;
  if (mode == "extended") return idxf::GammaMode::kExtendedReal;
  throw ConfigError("mode must be 'strict' or 'extended'");
}

double checked_tol(double tol) {
  if (!(tol >= 1e-12 && tol <= 1e-3)) {
    throw ConfigError("tol must lie in [1e-12, 1e-3]");
  }
  return tol;
}

idxf::GammaParam gamma_param(const Options& opt) {
  if (!opt.gamma) throw ConfigError("--gamma is required");
  return idxf::GammaParam::make(*opt.gamma, parse_mode(opt.mode));
}

int run_verify(const Options& opt) {
  const auto suite = idxf::suite_from_name(opt.suite);
  if (!suite) throw ConfigError("unknown suite: '" + opt.suite + "'");
  const idxf::GammaMode mode = parse_mode(opt.mode);
  idxf::CheckOptions checks;
  if (opt.gamma) {
    idxf::GammaParam::validate(*opt.gamma, mode);
    checks.gamma = *opt.gamma;
  }
  if (opt.tol) checks.tol_override = checked_tol(*opt.tol);

  idxf::QuadratureSpec spec;  // fixed internal budget keeps runs reproducible

  const auto reports = idxf::run_suite(*suite, checks, spec);
  std::map<std::string, std::string> config;
  config["suite"] = opt.suite;
  config["mode"] = opt.mode;
  if (opt.gamma) config["gamma"] = idxf::format_double(*opt.gamma);
  if (opt.tol) config["tol"] = idxf::format_double(*opt.tol);
  write_output(opt.out, idxf::verify_report_json(opt.suite, config, reports));

  for (const auto& r : reports) {
    if (!r.pass) return kExitCheckFailed;
  }
  return kExitOk;
}

int run_transform(const Options& opt) {
  const idxf::GammaParam gp = gamma_param(opt);
  idxf::require_oscillator_gamma(gp);
  if (opt.input.empty()) throw ConfigError("--input is required");
  if (opt.grid.empty()) throw ConfigError("--grid is required");
  const std::vector<ComplexValue> grid = idxf::parse_grid(opt.grid);
  const double tol = opt.tol ? checked_tol(*opt.tol) : 1e-8;

  const std::string text = read_file(opt.input);
  // A sampled-function file announces itself with its envelope line;
  // anything else is a coefficient list.
  bool sampled = false;
  {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      sampled = line.compare(pos, 8, "envelope") == 0;
      break;
    }
  }

  idxf::TransformResult result;
  if (sampled) {
    const idxf::SampledFunction sf = idxf::parse_sampled_function(text);
    idxf::HalfLineFunction phi = idxf::sampled_to_halfline(sf, tol);
    if (opt.linear) {
      auto base = phi.eval;
      phi.eval = [base](double xx) { return std::conj(base(xx)); };
    }
    idxf::QuadratureSpec spec;
    spec.tol = std::min(1e-9, tol / 10.0);
    result = idxf::transform_apply_sampled(phi, grid, gp, spec);
    result.input_descriptor = "sampled:" + opt.input;
  } else {
    idxf::EigenExpansion expansion{gp, idxf::parse_coefficients(text)};
    if (opt.linear) {
      for (auto& c : expansion.coefficients) c = std::conj(c);
    }
    result = idxf::transform_apply_coeffs(expansion, grid);
    result.input_descriptor = "coefficients:" + opt.input;
  }
  write_output(opt.out, idxf::transform_csv(result, opt.linear));
  return kExitOk;
}

int run_eval(const Options& opt) {
  static const std::vector<std::string> whats = {
      "basis", "kernel", "kernel-diagonal", "eigenfunction", "coherent-state",
      "energy"};
  if (std::find(whats.begin(), whats.end(), opt.what) == whats.end()) {
    throw ConfigError("--what must be one of basis|kernel|kernel-diagonal|"
                      "eigenfunction|coherent-state|energy");
  }
  const idxf::GammaParam gp = gamma_param(opt);
  std::map<std::string, std::string> meta;
  meta["gamma"] = idxf::format_double(gp.gamma);
  meta["mode"] = opt.mode;

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> columns;
  const auto fd = [](double v) { return idxf::format_double(v); };

  if (opt.what == "basis") {
    if (opt.n.empty() || opt.grid.empty()) {
      throw ConfigError("basis needs --n and --grid");
    }
    columns = {"n", "z_re", "z_im", "psi_re", "psi_im"};
    for (int n : idxf::parse_index_list(opt.n)) {
      for (const auto& z : idxf::parse_grid(opt.grid)) {
        const ComplexValue v = idxf::basis_element(n, gp, z);
        rows.push_back({std::to_string(n), fd(z.real()), fd(z.imag()), fd(v.real()),
                        fd(v.imag())});
      }
    }
  } else if (opt.what == "kernel") {
    if (opt.w.empty() || opt.grid.empty()) {
      throw ConfigError("kernel needs --w and --grid");
    }
    const ComplexValue w = idxf::parse_complex(opt.w);
    meta["w"] = fd(w.real()) + "+" + fd(w.imag()) + "i";
    columns = {"z_re", "z_im", "K_re", "K_im"};
    for (const auto& z : idxf::parse_grid(opt.grid)) {
      const ComplexValue v = idxf::kernel_eval(z, w, gp);
      rows.push_back({fd(z.real()), fd(z.imag()), fd(v.real()), fd(v.imag())});
    }
  } else if (opt.what == "kernel-diagonal") {
    if (opt.grid.empty()) throw ConfigError("kernel-diagonal needs --grid");
    columns = {"z_re", "z_im", "K"};
    for (const auto& z : idxf::parse_grid(opt.grid)) {
      const ComplexValue v = idxf::kernel_closed(z, z, gp);
      rows.push_back({fd(z.real()), fd(z.imag()), fd(v.real())});
    }
  } else if (opt.what == "eigenfunction") {
    if (opt.n.empty() || opt.x.empty()) {
      throw ConfigError("eigenfunction needs --n and --x");
    }
    idxf::require_oscillator_gamma(gp);
    columns = {"n", "x", "phi_re", "phi_im"};
    for (int n : idxf::parse_index_list(opt.n)) {
      for (double xx : idxf::parse_real_grid(opt.x)) {
        const ComplexValue v = idxf::eigenfunction_eval(n, gp, xx);
        rows.push_back({std::to_string(n), fd(xx), fd(v.real()), fd(v.imag())});
      }
    }
  } else if (opt.what == "coherent-state") {
    if (opt.z.empty() || opt.x.empty()) {
      throw ConfigError("coherent-state needs --z and --x");
    }
    const idxf::CoherentStateLabel label{idxf::parse_complex(opt.z), gp};
    meta["z"] = opt.z;
    columns = {"x", "cs_re", "cs_im"};
    for (double xx : idxf::parse_real_grid(opt.x)) {
      const ComplexValue v = idxf::cs_closed(xx, label);
      rows.push_back({fd(xx), fd(v.real()), fd(v.imag())});
    }
  } else {  // energy
    if (opt.n.empty()) throw ConfigError("energy needs --n");
    idxf::require_oscillator_gamma(gp);
    meta["unit"] = "hbar*omega";
    columns = {"n", "energy"};
    for (int n : idxf::parse_index_list(opt.n)) {
      // Equal-root spectrum: 2n + 2*gamma in units of hbar*omega.
      rows.push_back({std::to_string(n), fd(2.0 * n + 2.0 * gp.gamma)});
    }
  }
  write_output(opt.out, idxf::eval_csv(opt.what, meta, columns, rows));
  return kExitOk;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config_path, "JSON config file mirroring the flags");
  cmd->add_option("--gamma", opt.gamma, "space parameter gamma");
  cmd->add_option("--mode", opt.mode, "gamma validation mode: strict|extended");
  cmd->add_option("--tol", opt.tol, "tolerance in [1e-12, 1e-3]");
  cmd->add_option("--out", opt.out, "output path (stdout when omitted)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"index 2F2 hypergeometric transform toolkit"};
  app.set_version_flag("--version", std::string("idxf ") + idxf::kVersion);
  app.require_subcommand(1);

  Options vopt, topt, eopt;
  CLI::App* verify = app.add_subcommand("verify", "run certification suites");
  add_common(verify, vopt);
  verify->add_option("--suite", vopt.suite,
                     "gamma|bessel|hyper|bergman|oscillator|transform|all");

  CLI::App* transform = app.add_subcommand("transform", "apply the transform");
  add_common(transform, topt);
  transform->add_option("--input", topt.input,
                        "coefficient file or sampled-function file");
  transform->add_option("--grid", topt.grid, "complex evaluation grid");
  transform->add_flag("--linear", topt.linear,
                      "transform conj(phi) (a linear map in phi)");

  CLI::App* eval = app.add_subcommand("eval", "tabulate objects on grids");
  add_common(eval, eopt);
  eval->add_option("--what", eopt.what,
                   "basis|kernel|kernel-diagonal|eigenfunction|coherent-state|energy");
  eval->add_option("--grid", eopt.grid, "complex grid");
  eval->add_option("--x", eopt.x, "real half-line grid");
  eval->add_option("--n", eopt.n, "index list, e.g. 0..6 or 0,2,4");
  eval->add_option("--w", eopt.w, "kernel second argument");
  eval->add_option("--z", eopt.z, "coherent-state label");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (verify->parsed()) {
      merge_config(*verify, vopt);
      return run_verify(vopt);
    }
    if (transform->parsed()) {
      merge_config(*transform, topt);
      return run_transform(topt);
    }
    merge_config(*eval, eopt);
    return run_eval(eopt);
  } catch (const idxf::QuadratureFailure& e) {
    std::cerr << "idxf: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const idxf::NoConvergence& e) {
    std::cerr << "idxf: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const idxf::OverflowError& e) {
    std::cerr << "idxf: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const idxf::EnvelopeError& e) {
    std::cerr << "idxf: input rejected: " << e.what() << "\n";
    return kExitConfig;
  } catch (const idxf::Error& e) {
    std::cerr << "idxf: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "idxf: " << e.what() << "\n";
    return kExitNumerical;
  }
}
