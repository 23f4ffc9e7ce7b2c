// Copyright 2026 The cp-phase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpphase/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cpphase/interferometer.hpp"
#include "cpphase/model_io.hpp"
#include "cpphase/oscillator.hpp"
#include "cpphase/phase.hpp"

namespace cpphase::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string subcommand;
  std::string model_path;
  std::string state_path;
  std::string alpha = "1,0";
  std::string beta;
  double omega = 1.0;
  double k = 0.1;
  long cutoff = 0;  // 0 selects the default rule
  std::optional<double> t;
  std::vector<double> dt;
  long chi_points = 64;
  long n_samples = 10000;
  std::string output_path;
  std::string format;
};

std::string fmt(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_fmt(double x) { return std::isfinite(x) ? fmt(x) : ""; }

// Flat, insertion-ordered JSON object with %.17g numbers.
class JsonObject {
 public:
  JsonObject& number(const std::string& key, double v) { return raw(key, fmt(v)); }
  JsonObject& null(const std::string& key) { return raw(key, "null"); }
  JsonObject& boolean(const std::string& key, bool v) { return raw(key, v ? "true" : "false"); }
  JsonObject& text(const std::string& key, const std::string& v) { return raw(key, "\"" + v + "\""); }
  JsonObject& object(const std::string& key, const JsonObject& v) { return raw(key, v.str()); }
  JsonObject& raw(const std::string& key, std::string v) {
    fields_.emplace_back(key, std::move(v));
    return *this;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (i) s += ", ";
      s += "\"" + fields_[i].first + "\": " + fields_[i].second;
    }
    return s + "}";
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

Complex parse_complex(const std::string& text, const char* option) {
  std::istringstream in(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw UsageError(std::string(option) + ": expected RE[,IM]");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw UsageError(std::string(option) + ": expected RE[,IM]");
  }
  in >> std::ws;
  if (!in.eof()) throw UsageError(std::string(option) + ": trailing characters");
  return {re, im};
}

OscillatorParams oscillator_params(const RunConfig& cfg) {
  std::optional<Index> cutoff;
  if (cfg.cutoff > 0) cutoff = cfg.cutoff;
  return OscillatorParams::make(parse_complex(cfg.alpha, "--alpha"), cfg.omega, cfg.k, cutoff);
}

struct Scenario {
  LindbladModel model;
  DensityMatrix rho0;
};

// A model file with an optional state file (default |0><0|), or the damped
// oscillator preset with a coherent initial state.
Scenario load_scenario(const RunConfig& cfg) {
  if (cfg.model_path.empty()) {
    const OscillatorParams p = oscillator_params(cfg);
    return {damped_model(p), coherent_state(p.alpha, p.cutoff)};
  }
  LindbladModel model = load_model(cfg.model_path);
  if (!cfg.state_path.empty()) {
    DensityMatrix rho = load_state(cfg.state_path);
    if (rho.dim() != model.dim()) throw ModelFormatError("rho: dimension differs from the model");
    return {std::move(model), std::move(rho)};
  }
  ComplexVector ground = ComplexVector::Zero(model.dim());
  ground(0) = 1.0;
  return {std::move(model), DensityMatrix::pure(ground)};
}

double require_t(const RunConfig& cfg) {
  if (!cfg.t) throw UsageError("--t is required for " + cfg.subcommand);
  if (!(*cfg.t >= 0.0)) throw UsageError("--t must be non-negative");
  return *cfg.t;
}

double single_dt(const RunConfig& cfg) {
  if (cfg.dt.size() > 1) throw UsageError("--dt takes a single value for " + cfg.subcommand);
  const double dt = cfg.dt.empty() ? 1e-3 : cfg.dt.front();
  if (!(dt > 0.0)) throw UsageError("--dt must be positive");
  return dt;
}

// The integrator step cannot exceed the horizon.
double clamp_dt(double dt, double t) { return t > 0.0 ? std::min(dt, t) : dt; }

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
  std::string s;
  for (std::size_t i = 0; i < header.size(); ++i) s += (i ? "," : "") + header[i];
  s += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + csv_fmt(row[i]);
    s += "\n";
  }
  return s;
}

std::string json_rows(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
  std::string s = "[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    JsonObject obj;
    for (std::size_t i = 0; i < header.size(); ++i) obj.number(header[i], rows[r][i]);
    s += (r ? ",\n " : "") + obj.str();
  }
  return s + "]\n";
}

std::string render_table(const RunConfig& cfg, const std::string& default_format,
                         const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows) {
  const std::string format = cfg.format.empty() ? default_format : cfg.format;
  return format == "csv" ? csv_table(header, rows) : json_rows(header, rows);
}

std::string cmd_phase(const RunConfig& cfg) {
  const double t = require_t(cfg);
  const double dt = clamp_dt(single_dt(cfg), t);
  const Scenario sc = load_scenario(cfg);
  const PhaseReport r = phase_report(sc.model, sc.rho0, t, dt);
  if (cfg.format == "csv") {
    return csv_table({"total", "visibility", "dynamical", "geometric", "t", "dt", "total_principal",
                      "geometric_wrapped"},
                     {{r.total, r.visibility, r.dynamical, r.geometric, t, dt, r.total_principal,
                       r.geometric_wrapped}});
  }
  JsonObject obj;
  obj.number("total", r.total)
      .number("visibility", r.visibility)
      .number("dynamical", r.dynamical)
      .number("geometric", r.geometric)
      .number("t", t)
      .number("dt", dt)
      .number("total_principal", r.total_principal)
      .number("geometric_wrapped", r.geometric_wrapped);
  return obj.str() + "\n";
}

std::string cmd_interfere(const RunConfig& cfg) {
  if (cfg.chi_points < 2) throw UsageError("--chi-points must be at least 2");
  const double t = require_t(cfg);
  const double dt = clamp_dt(single_dt(cfg), t);
  const Scenario sc = load_scenario(cfg);

  // rho(t) and S(t) do not depend on chi; assemble once per sample.
  const ComplexMatrix rho_t =
      t == 0.0 ? sc.rho0.matrix() : evolve(sc.model, sc.rho0, t, dt).final_state().matrix();
  const ComplexMatrix s = effective_propagator(sc.model, t);
  std::vector<std::vector<double>> rows;
  for (long j = 0; j < cfg.chi_points; ++j) {
    const double chi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(cfg.chi_points);
    const DensityMatrix out(hermitian_part(assemble_output(sc.rho0.matrix(), rho_t, s, chi)));
    const DetectorReading d = detector_intensity(out);
    rows.push_back({chi, d.raw, d.normalized});
  }
  return render_table(cfg, "csv", {"chi", "intensity_raw", "intensity_normalized"}, rows);
}

std::string cmd_oscillator(const RunConfig& cfg) {
  if (!cfg.model_path.empty()) throw UsageError("oscillator uses the built-in model; drop --model");
  const double t = require_t(cfg);
  const double dt = clamp_dt(single_dt(cfg), t);
  const OscillatorParams p = oscillator_params(cfg);
  const LindbladModel model = damped_model(p);
  const DensityMatrix rho0 = coherent_state(p.alpha, p.cutoff);
  const PhaseTriple exact = analytic_phases(p, t);

  PhaseReport numeric;
  PhaseReport shifted;
  std::optional<Complex> beta;
  if (!cfg.beta.empty()) beta = parse_complex(cfg.beta, "--beta");
  if (t > 0.0) {
    const Trajectory traj = evolve(model, rho0, t, dt);
    numeric = phase_report(model, traj);
    if (beta) shifted = phase_report(homodyne_transform(model, {*beta}), traj);
  }

  if (cfg.format == "csv") {
    std::vector<std::vector<double>> rows = {
        {numeric.total, exact.total, beta ? shifted.total : NAN},
        {numeric.dynamical, exact.dynamical, beta ? shifted.dynamical : NAN},
        {numeric.geometric, exact.geometric, beta ? shifted.geometric : NAN},
        {numeric.visibility, NAN, beta ? shifted.visibility : NAN}};
    const char* names[] = {"total", "dynamical", "geometric", "visibility"};
    std::string s = "quantity,numeric,analytic,homodyne\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      s += std::string(names[i]) + "," + csv_fmt(rows[i][0]) + "," + csv_fmt(rows[i][1]) + "," +
           csv_fmt(rows[i][2]) + "\n";
    }
    return s;
  }
  JsonObject params;
  params.number("alpha_re", p.alpha.real())
      .number("alpha_im", p.alpha.imag())
      .number("omega", p.omega)
      .number("k", p.k)
      .number("cutoff", static_cast<double>(p.cutoff))
      .number("t", t)
      .number("dt", dt);
  JsonObject num;
  num.number("total", numeric.total)
      .number("visibility", numeric.visibility)
      .number("dynamical", numeric.dynamical)
      .number("geometric", numeric.geometric);
  JsonObject ana;
  ana.number("total", exact.total).number("dynamical", exact.dynamical).number("geometric", exact.geometric);
  JsonObject obj;
  obj.object("params", params).object("numeric", num).object("analytic", ana);
  if (beta) {
    JsonObject hom;
    hom.number("beta_re", beta->real())
        .number("beta_im", beta->imag())
        .number("total", shifted.total)
        .number("visibility", shifted.visibility)
        .number("dynamical", shifted.dynamical)
        .number("geometric", shifted.geometric);
    obj.object("homodyne", hom);
  }
  return obj.str() + "\n";
}

std::string cmd_converge(const RunConfig& cfg) {
  const double t = cfg.t.value_or(1.0);
  if (!(t > 0.0)) throw UsageError("--t must be positive for converge");
  const std::vector<double> dts = cfg.dt.empty() ? std::vector<double>{1e-2, 5e-3, 2.5e-3} : cfg.dt;
  double smallest = t;
  for (double dt : dts) {
    if (!(dt > 0.0) || dt > t) throw UsageError("--dt values must lie in (0, t]");
    smallest = std::min(smallest, dt);
  }
  const Scenario sc = load_scenario(cfg);
  const double ref_dt = std::min(1e-4, smallest / 10.0);
  const DensityMatrix reference = evolve(sc.model, sc.rho0, t, ref_dt).final_state();

  std::vector<std::vector<double>> rows;
  for (double dt : dts) {
    const DensityMatrix composed =
        compose_nonselective(sc.model, sc.rho0, MeasurementSchedule::for_horizon(t, dt));
    const double err = trace_distance(composed.matrix(), reference.matrix());
    const double ratio = rows.empty() ? NAN : rows.back()[1] / err;
    rows.push_back({dt, err, ratio});
  }
  return render_table(cfg, "csv", {"dt", "trace_distance", "ratio"}, rows);
}

std::string cmd_area(const RunConfig& cfg) {
  if (!cfg.model_path.empty()) throw UsageError("area uses the built-in model; drop --model");
  const double t = require_t(cfg);
  const OscillatorParams p = oscillator_params(cfg);
  const double area = spiral_area(p, t, cfg.n_samples);
  const double phase = analytic_phases(p, t).geometric;
  const bool degenerate = area == 0.0;
  if (cfg.format == "csv") {
    return csv_table({"area", "geometric_phase", "ratio", "t", "n_samples"},
                     {{area, phase, degenerate ? NAN : phase / area, t, static_cast<double>(cfg.n_samples)}});
  }
  JsonObject obj;
  obj.number("area", area).number("geometric_phase", phase);
  if (degenerate) {
    obj.null("ratio");
  } else {
    obj.number("ratio", phase / area);
  }
  obj.number("t", t).number("n_samples", static_cast<double>(cfg.n_samples));
  return obj.str() + "\n";
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--model", cfg.model_path, "Model JSON file (default: damped oscillator preset)");
  sub->add_option("--state", cfg.state_path, "Initial state JSON file (default |0><0|)");
  sub->add_option("--alpha", cfg.alpha, "Coherent amplitude RE,IM of the preset");
  sub->add_option("--omega", cfg.omega, "Mode frequency of the preset");
  sub->add_option("--k", cfg.k, "Photo-counting rate of the preset");
  sub->add_option("--cutoff", cfg.cutoff, "Fock cutoff of the preset (default rule if 0)");
  sub->add_option("--t", cfg.t, "Evolution time");
  sub->add_option("--dt", cfg.dt, "Time step (comma-separated list for converge)")->delimiter(',');
  sub->add_option("--out", cfg.output_path, "Output file (default stdout)");
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phases of density matrices under completely positive evolution", "cp-phase"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* phase = app.add_subcommand("phase", "Total, dynamical and geometric phase at time t");
  auto* interfere = app.add_subcommand("interfere", "Detector intensity over a chi sweep");
  auto* oscillator = app.add_subcommand("oscillator", "Damped oscillator: numeric vs closed-form phases");
  auto* converge = app.add_subcommand("converge", "Kraus composition vs Lindblad solution over dt");
  auto* area = app.add_subcommand("area", "Amplitude-spiral area vs geometric phase");
  for (auto* sub : {phase, interfere, oscillator, converge, area}) add_common_options(sub, cfg);
  interfere->add_option("--chi-points", cfg.chi_points, "Number of chi samples in [0, 2pi)");
  oscillator->add_option("--beta", cfg.beta, "Homodyne local-oscillator amplitude RE,IM");
  area->add_option("--n-samples", cfg.n_samples, "Spiral samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    std::string result;
    if (phase->parsed()) {
      cfg.subcommand = "phase";
      result = cmd_phase(cfg);
    } else if (interfere->parsed()) {
      cfg.subcommand = "interfere";
      result = cmd_interfere(cfg);
    } else if (oscillator->parsed()) {
      cfg.subcommand = "oscillator";
      result = cmd_oscillator(cfg);
    } else if (converge->parsed()) {
      cfg.subcommand = "converge";
      result = cmd_converge(cfg);
    } else {
      cfg.subcommand = "area";
      result = cmd_area(cfg);
    }

    if (cfg.output_path.empty()) {
      out << result;
    } else {
      std::ofstream file(cfg.output_path, std::ios::binary);
      if (!file) throw UsageError("cannot write " + cfg.output_path);
      file << result;
    }
    return kOk;
  } catch (const NodalPointError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace cpphase::cli
