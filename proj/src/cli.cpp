// Copyright 2026 The ballid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ballid/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "ballid/config.hpp"
#include "ballid/curriculum.hpp"
#include "ballid/errors.hpp"
#include "ballid/format.hpp"
#include "ballid/randomization.hpp"
#include "ballid/rewards.hpp"
#include "ballid/sysid.hpp"
#include "ballid/trajectory.hpp"

namespace ballid {

namespace {

UnifiedConfig config_or_defaults(const std::string& path) {
  return path.empty() ? UnifiedConfig{} : load_config(path);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag,
                           const UnifiedConfig& cfg) {
  if (flag) return *flag;
  if (cfg.seed) return *cfg.seed;
  throw InvalidInput("this subcommand is stochastic: pass --seed or set "
                     "\"seed\" in the config file");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return in;
}

void close_checked(std::ofstream& out, const std::string& path) {
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

template <std::size_t N>
std::array<double, N> parse_vec(const std::string& s, const char* what) {
  const auto v = parse_double_list(s, ',', what);
  if (v.size() != N) {
    throw InvalidInput(std::string(what) + " needs " + std::to_string(N) +
                       " comma-separated values");
  }
  std::array<double, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

// x/out.csv -> x/out_<suffix>.csv
std::string with_suffix(const std::string& path, const std::string& suffix) {
  const std::filesystem::path p(path);
  std::filesystem::path q = p.parent_path() /
                            (p.stem().string() + "_" + suffix + p.extension().string());
  return q.string();
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string experiment;
  std::string params_file;
  std::string surface;
  std::string config;
  std::string out;
  double h0 = 1.0;
  double v0 = 2.0;
  std::size_t samples = kDefaultSamples;
  std::size_t repeats = 0;
  double noise = 0.0;
  std::optional<std::uint64_t> seed;
  std::optional<double> radius, mass, inertia_factor;
};

void add_simulate(CLI::App& app, SimulateArgs& a) {
  auto* cmd = app.add_subcommand("simulate", "Forward-simulate a drop or roll experiment");
  cmd->add_option("--experiment", a.experiment, "drop or roll")
      ->required()
      ->check(CLI::IsMember({"drop", "roll"}));
  auto* params = cmd->add_option("--params", a.params_file, "Contact parameter JSON");
  auto* surface = cmd->add_option("--surface", a.surface, "Preset: hard or grass")
                      ->check(CLI::IsMember({"hard", "grass"}));
  params->excludes(surface);
  cmd->add_option("--config", a.config, "Unified config (ball, sim sections)");
  cmd->add_option("--h0", a.h0, "Drop height [m]");
  cmd->add_option("--v0", a.v0, "Initial roll speed [m/s]");
  cmd->add_option("--samples", a.samples, "Samples including t=0");
  cmd->add_option("--repeats", a.repeats, "Emit k noisy replicas plus their mean");
  cmd->add_option("--noise", a.noise, "Gaussian sample noise std [m]");
  cmd->add_option("--seed", a.seed, "RNG seed");
  cmd->add_option("--radius", a.radius, "Ball radius [m]");
  cmd->add_option("--mass", a.mass, "Ball mass [kg]");
  cmd->add_option("--inertia-factor", a.inertia_factor, "I/(m r^2)");
  cmd->add_option("--out", a.out, "Output CSV")->required();
}

int run_simulate(const SimulateArgs& a, std::ostream& log) {
  UnifiedConfig cfg = config_or_defaults(a.config);
  if (a.radius) cfg.ball.radius = *a.radius;
  if (a.mass) cfg.ball.mass = *a.mass;
  if (a.inertia_factor) cfg.ball.inertia_factor = *a.inertia_factor;

  ContactParams params;
  if (!a.params_file.empty()) {
    params = load_params(a.params_file);
  } else if (a.surface == "hard") {
    params = hard_ground_params();
  } else if (a.surface == "grass") {
    params = grass_params();
  } else {
    throw InvalidInput("pass --params FILE or --surface hard|grass");
  }
  for (const auto& w : validate_params(params, cfg.sysid.bounds)) {
    log << "warning: " << w << '\n';
  }

  const TrajectoryKind kind = parse_trajectory_kind(a.experiment);
  const Trajectory clean =
      kind == TrajectoryKind::DropHeight
          ? simulate_drop(params, cfg.ball, a.h0, cfg.sim, a.samples)
          : simulate_roll(params, cfg.ball, a.v0, cfg.sim, a.samples);

  if (a.repeats == 0) {
    if (a.noise != 0.0) {
      throw InvalidInput("--noise applies to --repeats replicas");
    }
    write_trajectory_csv(a.out, clean);
    return kExitOk;
  }
  if (!(a.noise >= 0.0)) throw InvalidInput("--noise must be >= 0");
  Rng rng(a.noise > 0.0 ? resolve_seed(a.seed, cfg) : a.seed.value_or(0));
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Trajectory> replicas;
  for (std::size_t k = 0; k < a.repeats; ++k) {
    Trajectory rep = clean;
    for (double& v : rep.values) v += a.noise * normal(rng);
    write_trajectory_csv(with_suffix(a.out, "rep" + std::to_string(k + 1)), rep);
    replicas.push_back(std::move(rep));
  }
  write_trajectory_csv(with_suffix(a.out, "mean"),
                       average_trajectories(replicas).mean);
  return kExitOk;
}

// ---------------------------------------------------------------- identify

struct IdentifyArgs {
  std::vector<std::string> real_drop;
  std::vector<std::string> real_roll;
  std::string config;
  std::string out;
  std::optional<double> h0;
  double v0 = 0.0;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::optional<int> max_generations;
  bool serial = false;
  bool verbose = false;
};

void add_identify(CLI::App& app, IdentifyArgs& a) {
  auto* cmd = app.add_subcommand("identify", "Fit contact parameters to recordings with CMA-ES");
  cmd->add_option("--real-drop", a.real_drop,
                  "Drop recording CSV (repeat the flag to average repetitions)")
      ->required();
  cmd->add_option("--real-roll", a.real_roll,
                  "Roll recording CSV (repeat the flag to average repetitions)")
      ->required();
  cmd->add_option("--config", a.config, "Unified config (sysid, ball, sim sections)");
  cmd->add_option("--h0", a.h0, "Drop height [m]; defaults to the first drop sample");
  cmd->add_option("--v0", a.v0, "Initial roll speed [m/s]")->required();
  cmd->add_option("--seed", a.seed, "RNG seed");
  cmd->add_option("--tolerance", a.tolerance, "Stop when generation bests change less");
  cmd->add_option("--max-generations", a.max_generations, "Generation cap");
  cmd->add_flag("--serial", a.serial, "Evaluate candidates on one thread");
  cmd->add_flag("-v,--verbose", a.verbose, "Print per-generation losses to stderr");
  cmd->add_option("--out", a.out, "Result JSON")->required();
}

TrajectoryStats load_recordings(const std::vector<std::string>& paths,
                                TrajectoryKind kind) {
  std::vector<Trajectory> reps;
  for (const auto& p : paths) reps.push_back(read_trajectory_csv(p, kind));
  return average_trajectories(reps);
}

int run_identify(const IdentifyArgs& a, std::ostream& log) {
  UnifiedConfig cfg = config_or_defaults(a.config);
  cfg.sysid.seed = resolve_seed(a.seed, cfg);
  if (a.tolerance) cfg.sysid.tolerance = *a.tolerance;
  if (a.max_generations) cfg.sysid.max_generations = *a.max_generations;
  if (a.serial) cfg.sysid.parallel = false;
  cfg.sysid.validate();

  const TrajectoryStats drop = load_recordings(a.real_drop, TrajectoryKind::DropHeight);
  const TrajectoryStats roll =
      load_recordings(a.real_roll, TrajectoryKind::RollDisplacement);
  const double h0 = a.h0.value_or(drop.mean.values.front());

  const IdentificationResult result =
      identify(drop.mean, roll.mean, cfg.sysid, cfg.ball, cfg.sim, h0, a.v0);
  if (a.verbose) {
    for (std::size_t i = 0; i < result.generation_best.size(); ++i) {
      log << "generation " << i + 1 << " best " << result.generation_best[i]
          << " running " << result.running_best[i] << '\n';
    }
  }
  nlohmann::json j = result_to_json(result);
  j["seed"] = cfg.sysid.seed;
  j["h0"] = h0;
  j["v0"] = a.v0;
  j["repetitions"] = {{"drop", a.real_drop.size()}, {"roll", a.real_roll.size()}};
  j["real_drop_stddev"] = drop.stddev;
  j["real_roll_stddev"] = roll.stddev;
  j["warnings"] = validate_params(result.best_params, cfg.sysid.bounds);
  write_json_file(a.out, j);
  return kExitOk;
}

// ---------------------------------------------------------------- sample

struct SampleArgs {
  std::string which;
  std::string config;
  std::string out;
  std::size_t n = 1000;
  std::optional<std::uint64_t> seed;
  std::string pos = "2,0,0";
  std::string vel = "0,0,0";
  std::string nominal_pos = "1,0";
  std::optional<double> nominal_dir;
  std::string histogram;
};

void add_sample(CLI::App& app, SampleArgs& a) {
  auto* cmd = app.add_subcommand("sample", "Draw from one of the randomization samplers");
  cmd->add_option("--which", a.which, "dr | noise | placement | goal | curriculum | surface")
      ->required()
      ->check(CLI::IsMember({"dr", "noise", "placement", "goal", "curriculum", "surface"}));
  cmd->add_option("--config", a.config, "Unified config");
  cmd->add_option("-n", a.n, "Number of draws (environments for surface)");
  cmd->add_option("--seed", a.seed, "RNG seed");
  cmd->add_option("--pos", a.pos, "noise: object position x,y,z in robot frame");
  cmd->add_option("--vel", a.vel, "noise: object velocity x,y,z in robot frame");
  cmd->add_option("--nominal-pos", a.nominal_pos, "placement: nominal ball x,y");
  cmd->add_option("--nominal-dir", a.nominal_dir,
                  "placement: nominal direction [rad]; default atan2 of nominal-pos");
  cmd->add_option("--histogram", a.histogram, "curriculum: failure histogram CSV");
  cmd->add_option("--out", a.out, "Output CSV")->required();
}

int run_sample(const SampleArgs& a) {
  const UnifiedConfig cfg = config_or_defaults(a.config);
  Rng rng(resolve_seed(a.seed, cfg));
  if (a.n == 0) throw InvalidInput("-n must be positive");
  std::ofstream out = open_out(a.out);
  const auto f = [](double v) { return format_double(v); };

  if (a.which == "dr") {
    for (std::size_t i = 0; i < cfg.dr.terms.size(); ++i) {
      out << (i ? "," : "") << cfg.dr.terms[i].name;
    }
    out << '\n';
    for (std::size_t k = 0; k < a.n; ++k) {
      const auto draw = sample_dr(cfg.dr, rng);
      for (std::size_t i = 0; i < draw.size(); ++i) {
        out << (i ? "," : "") << f(draw[i].value);
      }
      out << '\n';
    }
  } else if (a.which == "noise") {
    if (!cfg.noise) {
      throw InvalidInput("noise sampling needs a \"noise\" config section with "
                         "c_min, c_vel and c_dist");
    }
    const auto p = parse_vec<3>(a.pos, "--pos");
    const auto v = parse_vec<3>(a.vel, "--vel");
    ObjectObservation obs;
    obs.position = {p[0], p[1], p[2]};
    obs.velocity = {v[0], v[1], v[2]};
    const double sigma = observation_noise_sigma(obs, *cfg.noise);
    out << "sigma,px,py,pz\n";
    for (std::size_t k = 0; k < a.n; ++k) {
      const auto noisy = apply_observation_noise(obs, *cfg.noise, rng);
      out << f(sigma) << ',' << f(noisy.position.x()) << ','
          << f(noisy.position.y()) << ',' << f(noisy.position.z()) << '\n';
    }
  } else if (a.which == "placement") {
    const auto np = parse_vec<2>(a.nominal_pos, "--nominal-pos");
    const Eigen::Vector2d nominal(np[0], np[1]);
    const double dir = a.nominal_dir.value_or(std::atan2(np[1], np[0]));
    out << "px,py,vx,vy\n";
    for (std::size_t k = 0; k < a.n; ++k) {
      const auto s = sample_ball_placement(nominal, dir, cfg.placement, rng);
      out << f(s.position.x()) << ',' << f(s.position.y()) << ','
          << f(s.velocity.x()) << ',' << f(s.velocity.y()) << '\n';
    }
  } else if (a.which == "goal") {
    out << "gx,gy\n";
    for (std::size_t k = 0; k < a.n; ++k) {
      const auto g = sample_goal(cfg.placement, rng);
      out << f(g.x()) << ',' << f(g.y()) << '\n';
    }
  } else if (a.which == "curriculum") {
    const auto& c = cfg.curriculum;
    FailureHistogram hist =
        a.histogram.empty()
            ? FailureHistogram(c.motions, c.bins, c.smoothing_alpha, c.decay)
            : [&] {
                std::ifstream in = open_in(a.histogram);
                return FailureHistogram::read_csv(in, c.smoothing_alpha, c.decay);
              }();
    out << "motion,phase\n";
    for (std::size_t k = 0; k < a.n; ++k) {
      const auto s = sample_start(hist, rng);
      out << s.motion << ',' << f(s.phase) << '\n';
    }
  } else {  // surface
    SurfaceAssignmentOptions opts;
    opts.bounds = cfg.sysid.bounds;
    const auto envs =
        assign_surface_params(a.n, hard_ground_params(), grass_params(), rng, opts);
    out << "env,surface";
    for (const auto& name : ContactParams::names()) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < envs.size(); ++i) {
      out << i << ',' << to_string(envs[i].surface);
      for (double v : envs[i].params.to_array()) out << ',' << f(v);
      out << '\n';
    }
  }
  close_checked(out, a.out);
  return kExitOk;
}

// ---------------------------------------------------------------- reward-eval

struct RewardArgs {
  std::string trace;
  std::string config;
  std::string stage = "1";
  std::string out;
  std::string labeled_leg = "right";
  std::string target_dir = "1,0,0";
};

void add_reward(CLI::App& app, RewardArgs& a) {
  auto* cmd = app.add_subcommand("reward-eval", "Score a state trace with the reward stack");
  cmd->add_option("--trace", a.trace, "State trace CSV")->required();
  cmd->add_option("--config", a.config, "Unified config (reward section)");
  cmd->add_option("--stage", a.stage, "1 or 2");
  cmd->add_option("--labeled-leg", a.labeled_leg, "Kicking leg label: left or right");
  cmd->add_option("--target-dir", a.target_dir, "Desired ball direction x,y,z");
  cmd->add_option("--out", a.out, "Per-step reward CSV")->required();
}

int run_reward(const RewardArgs& a) {
  const UnifiedConfig cfg = config_or_defaults(a.config);
  const Stage stage = parse_stage(a.stage);
  std::ifstream in = open_in(a.trace);
  const std::vector<StateFrame> frames = read_state_trace(in);

  KickEvent event;
  event.labeled_leg = parse_foot(a.labeled_leg);
  const auto d = parse_vec<3>(a.target_dir, "--target-dir");
  const Eigen::Vector3d dir(d[0], d[1], d[2]);
  if (!(dir.norm() > 0.0)) throw InvalidInput("--target-dir must be nonzero");
  event.target_direction = dir.normalized();
  event.min_speed_threshold = cfg.min_speed_threshold;

  RewardEpisode episode(event, cfg.reward, stage);
  std::vector<StepReward> steps;
  steps.reserve(frames.size());
  for (const StateFrame& f : frames) steps.push_back(episode.step(f));

  std::ofstream out = open_out(a.out);
  write_reward_series(out, steps, frames, stage, cfg.reward);
  close_checked(out, a.out);
  return kExitOk;
}

// ---------------------------------------------------------------- curriculum-replay

struct ReplayArgs {
  std::string log;
  std::string config;
  std::string histogram;
  std::string out;
  std::string out_histogram;
  std::optional<std::size_t> motions;
  std::optional<std::size_t> bins;
};

void add_replay(CLI::App& app, ReplayArgs& a) {
  auto* cmd = app.add_subcommand(
      "curriculum-replay", "Replay a failure log and print the start distribution");
  cmd->add_option("--log", a.log, "Failure log CSV: motion,phase_bin or motion,phase")
      ->required();
  cmd->add_option("--config", a.config, "Unified config (curriculum section)");
  cmd->add_option("--histogram", a.histogram, "Initial histogram CSV");
  cmd->add_option("--motions", a.motions, "Number of motions M");
  cmd->add_option("--bins", a.bins, "Number of phase bins B");
  cmd->add_option("--out", a.out, "Distribution CSV (default: stdout)");
  cmd->add_option("--out-histogram", a.out_histogram, "Write the final histogram CSV");
}

int run_replay(const ReplayArgs& a, std::ostream& stdout_stream) {
  const UnifiedConfig cfg = config_or_defaults(a.config);
  CurriculumSettings c = cfg.curriculum;
  if (a.motions) c.motions = *a.motions;
  if (a.bins) c.bins = *a.bins;
  FailureHistogram hist =
      a.histogram.empty()
          ? FailureHistogram(c.motions, c.bins, c.smoothing_alpha, c.decay)
          : [&] {
              std::ifstream in = open_in(a.histogram);
              return FailureHistogram::read_csv(in, c.smoothing_alpha, c.decay);
            }();

  std::ifstream in = open_in(a.log);
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("empty failure log");
  const std::string header(trim(line));
  bool by_phase = false;
  if (header == "motion,phase") {
    by_phase = true;
  } else if (header != "motion,phase_bin") {
    throw InvalidInput("failure log header must be motion,phase_bin or motion,phase");
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(trim(line), ',');
    if (cells.size() != 2) {
      throw InvalidInput("failure log line " + std::to_string(line_no) +
                         ": expected 2 fields");
    }
    const long long m = parse_int(cells[0], "motion");
    if (m < 0) throw InvalidInput("negative motion index");
    std::size_t bin = 0;
    if (by_phase) {
      bin = hist.bin_of(parse_double(cells[1], "phase"));
    } else {
      const long long b = parse_int(cells[1], "phase_bin");
      if (b < 0) throw InvalidInput("negative phase bin");
      bin = static_cast<std::size_t>(b);
    }
    hist.record_failure(static_cast<std::size_t>(m), bin);
  }

  const auto p = hist.probabilities();
  std::ostringstream table;
  table << "motion,bin,count,probability\n";
  for (std::size_t m = 0; m < hist.motions(); ++m) {
    for (std::size_t b = 0; b < hist.bins(); ++b) {
      table << m << ',' << b << ',' << format_double(hist.count(m, b)) << ','
            << format_double(p[m * hist.bins() + b]) << '\n';
    }
  }
  if (a.out.empty()) {
    stdout_stream << table.str();
  } else {
    std::ofstream out = open_out(a.out);
    out << table.str();
    close_checked(out, a.out);
  }
  if (!a.out_histogram.empty()) {
    std::ofstream out = open_out(a.out_histogram);
    hist.write_csv(out);
    close_checked(out, a.out_histogram);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Ball contact identification and training-randomization toolkit"};
  app.name("ballid");
  app.require_subcommand(1);
  SimulateArgs sim;
  IdentifyArgs ident;
  SampleArgs sample;
  RewardArgs reward;
  ReplayArgs replay;
  add_simulate(app, sim);
  add_identify(app, ident);
  add_sample(app, sample);
  add_reward(app, reward);
  add_replay(app, replay);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (app.got_subcommand("simulate")) return run_simulate(sim, err);
    if (app.got_subcommand("identify")) return run_identify(ident, err);
    if (app.got_subcommand("sample")) return run_sample(sample);
    if (app.got_subcommand("reward-eval")) return run_reward(reward);
    if (app.got_subcommand("curriculum-replay")) return run_replay(replay, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitInvalidInput;
}

}  // namespace ballid
