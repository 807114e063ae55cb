// helly: command-line workbench for separated d-intervals.
//
// Exit codes: 0 every verdict passes, 1 theorem violation or property
// failure (witness in the report), 2 usage, input or guard error.

#include "helly/experiment.hpp"
#include "helly/instance_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace helly;
using nlohmann::json;

namespace {

struct IoOptions {
  std::string input = "-";
  std::string out = "-";
  std::string format = "json";
  bool lenient = false;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Instance load(const IoOptions& io) {
  auto parsed = parse_instance_text(read_all(io.input), ParseOptions{io.lenient});
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
  return std::move(parsed.instance);
}

void add_io(CLI::App* sub, IoOptions& io, bool with_input = true) {
  if (with_input) sub->add_option("input", io.input, "Instance file (JSON, - for stdin)")->required();
  sub->add_option("--out", io.out, "Report destination (- for stdout)");
  sub->add_option("--format", io.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_flag("--lenient", io.lenient, "Warn on unknown fields instead of failing");
}

std::vector<Family> require_families(const Instance& inst) {
  if (inst.families.empty()) throw InputError("$.families: this command needs colour classes");
  return inst.colour_families();
}

Report base_report(const std::string& command, const IoOptions& io, const Instance* inst) {
  Report rep;
  rep.command = command;
  rep.provenance["input"] = io.input;
  if (inst) {
    rep.parameters["d"] = inst->ground->dims();
    rep.parameters["n"] = inst->sets.size();
    if (inst->spec) {
      rep.provenance["seed"] = inst->spec->seed;
      rep.provenance["stream"] = inst->spec->stream;
      rep.provenance["spec"] = spec_to_json(*inst->spec);
    }
  }
  return rep;
}

/// Flattens scalar statistics and verdicts into the single CSV row.
void summary_row(Report& rep) {
  if (!rep.rows.empty()) return;
  CsvRow row{{"command", rep.command}, {"pass", rep.pass ? "true" : "false"}};
  for (const auto* section : {&rep.parameters, &rep.verdicts, &rep.statistics}) {
    for (const auto& [k, v] : section->items()) {
      if (v.is_string()) row.emplace_back(k, v.get<std::string>());
      else if (v.is_primitive()) row.emplace_back(k, v.dump());
    }
  }
  rep.rows.push_back(std::move(row));
}

Point parse_point(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos) throw InputError("point \"" + text + "\" must be coord:level");
  try {
    return {parse_rat(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::invalid_argument&) {
    throw InputError("point \"" + text + "\" must be coord:level");
  }
}

int cmd_nerve(const IoOptions& io, Report& rep) {
  const Instance inst = load(io);
  rep = base_report("nerve", io, &inst);
  const auto k = nerve(inst.sets, Guards::from_env());
  rep.witnesses["complex"] = complex_json(k);
  rep.statistics = {{"faces", k.faces().size()}, {"dim", k.dim()}, {"maximal_faces", k.maximal_faces().size()}};
  return 0;
}

int cmd_collapse(const IoOptions& io, Report& rep) {
  const Instance inst = load(io);
  rep = base_report("collapse", io, &inst);
  try {
    const auto sweep = sweep_collapse(inst.sets, Guards::from_env());
    const auto replay = verify_collapse_sequence(sweep.initial, sweep.sequence);
    rep.witnesses["nerve"] = complex_json(sweep.initial);
    rep.witnesses["sequence"] = collapse_json(sweep.initial, sweep.sequence);
    json info = json::array();
    for (const auto& s : sweep.info) {
      json fv = json::array();
      for (const auto& c : s.f.comps) fv.push_back(c ? json(to_string(*c)) : json("-inf"));
      info.push_back({{"f", fv}, {"support_size", s.support_size}, {"truncation_level", s.truncation_level}});
    }
    rep.witnesses["steps"] = std::move(info);
    rep.statistics = {{"steps", sweep.sequence.steps.size()}, {"bound", sweep.sequence.bound}};
    rep.verdicts["replay_verified"] = !replay;
    if (replay) rep.verdicts["replay_error"] = *replay;
    rep.pass = !replay;
  } catch (const TheoremViolation& e) {
    rep.verdicts["theorem_violation"] = e.what();
    rep.pass = false;
  }
  return rep.pass ? 0 : 1;
}

int cmd_oracle(const IoOptions& io, int bound, Report& rep) {
  const Instance inst = load(io);
  rep = base_report("dcollapse-oracle", io, &inst);
  const int b = bound > 0 ? bound : 2 * inst.ground->dims() - 1;
  const auto k = nerve(inst.sets, Guards::from_env());
  const auto res = is_d_collapsible(k, b, Guards::from_env());
  rep.parameters["bound"] = b;
  rep.verdicts["collapsible"] = res.collapsible;
  rep.statistics = {{"faces", k.faces().size()}, {"states_explored", res.states_explored}};
  if (res.witness) {
    rep.witnesses["sequence"] = collapse_json(k, *res.witness);
    rep.verdicts["witness_replays"] = !verify_collapse_sequence(k, *res.witness);
  }
  rep.pass = res.collapsible;
  return rep.pass ? 0 : 1;
}

int cmd_radon(const IoOptions& io, const std::vector<std::string>& subset, Report& rep) {
  const Instance inst = load(io);
  rep = base_report("radon", io, &inst);
  const int d = inst.ground->dims();
  if (!subset.empty()) {
    std::vector<Point> a;
    for (const auto& s : subset) a.push_back(parse_point(s));
    const auto part = radon_partition(inst.ground, a);
    rep.parameters["subset_size"] = a.size();
    rep.verdicts["partition_found"] = part.has_value();
    if (part) {
      rep.witnesses["partition"] = radon_json(*part);
      rep.verdicts["partition_verified"] = verify_radon(inst.ground, *part);
    }
    // Only subsets of size >= 2d+1 are guaranteed a partition.
    rep.pass = part ? verify_radon(inst.ground, *part) : a.size() < static_cast<std::size_t>(2 * d + 1);
    return rep.pass ? 0 : 1;
  }
  const auto number = radon_number_bruteforce(inst.ground, 2 * d + 2, Guards::from_env());
  rep.statistics["radon_number"] = number ? json(*number) : json("> " + std::to_string(2 * d + 2));
  rep.statistics["bound"] = 2 * d + 1;
  rep.pass = number && *number <= 2 * d + 1;
  rep.verdicts["within_bound"] = rep.pass;
  return rep.pass ? 0 : 1;
}

int cmd_helly(const IoOptions& io, int m, int k, Report& rep) {
  const Instance inst = load(io);
  rep = base_report("helly", io, &inst);
  const auto r = helly_check(inst.sets, m, k);
  rep.parameters["m"] = m;
  rep.parameters["k"] = k;
  rep.verdicts = {{"holds", r.verdict}, {"hypothesis_held", r.hypothesis_held}};
  rep.witnesses = helly_json(r);
  rep.pass = r.verdict;
  return rep.pass ? 0 : 1;
}

int cmd_colorful(const IoOptions& io, int k, bool rotate, Report& rep) {
  const Instance inst = load(io);
  rep = base_report("colorful-helly", io, &inst);
  rep.parameters["k"] = k;
  const auto fams = require_families(inst);
  auto one = [&](std::optional<std::size_t> designated) {
    json out;
    try {
      const auto r = colorful_helly_points(fams, k, designated);
      out = {{"designated", r.designated},          {"precondition_held", r.precondition_held},
             {"claim_holds", r.claim_holds},        {"points", points_json(r.points)},
             {"minimizing_tuple", r.minimizing_tuple}, {"violating_tuple", r.violating_tuple}};
      out["pass"] = !r.precondition_held || r.claim_holds;
    } catch (const TheoremViolation& e) {
      out = {{"theorem_violation", e.what()}, {"pass", false}};
    }
    return out;
  };
  const json main_run = one(std::nullopt);
  rep.pass = main_run["pass"].get<bool>();
  rep.verdicts = {{"holds", rep.pass}, {"precondition_held", main_run.value("precondition_held", true)}};
  rep.witnesses["result"] = main_run;
  if (rotate) {
    // Each family as the fixed designation; informational only.
    json runs = json::array();
    for (std::size_t i = 0; i < fams.size(); ++i) runs.push_back(one(i));
    rep.witnesses["rotations"] = std::move(runs);
  }
  return rep.pass ? 0 : 1;
}

int cmd_frac(const IoOptions& io, int k, Report& rep) {
  const Instance inst = load(io);
  rep = base_report("frac-helly", io, &inst);
  rep.parameters["k"] = k;
  const auto r = frac_helly_stats(inst.sets, k);
  rep.witnesses = helly_json(r);
  rep.verdicts = {{"holds", r.verdict}, {"hypothesis_held", r.hypothesis_held}};
  for (const auto& [key, v] : r.params) rep.statistics[key] = v;
  if (r.alpha) put_rat(rep.statistics, "alpha", *r.alpha);
  if (r.beta_hat) put_rat(rep.statistics, "beta_hat", *r.beta_hat);
  if (r.beta_required) put_rat(rep.statistics, "beta_required", *r.beta_required);
  rep.pass = r.verdict;
  return rep.pass ? 0 : 1;
}

int cmd_cfh(const IoOptions& io, Report& rep) {
  const Instance inst = load(io);
  rep = base_report("cfh", io, &inst);
  const auto r = cfh_stats(require_families(inst));
  rep.witnesses = helly_json(r);
  rep.verdicts = {{"holds", r.verdict}};
  for (const auto& [key, v] : r.params) rep.statistics[key] = v;
  if (r.alpha) put_rat(rep.statistics, "alpha", *r.alpha);
  if (r.beta_hat) put_rat(rep.statistics, "beta_hat", *r.beta_hat);
  rep.statistics["beta_bound_decimal"] = r.extras.at("beta_bound_decimal");
  rep.pass = r.verdict;
  return rep.pass ? 0 : 1;
}

int cmd_pierce(const IoOptions& io, Report& rep) {
  const Instance inst = load(io);
  rep = base_report("pierce", io, &inst);
  const auto guards = Guards::from_env();
  const auto r = pierce(inst.sets, guards);
  const auto tk = tardos_kaiser_check(inst.sets, guards);
  rep.witnesses = piercing_json(r);
  rep.statistics = {{"tau", r.tau.tau}, {"nu", r.nu.nu}, {"tardos_kaiser_factor", tk.factor}};
  put_rat(rep.statistics, "nu_star", r.fractional.nu_star);
  put_rat(rep.statistics, "tau_star", r.fractional.tau_star);
  rep.verdicts = {{"certificate_ok", r.fractional.lp.certified},
                  {"sandwich", r.sandwich_holds},
                  {"tardos_kaiser", tk.holds}};
  rep.pass = r.fractional.lp.certified && r.sandwich_holds && tk.holds;
  return rep.pass ? 0 : 1;
}

int cmd_pq(const IoOptions& io, int p, int q, const std::string& kind_text, Report& rep) {
  const Instance inst = load(io);
  rep = base_report("pq-check", io, &inst);
  const PqKind kind = parse_pq_kind(kind_text);
  rep.parameters["p"] = p;
  rep.parameters["q"] = q;
  rep.parameters["kind"] = to_string(kind);
  const auto fams = kind == PqKind::plain ? std::vector<Family>{inst.sets} : require_families(inst);
  const auto r = pq_check(fams, p, q, kind);
  rep.verdicts["holds"] = r.holds;
  rep.witnesses["counterexample"] = r.counterexample;
  // Empirical transversal numbers, reported only.
  json taus = json::array();
  for (const auto& f : fams) {
    const bool pierceable = !f.empty() && std::none_of(f.begin(), f.end(), [](const TraceSet& s) { return s.empty(); });
    taus.push_back(pierceable ? json(tau_exact(f, Guards::from_env()).tau) : json(nullptr));
  }
  rep.statistics["tau"] = std::move(taus);
  rep.pass = r.holds;
  return rep.pass ? 0 : 1;
}

struct GenOptions {
  std::string spec_path;
  GenSpec spec;
  std::string points_per_level;
  std::string predicate = "none";
  std::size_t cap = 100000;
  std::string lower_bound;
};

int cmd_gen(const IoOptions& io, GenOptions g) {
  GenSpec spec = g.spec;
  if (!g.spec_path.empty()) spec = spec_from_json(json::parse(read_all(g.spec_path)), "$");
  if (!g.points_per_level.empty()) {
    spec.points_per_level.clear();
    std::stringstream ss(g.points_per_level);
    for (std::string item; std::getline(ss, item, ',');) spec.points_per_level.push_back(std::stoi(item));
  }
  spec.validate();
  Instance inst;
  if (!g.lower_bound.empty()) {
    inst = gen_instance(spec);
    if (g.lower_bound == "helly") {
      inst.sets = gen_helly_lower_bound(inst.ground);
    } else {
      inst.sets.clear();
      for (const auto& p : gen_radon_lower_bound(inst.ground)) {
        inst.sets.push_back(hull(inst.ground, std::span<const Point>(&p, 1)));
      }
    }
    inst.names.clear();
    for (std::size_t j = 0; j < inst.sets.size(); ++j) inst.names.push_back("C" + std::to_string(j + 1));
    inst.families.clear();
  } else {
    const auto pred = parse_predicate(g.predicate);
    const auto found = gen_conditioned(spec, pred, g.cap);
    if (!found.instance) {
      Report rep = base_report("gen", io, nullptr);
      rep.parameters = {{"spec", spec_to_json(spec)}, {"predicate", pred.describe()}, {"cap", g.cap}};
      rep.verdicts["found"] = false;
      rep.statistics["draws"] = found.draws;
      rep.pass = false;
      std::cerr << rep.to_json().dump(2) << '\n';
      return 1;
    }
    inst = *found.instance;
  }
  const std::string body = serialize_instance(inst).dump(2) + "\n";
  if (io.out == "-") {
    std::cout << body;
  } else {
    std::ofstream out(io.out, std::ios::binary);
    if (!(out << body)) throw std::runtime_error("write to " + io.out + " failed");
  }
  return 0;
}

int cmd_experiment(SuiteConfig config, const std::string& csv_path, Report& rep) {
  config.guards = Guards::from_env();
  rep = run_suite(config);
  if (!csv_path.empty()) emit_report(rep, ReportFormat::csv, csv_path);
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for Helly-type theorems on separated d-intervals"};
  app.require_subcommand(1);

  IoOptions io;
  int m = 0, k = 1, bound = 0, p = 2, q = 2;
  bool rotate = false;
  std::string kind = "plain";
  std::vector<std::string> subset;
  GenOptions gen;
  SuiteConfig suite;
  std::string csv_path;

  auto* s_nerve = app.add_subcommand("nerve", "Nerve of the family");
  add_io(s_nerve, io);
  auto* s_collapse = app.add_subcommand("collapse", "Sweep collapse with replay verification");
  add_io(s_collapse, io);
  auto* s_oracle = app.add_subcommand("dcollapse-oracle", "Exhaustive d-collapsibility of the nerve");
  add_io(s_oracle, io);
  s_oracle->add_option("--bound", bound, "Collapse bound (default 2d-1)");
  auto* s_radon = app.add_subcommand("radon", "Radon number of P, or a partition of --subset");
  add_io(s_radon, io);
  s_radon->add_option("--subset", subset, "Points as coord:level")->delimiter(',');
  auto* s_helly = app.add_subcommand("helly", "Helly check on every m-subfamily");
  add_io(s_helly, io);
  s_helly->add_option("--m", m, "Subfamily size")->required()->check(CLI::PositiveNumber);
  s_helly->add_option("--k", k, "Levels the intersections must meet")->check(CLI::PositiveNumber);
  auto* s_colorful = app.add_subcommand("colorful-helly", "Colorful k-intersecting Helly points");
  add_io(s_colorful, io);
  s_colorful->add_option("--k", k)->check(CLI::PositiveNumber);
  s_colorful->add_flag("--rotate", rotate, "Also report each family as a fixed designation");
  auto* s_frac = app.add_subcommand("frac-helly", "Fractional k-intersecting Helly statistics");
  add_io(s_frac, io);
  s_frac->add_option("--k", k)->check(CLI::PositiveNumber);
  auto* s_cfh = app.add_subcommand("cfh", "Colorful fractional Helly statistics over 2d families");
  add_io(s_cfh, io);
  auto* s_pierce = app.add_subcommand("pierce", "tau, nu and the certified LP relaxation");
  add_io(s_pierce, io);
  auto* s_pq = app.add_subcommand("pq-check", "(p,q)-property check");
  add_io(s_pq, io);
  s_pq->add_option("--p", p)->required()->check(CLI::PositiveNumber);
  s_pq->add_option("--q", q)->required()->check(CLI::PositiveNumber);
  s_pq->add_option("--kind", kind)->check(CLI::IsMember({"plain", "colorful-first", "colorful-second"}));

  auto* s_gen = app.add_subcommand("gen", "Generate an instance");
  add_io(s_gen, io, false);
  s_gen->add_option("--spec", gen.spec_path, "GenSpec JSON file");
  s_gen->add_option("--d", gen.spec.d)->check(CLI::PositiveNumber);
  s_gen->add_option("--points-per-level", gen.points_per_level, "Comma-separated counts, or one count for all levels");
  s_gen->add_option("--n", gen.spec.n);
  s_gen->add_option("--lo", gen.spec.coord_lo);
  s_gen->add_option("--hi", gen.spec.coord_hi);
  s_gen->add_option("--width", gen.spec.max_width);
  s_gen->add_option("--presence", gen.spec.presence);
  s_gen->add_option("--seed", gen.spec.seed);
  s_gen->add_option("--stream", gen.spec.stream);
  s_gen->add_option("--families", gen.spec.families, "Deal sets into this many colour classes");
  s_gen->add_option("--predicate", gen.predicate,
                    "none | colorful-helly[:k] | pq:p:q[:kind] | k-intersect-rich:alpha[:k]");
  s_gen->add_option("--cap", gen.cap, "Draw cap for --predicate");
  s_gen->add_option("--lower-bound", gen.lower_bound, "Emit the helly or radon lower-bound construction over P")
      ->check(CLI::IsMember({"helly", "radon"}));

  auto* s_exp = app.add_subcommand("experiment", "Seeded corpus run of an acceptance suite");
  add_io(s_exp, io, false);
  s_exp->add_option("--suite", suite.suite)->required()->check(CLI::IsMember(suite_names()));
  s_exp->add_option("--trials", suite.trials, "Corpus size (default per suite)");
  s_exp->add_option("--seed", suite.seed);
  s_exp->add_option("--d", suite.dims, "Dimensions to cycle through (repeatable)");
  s_exp->add_option("--csv", csv_path, "Also write the per-instance CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Report rep;
  int code = 0;
  try {
    if (s_nerve->parsed()) code = cmd_nerve(io, rep);
    else if (s_collapse->parsed()) code = cmd_collapse(io, rep);
    else if (s_oracle->parsed()) code = cmd_oracle(io, bound, rep);
    else if (s_radon->parsed()) code = cmd_radon(io, subset, rep);
    else if (s_helly->parsed()) code = cmd_helly(io, m, k, rep);
    else if (s_colorful->parsed()) code = cmd_colorful(io, k, rotate, rep);
    else if (s_frac->parsed()) code = cmd_frac(io, k, rep);
    else if (s_cfh->parsed()) code = cmd_cfh(io, rep);
    else if (s_pierce->parsed()) code = cmd_pierce(io, rep);
    else if (s_pq->parsed()) code = cmd_pq(io, p, q, kind, rep);
    else if (s_gen->parsed()) return cmd_gen(io, gen);
    else if (s_exp->parsed()) code = cmd_experiment(suite, csv_path, rep);
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return 2;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (rep.command != "experiment") {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    rep.timing = {{"seconds", elapsed.count()}};
  }
  summary_row(rep);
  try {
    emit_report(rep, io.format == "csv" ? ReportFormat::csv : ReportFormat::json, io.out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return code;
}
