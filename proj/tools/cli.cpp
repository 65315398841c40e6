#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "nearcube/autocorr.hpp"
#include "nearcube/completion.hpp"
#include "nearcube/constructions.hpp"
#include "nearcube/error.hpp"
#include "nearcube/fejer.hpp"
#include "nearcube/json_io.hpp"
#include "nearcube/parallel.hpp"
#include "nearcube/planar.hpp"
#include "nearcube/spectral.hpp"
#include "nearcube/svg.hpp"
#include "nearcube/tiling.hpp"

namespace nearcube::cli {

namespace {

/// Error raised by a command with an explicit report code.
class CommandError : public Error {
 public:
  CommandError(std::string code, std::string what) : Error(std::move(what)), code_(std::move(code)) {}
  [[nodiscard]] const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct Context {
  std::string command;
  json inputs = json::array();
  json parameters = json::object();
  json result = json::object();
  bool holds = true;
};

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json load_input(Context& ctx, const std::string& role, const std::string& path) {
  const std::string bytes = read_bytes(path);
  ctx.inputs.push_back({{"role", role}, {"path", path}, {"fnv1a64", fnv1a_hex(bytes)}, {"bytes", bytes.size()}});
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

PolyBox load_set(Context& ctx, const std::string& path, const std::string& role = "set") {
  return polybox_from_json(load_input(ctx, role, path));
}

void write_json(const std::string& path, const json& j) { write_text_file(path, j.dump(2) + "\n"); }

Rational parse_rational_option(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const InvalidInput& e) {
    throw InvalidInput("--" + name + ": " + e.what());
  }
}

json double_json(double x) { return x; }

void require_dim(const PolyBox& set, std::size_t dim, const std::string& what) {
  if (set.dim() != dim) {
    throw DimensionMismatch(what + " needs a " + std::to_string(dim) + "D set, got dimension " +
                            std::to_string(set.dim()));
  }
}

struct Options {
  std::string set;
  std::string a;
  std::string b;
  std::string op = "union";
  std::string system;
  std::string spectrum;
  std::string patch;
  std::string window;
  std::string out;
  std::string svg;
  std::string manifest;
  std::string system_out;
  std::string patch_out;
  std::string xi;
  std::string delta = "1/10";
  std::string epsilon = "1/10";
  std::string level;
  std::string t = "1/4";
  int axis = 2;
  int radius = 1;
  int index = 0;
  int dim = 4;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::size_t max_steps = 10000;
  std::int64_t truncation = 10000;
  double tol = 1e-6;
  double lo = -10.0;
  double hi = 10.0;
  bool cells = false;
  bool no_timing = false;
};

// measure -------------------------------------------------------------------

void cmd_measure(Context& ctx, const Options& o) {
  const PolyBox set = load_set(ctx, o.set);
  const auto bbox = bounding_box(set);
  ctx.result = {{"dim", set.dim()},
                {"boxes", set.size()},
                {"measure", rational_to_json(measure(set))},
                {"bounding_box", bbox ? box_to_json(*bbox) : json(nullptr)}};
}

void cmd_boolean(Context& ctx, const Options& o) {
  static const std::map<std::string, std::function<PolyBox(const PolyBox&, const PolyBox&)>> ops = {
      {"union", [](const PolyBox& p, const PolyBox& q) { return unite(p, q); }},
      {"intersect", intersect},
      {"difference", difference},
      {"symdiff", symmetric_difference},
  };
  const auto it = ops.find(o.op);
  if (it == ops.end()) throw InvalidInput("--op must be one of union, intersect, difference, symdiff");
  const PolyBox p = load_set(ctx, o.a, "a");
  const PolyBox q = load_set(ctx, o.b, "b");
  if (p.dim() != q.dim()) throw DimensionMismatch("operands have different dimensions");
  const PolyBox r = it->second(p, q);
  ctx.parameters["op"] = o.op;
  ctx.result = {{"set", polybox_to_json(r)}, {"measure", rational_to_json(measure(r))}};
  if (!o.out.empty()) write_json(o.out, polybox_to_json(r));
}

// tiling ----------------------------------------------------------------------

MultiplicityReport run_multiplicity(Context& ctx, const Options& o) {
  const PolyBox set = load_set(ctx, o.set);
  const TranslationSystem system = system_from_json(load_input(ctx, "system", o.system));
  if (system.dim() != set.dim()) throw DimensionMismatch("set and system have different dimensions");
  std::optional<Box> window;
  if (!o.window.empty()) {
    window = parse_box(o.window);
    ctx.parameters["window"] = o.window;
  } else if (system.lattice()) {
    window = system.lattice()->fundamental_window();
    ctx.parameters["window"] = window->str();
  } else {
    throw InvalidInput("--window is required for a system without a lattice");
  }
  auto report = multiplicity_map(set, system, *window);
  ctx.result = multiplicity_to_json(report, o.cells);
  ctx.result["window_covers_fundamental_domain"] =
      system.lattice() ? json(window->contains(system.lattice()->fundamental_window())) : json(nullptr);
  return report;
}

void cmd_tiling_check(Context& ctx, const Options& o) {
  ctx.holds = run_multiplicity(ctx, o).verdict == Verdict::tiling;
}

void cmd_packing_check(Context& ctx, const Options& o) {
  ctx.holds = run_multiplicity(ctx, o).verdict != Verdict::not_packing;
}

void cmd_complete_1d(Context& ctx, const Options& o) {
  const PolyBox set = load_set(ctx, o.set);
  require_dim(set, 1, "complete-1d");
  if (o.window.empty()) throw InvalidInput("--window is required");
  ctx.parameters["window"] = o.window;
  ctx.parameters["max_steps"] = o.max_steps;
  const auto r = complete_tiling_1d(set, parse_box(o.window), o.max_steps);
  ctx.holds = r.ok();
  ctx.result = {{"translations", vec_to_json(r.translations)},
                {"uncoverable", r.uncoverable ? rational_to_json(*r.uncoverable) : json(nullptr)},
                {"exhausted", r.exhausted}};
  if (r.ok()) ctx.result["system"] = system_to_json(r.system());
  if (r.ok() && !o.out.empty()) write_json(o.out, system_to_json(r.system()));
}

// autocorrelation ---------------------------------------------------------------

json zeros_json(const std::vector<ZeroComponent>& zeros) {
  json out = json::array();
  for (const auto& z : zeros) out.push_back(zero_component_to_json(z));
  return out;
}

void cmd_autocorr(Context& ctx, const Options& o) {
  const PolyBox set = load_set(ctx, o.set);
  require_dim(set, 1, "autocorr");
  const auto g = autocorrelation(set);
  ctx.result = {{"function", piecewise_to_json(g)},
                {"integral", rational_to_json(g.integral())},
                {"value_at_zero", rational_to_json(g(Rational(0)))}};
  if (!o.out.empty()) write_json(o.out, piecewise_to_json(g));
  if (!o.svg.empty()) {
    const std::string svg = render_graph(g);
    write_text_file(o.svg, svg);
    ctx.result["svg_fnv1a64"] = fnv1a_hex(svg);
  }
}

void cmd_overlap_lemma(Context& ctx, const Options& o) {
  const PolyBox set = load_set(ctx, o.set);
  require_dim(set, 1, "overlap-lemma");
  const auto r = check_overlap_lemma(set);
  ctx.result = {{"measure", rational_to_json(r.measure)},
                {"hull_length", rational_to_json(r.hull_length)},
                {"hypotheses_hold", r.hypotheses_hold},
                {"zeros_in_unit_range", zeros_json(r.zeros)},
                {"overlaps_everywhere", r.overlaps_everywhere}};
  if (!r.hypotheses_hold) {
    throw CommandError("hypothesis-violation", "the overlap property needs |E| = 1 and hull length < 3/2; got |E| = " +
                                                   r.measure.str() + ", hull length " + r.hull_length.str());
  }
  ctx.holds = r.overlaps_everywhere;
}

// spectral ----------------------------------------------------------------------

void cmd_ft_zero(Context& ctx, const Options& o) {
  const PolyBox set = load_set(ctx, o.set);
  require_dim(set, 1, "ft-zero");
  const Rational xi = parse_rational_option("xi", o.xi);
  ctx.parameters["xi"] = rational_to_json(xi);
  const auto cert = ft_zero_certificate(set, xi);
  json terms = json::array();
  for (const auto& [exponent, coeff] : cert.numerator.terms()) {
    terms.push_back({{"exponent", rational_to_json(exponent)}, {"coefficient", coeff.get_str()}});
  }
  const auto approx = ft_indicator(set, xi.to_double());
  ctx.holds = cert.vanishes;
  ctx.result = {{"vanishes", cert.vanishes},
                {"order", cert.order},
                {"root_of_unity_terms", std::move(terms)},
                {"approximate_modulus", double_json(std::abs(approx))}};
}

json sampling_parameters(const Options& o) {
  return {{"samples", o.samples}, {"seed", o.seed},       {"truncation", o.truncation},
          {"tol", o.tol},         {"range", {o.lo, o.hi}}};
}

void cmd_spectrum_check(Context& ctx, const Options& o) {
  const PolyBox set = load_set(ctx, o.set);
  require_dim(set, 1, "spectrum-check");
  const SpectrumCandidate spectrum = spectrum_from_json(load_input(ctx, "spectrum", o.spectrum));
  ctx.parameters = sampling_parameters(o);

  const auto orth = orthogonality_check(set, spectrum);
  json residues = json::array();
  for (const auto& r : orth.residues) {
    residues.push_back({{"class", rational_to_json(r.class_offset)},
                        {"residue", r.residue},
                        {"frequency", rational_to_json(r.frequency)},
                        {"order", r.order},
                        {"vanishes", r.vanishes}});
  }
  const auto comp =
      completeness_check(set, spectrum, uniform_samples(o.samples, o.lo, o.hi, o.seed), o.truncation, o.tol);
  ctx.holds = orth.orthogonal && comp.passed;
  ctx.result = {
      {"density", rational_to_json(spectrum.density())},
      {"measure", rational_to_json(measure(set))},
      {"orthogonality",
       {{"orthogonal", orth.orthogonal},
        {"residue_period", orth.residue_period},
        {"certificates", std::move(residues)},
        {"witness", orth.witness ? rational_to_json(*orth.witness) : json(nullptr)}}},
      {"completeness",
       {{"passed", comp.passed},
        {"target", comp.target},
        {"tolerance", comp.tolerance},
        {"truncation", comp.truncation},
        {"worst_deviation", comp.worst_deviation},
        {"worst_certified_remainder", comp.worst_remainder},
        {"worst_crude_tail_bound", comp.worst_crude_tail}}},
  };
}

void cmd_fejer(Context& ctx, const Options& o) {
  const Rational delta = parse_rational_option("delta", o.delta);
  ctx.parameters = sampling_parameters(o);
  ctx.parameters["delta"] = rational_to_json(delta);
  constexpr double identity_tol = 1e-12;
  const double d = delta.to_double();

  const double at_zero = fejer_ft(delta, 0.0);
  const double expected = (Rational(1) / (Rational(1) + delta)).to_double();
  const bool zero_ok = std::abs(at_zero - expected) <= identity_tol;
  double worst_zero = 0.0;
  for (int k = 1; k <= 10; ++k) {
    for (int sign : {-1, 1}) worst_zero = std::max(worst_zero, std::abs(fejer_ft(delta, sign * k * (1.0 + d))));
  }
  const bool zeros_ok = worst_zero <= identity_tol;
  const auto part = fejer_partition_check(delta, o.truncation, uniform_samples(o.samples, o.lo, o.hi, o.seed), o.tol);

  ctx.holds = zero_ok && zeros_ok && part.passed;
  ctx.result = {
      {"transform_at_zero", {{"value", at_zero}, {"expected", expected}, {"ok", zero_ok}}},
      {"transform_zeros", {{"k_range", "±1..±10"}, {"worst_modulus", worst_zero}, {"ok", zeros_ok}}},
      {"partition_of_unity",
       {{"passed", part.passed},
        {"tolerance", part.tolerance},
        {"truncation", part.truncation},
        {"worst_deviation", part.worst_deviation},
        {"worst_certified_remainder", part.worst_remainder},
        {"worst_crude_tail_bound", part.worst_crude_tail}}},
      {"identity_tolerance", identity_tol},
  };
}

// constructions -----------------------------------------------------------------

void emit_set(Context& ctx, const Options& o, const PolyBox& set) {
  ctx.result["set"] = polybox_to_json(set);
  ctx.result["measure"] = rational_to_json(measure(set));
  if (!o.out.empty()) write_json(o.out, polybox_to_json(set));
}

void emit_system(Context& ctx, const Options& o, const TranslationSystem& system) {
  ctx.result["system"] = system_to_json(system);
  if (!o.system_out.empty()) write_json(o.system_out, system_to_json(system));
}

void cmd_build_example1d(Context& ctx, const Options& o) {
  emit_set(ctx, o, build_E_1d_example());
  emit_system(ctx, o, TranslationSystem(1, {{Rational(0)}, {Rational(1, 2)}}, Lattice(Matrix{{Rational(2)}})));
}

void cmd_build_counterexample3d(Context& ctx, const Options& o) {
  const Rational eps = parse_rational_option("epsilon", o.epsilon);
  ctx.parameters["epsilon"] = rational_to_json(eps);
  const auto e = build_E_3d(NearCube3DParams(eps));
  emit_set(ctx, o, e.set);
  ctx.result["manifest"] = manifest_to_json(e.manifest);
  if (!o.manifest.empty()) write_json(o.manifest, manifest_to_json(e.manifest));
}

void cmd_build_checkerboard(Context& ctx, const Options& o) {
  const Rational eps = parse_rational_option("epsilon", o.epsilon);
  ctx.parameters["epsilon"] = rational_to_json(eps);
  ctx.parameters["radius"] = o.radius;
  const auto board = build_checkerboard_tiling(NearCube3DParams(eps), o.radius);
  json offsets = json::array();
  for (const auto& [ij, t] : board.columns.offsets) offsets.push_back({ij.first, ij.second, rational_to_json(t)});
  ctx.result["offsets"] = std::move(offsets);
  ctx.result["adjacent_offsets_valid"] = board.columns.adjacent_offsets_valid();
  ctx.result["covolume"] = rational_to_json(board.system.lattice()->covolume());
  emit_system(ctx, o, board.system);
  if (!o.out.empty()) write_json(o.out, system_to_json(board.system));
}

json config_json(const LatticeConfig& c) {
  json matrix = json::array();
  for (const auto& row : c.matrix) matrix.push_back({rational_to_json(row[0]), rational_to_json(row[1])});
  return {{"index", c.index},
          {"offsets", std::move(matrix)},
          {"a", rational_to_json(c.a)},
          {"b", rational_to_json(c.b)},
          {"covolume", rational_to_json(c.system.lattice()->covolume())},
          {"system", system_to_json(c.system)}};
}

void cmd_build_lattice_configs(Context& ctx, const Options& o) {
  const Rational t = parse_rational_option("t", o.t);
  ctx.parameters["t"] = rational_to_json(t);
  const auto configs = enumerate_lattice_configs(t);
  json all = json::array();
  for (const auto& c : configs) all.push_back(config_json(c));
  ctx.result["configs"] = std::move(all);
  if (o.index != 0) {
    if (o.index < 1 || o.index > 4) throw InvalidInput("--index must be 1..4");
    ctx.parameters["index"] = o.index;
    if (!o.out.empty()) write_json(o.out, system_to_json(configs[static_cast<std::size_t>(o.index - 1)].system));
  } else if (!o.out.empty()) {
    throw InvalidInput("--out needs --index to select a configuration");
  }
}

void cmd_build_near_square(Context& ctx, const Options& o) {
  const Rational eps = parse_rational_option("epsilon", o.epsilon);
  ctx.parameters["epsilon"] = rational_to_json(eps);
  ctx.parameters["seed"] = o.seed;
  const auto inst = build_near_square_2d(eps, o.seed);
  emit_set(ctx, o, inst.set);
  ctx.result["u"] = vec_to_json(inst.u);
  ctx.result["v"] = vec_to_json(inst.v);
  const TranslationSystem patch(2, inst.patch);
  ctx.result["patch"] = system_to_json(patch);
  if (!o.patch_out.empty()) write_json(o.patch_out, system_to_json(patch));
  emit_system(ctx, o, TranslationSystem::lattice_only(inst.lattice));
}

void cmd_build_lift(Context& ctx, const Options& o) {
  const Rational eps = parse_rational_option("epsilon", o.epsilon);
  ctx.parameters["epsilon"] = rational_to_json(eps);
  ctx.parameters["dim"] = o.dim;
  if (o.dim < 3) throw InvalidInput("--dim must be at least 3");
  const auto n = static_cast<std::size_t>(o.dim);
  const NearCube3DParams params(eps);
  const PolyBox lifted = lift_to_dim(build_E_3d(params).set, n);
  emit_set(ctx, o, lifted);
  emit_system(ctx, o, lift_system(build_checkerboard_tiling(params, 1).system, n));
}

// theorem checks ----------------------------------------------------------------

void cmd_verify_theorem3d(Context& ctx, const Options& o) {
  const Rational eps = parse_rational_option("epsilon", o.epsilon);
  ctx.parameters["epsilon"] = rational_to_json(eps);
  const auto r = verify_theorem_3d(eps);
  json configs = json::array();
  for (const auto& c : r.configs) {
    json entry = config_json(c.config);
    entry.erase("system");
    entry["multiplicity"] = multiplicity_to_json(c.report, o.cells);
    entry["witness_in_corner_column"] =
        c.report.witness ? in_corner_column(c.report.witness->box.midpoint(), eps) : false;
    entry["falsified"] = c.falsified;
    configs.push_back(std::move(entry));
  }
  ctx.holds = r.verified();
  ctx.result = {{"measure", rational_to_json(r.measure)},
                {"checkerboard", multiplicity_to_json(r.checkerboard, o.cells)},
                {"checkerboard_tiles", r.checkerboard_tiles()},
                {"lattice_configs", std::move(configs)},
                {"all_lattice_configs_falsified", r.configs_falsified()}};
}

void cmd_extract_lattice_2d(Context& ctx, const Options& o) {
  const PolyBox set = load_set(ctx, o.set);
  require_dim(set, 2, "extract-lattice-2d");
  const TranslationSystem patch = system_from_json(load_input(ctx, "patch", o.patch));
  if (patch.dim() != 2) throw DimensionMismatch("the patch must be planar");
  std::optional<Rational> eps;
  if (!o.epsilon.empty()) {
    eps = parse_rational_option("epsilon", o.epsilon);
    ctx.parameters["epsilon"] = rational_to_json(*eps);
  }
  try {
    const auto r = extract_lattice_2d(set, patch.reps(), eps);
    ctx.holds = r.w == r.u + r.v && r.tiles;
    ctx.result = {{"u", vec_to_json(r.u)},
                  {"v", vec_to_json(r.v)},
                  {"w", vec_to_json(r.w)},
                  {"w_equals_u_plus_v", r.w == r.u + r.v},
                  {"epsilon", rational_to_json(r.epsilon)},
                  {"window", box_to_json(r.window)},
                  {"lattice_tiles", r.tiles},
                  {"witness", r.witness ? cell_to_json(*r.witness) : json(nullptr)}};
  } catch (const ExtractionError& e) {
    if (e.kind() == ExtractionError::Kind::no_corner) throw CommandError("no-corner", e.what());
    ctx.holds = false;
    auto opt = [](const std::optional<Vec>& v) { return v ? vec_to_json(*v) : json(nullptr); };
    ctx.result = {{"u", opt(e.u())}, {"v", opt(e.v())}, {"w", opt(e.w())}, {"w_equals_u_plus_v", false},
                  {"message", e.what()}};
  }
}

void cmd_render_slice(Context& ctx, const Options& o) {
  const PolyBox set = load_set(ctx, o.set);
  if (o.out.empty()) throw InvalidInput("--out is required");
  std::optional<std::size_t> axis;
  std::optional<Rational> level;
  if (set.dim() == 3) {
    if (o.axis < 0) throw InvalidInput("--axis must be 0, 1 or 2");
    axis = static_cast<std::size_t>(o.axis);
    if (o.level.empty()) throw InvalidInput("--level is required for a 3D set");
    level = parse_rational_option("level", o.level);
    ctx.parameters["axis"] = o.axis;
    ctx.parameters["level"] = rational_to_json(*level);
  }
  const auto r = render_slice(set, axis, level);
  write_text_file(o.out, r.svg);
  ctx.result = {{"rectangles", r.section.size()},
                {"section", polybox_to_json(r.section)},
                {"viewport", box_to_json(r.viewport)},
                {"svg_fnv1a64", fnv1a_hex(r.svg)}};
}

// plumbing ----------------------------------------------------------------------

std::string error_code(const std::exception& e) {
  if (const auto* c = dynamic_cast<const CommandError*>(&e)) return c->code();
  if (dynamic_cast<const HypothesisViolation*>(&e)) return "hypothesis-violation";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "dimension-mismatch";
  if (dynamic_cast<const DegenerateBox*>(&e)) return "degenerate-box";
  if (dynamic_cast<const TailBoundExceeded*>(&e)) return "tail-bound-exceeded";
  if (dynamic_cast<const InvalidInput*>(&e)) return "invalid-input";
  if (dynamic_cast<const json::exception*>(&e)) return "malformed-json";
  return "internal-error";
}

using Handler = void (*)(Context&, const Options&);

struct Registration {
  CLI::App* app;
  Handler handler;
};

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact verification of tilings by near-cubic polybox sets", "nearcube"};
  app.require_subcommand(1);
  app.add_flag("--no-timing", o.no_timing, "Omit the timing block from the report");

  std::vector<Registration> commands;
  std::vector<std::pair<CLI::App*, std::string>> names;
  auto add = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, help);
    commands.push_back({sub, h});
    names.emplace_back(sub, parent == &app ? name : parent->get_name() + " " + name);
    return sub;
  };
  auto set_opt = [&](CLI::App* sub) { sub->add_option("--set", o.set, "PolyBox JSON file")->required(); };
  auto window_opt = [&](CLI::App* sub) { sub->add_option("--window", o.window, "Window box, e.g. \"[0,2]x[0,1]\""); };
  auto sampling = [&](CLI::App* sub, std::size_t samples) {
    sub->add_option("--samples", o.samples, "Number of random sample points (default " + std::to_string(samples) + ")");
    sub->add_option("--seed", o.seed, "Sample seed")->capture_default_str();
    sub->add_option("--truncation", o.truncation, "Sum over |λ| <= M")->capture_default_str();
    sub->add_option("--tol", o.tol, "Tolerance including the tail bound")->capture_default_str();
    sub->add_option("--lo", o.lo, "Lower end of the sampling range")->capture_default_str();
    sub->add_option("--hi", o.hi, "Upper end of the sampling range")->capture_default_str();
  };

  auto* measure_cmd = add(&app, "measure", "Exact measure and bounding box", cmd_measure);
  set_opt(measure_cmd);

  auto* boolean = add(&app, "boolean", "Boolean operation on two sets", cmd_boolean);
  boolean->add_option("--op", o.op, "union | intersect | difference | symdiff")->capture_default_str();
  boolean->add_option("--a", o.a, "First operand")->required();
  boolean->add_option("--b", o.b, "Second operand")->required();
  boolean->add_option("--out", o.out, "Write the result here");

  for (auto [name, help, handler] : {std::tuple{"tiling-check", "Is E + T a tiling on the window?", &cmd_tiling_check},
                                     std::tuple{"packing-check", "Is E + T a packing on the window?",
                                                &cmd_packing_check}}) {
    auto* sub = add(&app, name, help, handler);
    set_opt(sub);
    sub->add_option("--system", o.system, "TranslationSystem JSON file")->required();
    window_opt(sub);
    sub->add_flag("--cells", o.cells, "Include every cell of the multiplicity map");
  }

  auto* complete = add(&app, "complete-1d", "Forced completion of a 1D tiling containing E+0", cmd_complete_1d);
  set_opt(complete);
  window_opt(complete);
  complete->add_option("--max-steps", o.max_steps)->capture_default_str();
  complete->add_option("--out", o.out, "Write the translations as a system here");

  auto* autocorr = add(&app, "autocorr", "Exact autocorrelation |E ∩ (E+x)|", cmd_autocorr);
  set_opt(autocorr);
  autocorr->add_option("--out", o.out, "Write the piecewise-linear function here");
  autocorr->add_option("--svg", o.svg, "Write an SVG graph here");

  set_opt(add(&app, "overlap-lemma", "Check |E ∩ (E+x)| > 0 on [0,1)", cmd_overlap_lemma));

  auto* ftz = add(&app, "ft-zero", "Exact zero test of the Fourier transform at a rational point", cmd_ft_zero);
  set_opt(ftz);
  ftz->add_option("--xi", o.xi, "Frequency p/q")->required();

  auto* spec = add(&app, "spectrum-check", "Orthogonality and completeness of a periodic spectrum",
                   cmd_spectrum_check);
  set_opt(spec);
  spec->add_option("--spectrum", o.spectrum, "Spectrum JSON file")->required();
  sampling(spec, 1000);

  auto* fejer = add(&app, "fejer", "Fejér kernel identities and partition of unity", cmd_fejer);
  fejer->add_option("--delta", o.delta, "δ > 0")->capture_default_str();
  sampling(fejer, 100);

  auto* build = app.add_subcommand("build", "Generate sets and translation systems");
  build->require_subcommand(1);
  auto outputs = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the set here");
    sub->add_option("--system-out", o.system_out, "Write the translation system here");
  };
  outputs(add(build, "example1d", "[0,1/2] ∪ [1,3/2] with {0,1/2} + 2Z", cmd_build_example1d));
  auto* ce = add(build, "counterexample3d", "The near-cube E(ε) with its segment manifest", cmd_build_counterexample3d);
  ce->add_option("--epsilon", o.epsilon)->capture_default_str();
  ce->add_option("--out", o.out, "Write the set here");
  ce->add_option("--manifest", o.manifest, "Write the segment manifest here");
  auto* board = add(build, "checkerboard", "Checkerboard column tiling of E(ε)", cmd_build_checkerboard);
  board->add_option("--epsilon", o.epsilon)->capture_default_str();
  board->add_option("--radius", o.radius)->capture_default_str();
  board->add_option("--out", o.out, "Write the translation system here");
  auto* configs = add(build, "lattice-configs", "The four lattice configurations", cmd_build_lattice_configs);
  configs->add_option("--t", o.t)->capture_default_str();
  configs->add_option("--index", o.index, "Configuration 1..4 to write with --out");
  configs->add_option("--out", o.out, "Write the selected configuration's system here");
  auto* ns = add(build, "near-square", "Planar near-square tile with a lattice tiling", cmd_build_near_square);
  ns->add_option("--epsilon", o.epsilon)->capture_default_str();
  ns->add_option("--seed", o.seed)->capture_default_str();
  ns->add_option("--patch-out", o.patch_out, "Write the translation patch here");
  outputs(ns);
  auto* lift = add(build, "lift", "E(ε) x [0,1]^(n-3) with the lifted checkerboard", cmd_build_lift);
  lift->add_option("--epsilon", o.epsilon)->capture_default_str();
  lift->add_option("--dim", o.dim)->capture_default_str();
  outputs(lift);

  auto* thm = add(&app, "verify-theorem3d", "E(ε) tiles, but no lattice tiling among the four configurations",
                  cmd_verify_theorem3d);
  thm->add_option("--epsilon", o.epsilon)->capture_default_str();
  thm->add_flag("--cells", o.cells, "Include every cell of the multiplicity maps");

  auto* extract = add(&app, "extract-lattice-2d", "Find u, v, w in a planar tiling patch and test w = u + v",
                      cmd_extract_lattice_2d);
  set_opt(extract);
  extract->add_option("--patch", o.patch, "TranslationSystem JSON whose reps form the patch")->required();
  extract->add_option("--epsilon", o.epsilon, "Defaults to the enclosing margin of E");

  auto* render = add(&app, "render-slice", "SVG of a planar set or a slice of a 3D set", cmd_render_slice);
  set_opt(render);
  render->add_option("--axis", o.axis)->capture_default_str();
  render->add_option("--level", o.level, "Slice level p/q");
  render->add_option("--out", o.out, "SVG output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return ExitCode::usage_error;
  }

  const Registration* chosen = nullptr;
  std::string name;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    if (commands[i].app->parsed()) {
      chosen = &commands[i];
      name = names[i].second;
    }
  }
  if (chosen == nullptr) {
    err << "no command given\n";
    return ExitCode::usage_error;
  }
  if (name == "extract-lattice-2d" && extract->count("--epsilon") == 0) o.epsilon.clear();
  if (name == "fejer" && fejer->count("--samples") == 0) o.samples = 100;

  Context ctx;
  ctx.command = name;
  const auto start = std::chrono::steady_clock::now();
  int code = ExitCode::verified;
  std::optional<json> error;
  try {
    chosen->handler(ctx, o);
    code = ctx.holds ? ExitCode::verified : ExitCode::falsified;
  } catch (const std::exception& e) {
    code = ExitCode::usage_error;
    error = json{{"code", error_code(e)}, {"message", e.what()}};
  }
  const double wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json body = {{"schema", kReportSchema},
               {"command", ctx.command},
               {"inputs", ctx.inputs},
               {"parameters", ctx.parameters},
               {"status", error ? "error" : (ctx.holds ? "verified" : "falsified")},
               {"exit_code", code},
               {"result", ctx.result}};
  if (error) body["error"] = *error;
  json report = body;
  report["checksum"] = fnv1a_hex(body.dump());
  if (!o.no_timing) report["timing"] = {{"wall_ms", wall_ms}, {"threads", default_thread_count()}};
  out << report.dump(2) << "\n";
  if (error) err << "error [" << (*error)["code"].get<std::string>() << "]: " << (*error)["message"].get<std::string>()
                 << "\n";
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("nearcube");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace nearcube::cli
