#include "nearcube/json_io.hpp"

#include <fstream>
#include <sstream>

#include "nearcube/error.hpp"

namespace nearcube {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw InvalidInput(std::string("JSON field '") + key + "' must be an array");
  return a;
}

std::size_t dim_field(const json& j) {
  const json& d = field(j, "dim");
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) throw InvalidInput("'dim' must be a positive integer");
  return d.get<std::size_t>();
}

Interval interval_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidInput("an interval is a pair [lo, hi]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

json interval_to_json(const Interval& iv) { return json::array({rational_to_json(iv.lo), rational_to_json(iv.hi)}); }

std::vector<Vec> vecs_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) throw InvalidInput("expected an array of vectors");
  std::vector<Vec> out;
  for (const auto& item : j) {
    Vec v = vec_from_json(item);
    if (v.size() != dim) throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " in dimension " +
                                                 std::to_string(dim));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InvalidInput("rationals must be strings \"p/q\" or integers, got " + j.dump());
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("a vector is an array of rationals");
  Vec out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

json box_to_json(const Box& b) {
  json out = json::array();
  for (const auto& iv : b.intervals()) out.push_back(interval_to_json(iv));
  return out;
}

Box box_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("a box is an array of intervals");
  std::vector<Interval> ivs;
  for (const auto& iv : j) ivs.push_back(interval_from_json(iv));
  return Box(std::move(ivs));
}

json polybox_to_json(const PolyBox& p) {
  json boxes = json::array();
  for (const auto& b : p.boxes()) boxes.push_back(box_to_json(b));
  return {{"dim", p.dim()}, {"boxes", std::move(boxes)}};
}

PolyBox polybox_from_json(const json& j, DegeneratePolicy policy) {
  const std::size_t dim = dim_field(j);
  std::vector<std::vector<Interval>> raw;
  for (const auto& b : array_field(j, "boxes")) {
    if (!b.is_array()) throw InvalidInput("a box is an array of intervals");
    std::vector<Interval> ivs;
    for (const auto& iv : b) ivs.push_back(interval_from_json(iv));
    if (ivs.size() != dim) {
      throw DimensionMismatch("box with " + std::to_string(ivs.size()) + " intervals in a " + std::to_string(dim) +
                              "-dimensional set");
    }
    raw.push_back(std::move(ivs));
  }
  return PolyBox::make(dim, raw, policy);
}

json system_to_json(const TranslationSystem& s) {
  json reps = json::array();
  for (const auto& r : s.reps()) reps.push_back(vec_to_json(r));
  json lattice = nullptr;
  if (s.lattice()) {
    json gens = json::array();
    for (const auto& g : s.lattice()->generators()) gens.push_back(vec_to_json(g));
    lattice = {{"generators", std::move(gens)}};
  }
  return {{"dim", s.dim()}, {"reps", std::move(reps)}, {"lattice", std::move(lattice)}};
}

TranslationSystem system_from_json(const json& j) {
  const std::size_t dim = dim_field(j);
  auto reps = vecs_from_json(array_field(j, "reps"), dim);
  std::optional<Lattice> lattice;
  if (j.contains("lattice") && !j.at("lattice").is_null()) {
    auto gens = vecs_from_json(array_field(j.at("lattice"), "generators"), dim);
    lattice.emplace(std::move(gens));
  }
  return TranslationSystem(dim, std::move(reps), std::move(lattice));
}

json piecewise_to_json(const PiecewiseLinear1D& g) {
  return {{"breakpoints", vec_to_json(g.breakpoints())}, {"values", vec_to_json(g.values())}};
}

PiecewiseLinear1D piecewise_from_json(const json& j) {
  return PiecewiseLinear1D(vec_from_json(array_field(j, "breakpoints")), vec_from_json(array_field(j, "values")));
}

json spectrum_to_json(const SpectrumCandidate& s) {
  return {{"reps", vec_to_json(s.reps())}, {"period", rational_to_json(s.period())}};
}

SpectrumCandidate spectrum_from_json(const json& j) {
  return SpectrumCandidate(vec_from_json(array_field(j, "reps")), rational_from_json(field(j, "period")));
}

json cell_to_json(const Cell& c) {
  return {{"box", box_to_json(c.box)}, {"midpoint", vec_to_json(c.box.midpoint())}, {"count", c.count}};
}

json multiplicity_to_json(const MultiplicityReport& r, bool with_cells) {
  json hull = json::array();
  for (const auto& [lo, hi] : r.coefficient_hull) hull.push_back(json::array({lo.get_str(), hi.get_str()}));
  json out = {
      {"window", box_to_json(r.window)},
      {"verdict", to_string(r.verdict)},
      {"witness", r.witness ? cell_to_json(*r.witness) : json(nullptr)},
      {"cell_count", r.cells.size()},
      {"translate_count", r.translate_count},
      {"coefficient_hull", std::move(hull)},
      {"checksum",
       {{"cell_mass", rational_to_json(r.cell_mass)},
        {"translate_mass", rational_to_json(r.translate_mass)},
        {"window_measure", rational_to_json(r.window.measure())},
        {"conserved", r.mass_conserved()}}},
  };
  if (with_cells) {
    json cells = json::array();
    for (const auto& c : r.cells) cells.push_back({{"box", box_to_json(c.box)}, {"count", c.count}});
    out["cells"] = std::move(cells);
  }
  return out;
}

json zero_component_to_json(const ZeroComponent& z) {
  return {{"lo", rational_to_json(z.lo)},
          {"hi", rational_to_json(z.hi)},
          {"lo_closed", z.lo_closed},
          {"hi_closed", z.hi_closed},
          {"point", z.is_point()}};
}

json manifest_to_json(const NearCube3DManifest& m) {
  json segments = json::array();
  for (const auto& s : m.segments) {
    json pattern = json::array();
    for (const auto& iv : s.pattern) pattern.push_back(interval_to_json(iv));
    segments.push_back({{"label", s.label},
                        {"footprint", box_to_json(s.footprint)},
                        {"pattern", std::move(pattern)},
                        {"pattern_measure", rational_to_json(s.pattern_measure)},
                        {"measure", rational_to_json(s.measure)}});
  }
  return {{"epsilon", rational_to_json(m.epsilon)},
          {"segments", std::move(segments)},
          {"total_measure", rational_to_json(m.total_measure)},
          {"notes", m.notes}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << text;
  if (!out) throw InvalidInput("error writing " + path.string());
}

}  // namespace nearcube
