#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "nearcube/autocorr.hpp"
#include "nearcube/constructions.hpp"
#include "nearcube/lattice.hpp"
#include "nearcube/polybox.hpp"
#include "nearcube/spectral.hpp"
#include "nearcube/tiling.hpp"

namespace nearcube {

using json = nlohmann::json;

/// Rationals travel as "p/q" strings; integers are also accepted on input.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);
json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);
json box_to_json(const Box& b);
Box box_from_json(const json& j);

/// {"dim": n, "boxes": [[["p/q","r/s"], ...], ...]}
json polybox_to_json(const PolyBox& p);
PolyBox polybox_from_json(const json& j, DegeneratePolicy policy = DegeneratePolicy::reject);

/// {"dim": n, "reps": [[...], ...], "lattice": {"generators": [[...], ...]} | null}
json system_to_json(const TranslationSystem& s);
TranslationSystem system_from_json(const json& j);

/// {"breakpoints": [...], "values": [...]}
json piecewise_to_json(const PiecewiseLinear1D& g);
PiecewiseLinear1D piecewise_from_json(const json& j);

/// {"reps": [...], "period": "p/q"}
json spectrum_to_json(const SpectrumCandidate& s);
SpectrumCandidate spectrum_from_json(const json& j);

json cell_to_json(const Cell& c);
/// Verdict, witness and checksums; the cell list only when `with_cells`.
json multiplicity_to_json(const MultiplicityReport& r, bool with_cells = false);
json zero_component_to_json(const ZeroComponent& z);
json manifest_to_json(const NearCube3DManifest& m);

/// Reads and parses a JSON file; InvalidInput on I/O or syntax errors.
json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace nearcube
