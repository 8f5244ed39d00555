#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "kripkelab/correspondence.hpp"
#include "kripkelab/kripke.hpp"
#include "kripkelab/logics.hpp"

namespace kripkelab {

// Frame JSON:  {"worlds": n, "le": [[i, j], ...]}   pairs are closed on read.
// Model JSON:  frame fields plus {"valuation": {"p": [i, ...], ...}}.
//
// Readers throw FormatError on malformed documents, plus whatever
// make_frame / Model raise (AntisymmetryViolation, InvalidValuation, ...).
// A valuation that is not upward closed is rejected, never repaired.

Frame frame_from_json(const nlohmann::json& j);
Model model_from_json(const nlohmann::json& j);

/// Reads a frame or model document from a file. A missing "valuation" key
/// yields the empty valuation.
Model load_model(const std::string& path);
Frame load_frame(const std::string& path);

/// "le" lists the covering pairs.
nlohmann::json to_json(const Frame& fr);
nlohmann::json to_json(const Model& m);
nlohmann::json to_json(const Countermodel& cm);
nlohmann::json to_json(const CorrespondenceReport& r);
nlohmann::json to_json(const CollapseReport& r);
nlohmann::json to_json(const Decision& d);

/// Prefix marking an atom that is not forced at a world in DOT labels.
inline constexpr std::string_view kStrikePrefix = "/";

/// Graphviz digraph: one node per world, one edge per covering pair.
std::string to_dot(const Frame& fr);
/// Node labels list the forced atoms of the valuation; unforced atoms are
/// shown with kStrikePrefix.
std::string to_dot(const Model& m);
/// As for a model; the refuted world is drawn with a double border.
std::string to_dot(const Countermodel& cm);

}  // namespace kripkelab
