#include "kripkelab/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "kripkelab/error.hpp"

namespace kripkelab {

using nlohmann::json;

namespace {

std::size_t world_index(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw FormatError(std::string(what) + " must be a non-negative integer, got " + v.dump());
  }
  return v.get<std::size_t>();
}

json world_list(WorldSet s) {
  json out = json::array();
  for (World w : s.to_vector()) out.push_back(w);
  return out;
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace

Frame frame_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("frame document must be a JSON object");
  if (!j.contains("worlds")) throw FormatError("frame document lacks \"worlds\"");
  const std::size_t n = world_index(j.at("worlds"), "\"worlds\"");

  std::vector<std::pair<World, World>> pairs;
  if (j.contains("le")) {
    const json& le = j.at("le");
    if (!le.is_array()) throw FormatError("\"le\" must be an array of pairs");
    for (const json& pair : le) {
      if (!pair.is_array() || pair.size() != 2) {
        throw FormatError("\"le\" entries must be [i, j] pairs, got " + pair.dump());
      }
      pairs.emplace_back(world_index(pair[0], "world index"), world_index(pair[1], "world index"));
    }
  }
  return make_frame(n, pairs);
}

Model model_from_json(const json& j) {
  Frame fr = frame_from_json(j);
  Valuation v;
  if (j.contains("valuation")) {
    const json& val = j.at("valuation");
    if (!val.is_object()) throw FormatError("\"valuation\" must be an object");
    for (const auto& [atom, worlds] : val.items()) {
      if (!worlds.is_array()) throw FormatError("valuation of '" + atom + "' must be an array");
      WorldSet s;
      for (const json& w : worlds) {
        const std::size_t idx = world_index(w, "world index");
        if (idx >= fr.size()) throw UnknownWorld(idx, fr.size());
        s.insert(idx);
      }
      v.assign(atom, s);
    }
  }
  return Model(std::move(fr), std::move(v));
}

Model load_model(const std::string& path) { return model_from_json(parse_file(path)); }

Frame load_frame(const std::string& path) { return frame_from_json(parse_file(path)); }

json to_json(const Frame& fr) {
  json le = json::array();
  for (auto [x, y] : fr.covering_pairs()) le.push_back({x, y});
  return {{"worlds", fr.size()}, {"le", std::move(le)}};
}

json to_json(const Model& m) {
  json out = to_json(m.frame());
  json val = json::object();
  for (const auto& [atom, worlds] : m.valuation().sets()) val[atom] = world_list(worlds);
  out["valuation"] = std::move(val);
  return out;
}

json to_json(const Countermodel& cm) {
  return {{"formula", render(cm.formula())}, {"world", cm.world()}, {"model", to_json(cm.model())}};
}

json to_json(const CorrespondenceReport& r) {
  json tallies = json::array();
  for (const SizeTally& t : r.tallies) {
    tallies.push_back({{"worlds", t.worlds},
                       {"frames", t.frames},
                       {"schema_valid", t.schema_valid},
                       {"condition_true", t.condition_true},
                       {"mismatches", t.mismatches}});
  }
  json out = {{"schema", render(r.schema)},
              {"condition", r.condition.id()},
              {"max_n", r.max_n},
              {"dedup", r.dedup},
              {"tallies", std::move(tallies)},
              {"mismatches", r.total_mismatches()},
              {"first_mismatch", nullptr}};
  if (r.first_mismatch) {
    json m = {{"frame", to_json(r.first_mismatch->frame)},
              {"direction", std::string(to_string(r.first_mismatch->direction))}};
    if (r.first_mismatch->countermodel) m["countermodel"] = to_json(*r.first_mismatch->countermodel);
    out["first_mismatch"] = std::move(m);
  }
  return out;
}

json to_json(const CollapseReport& r) {
  json violations = json::array();
  for (const CollapseViolation& v : r.violations) {
    violations.push_back(
        {{"kind", v.kind == CollapseViolation::Kind::kClassMismatch ? "class_mismatch"
                                                                     : "small_frame_refutes"},
         {"frame", to_json(v.frame)},
         {"detail", v.detail}});
  }
  return {{"max_n", r.max_n},
          {"frames_checked", r.frames_checked},
          {"small_frames_checked", r.small_frames_checked},
          {"violations", std::move(violations)}};
}

json to_json(const Decision& d) {
  json out = {{"verdict", std::string(to_string(d.verdict))}, {"searched_up_to", d.searched_up_to}};
  if (d.countermodel) out["countermodel"] = to_json(*d.countermodel);
  return out;
}

// ---------------------------------------------------------------------------
// DOT

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string render_dot(const Frame& fr, const Valuation* v, const std::set<std::string>& names,
                       std::optional<World> refuted) {
  std::ostringstream out;
  out << "digraph frame {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (World w = 0; w < fr.size(); ++w) {
    std::string label = "w" + std::to_string(w);
    if (v != nullptr && !names.empty()) {
      std::string atoms_line;
      for (const std::string& a : names) {
        if (!atoms_line.empty()) atoms_line += ' ';
        if (!v->at(a).contains(w)) atoms_line += kStrikePrefix;
        atoms_line += a;
      }
      label += "\\n" + escape(atoms_line);
    }
    out << "  w" << w << " [label=\"" << label << '"';
    if (refuted && *refuted == w) out << ", peripheries=2";
    out << "];\n";
  }
  for (auto [x, y] : fr.covering_pairs()) out << "  w" << x << " -> w" << y << ";\n";
  out << "}\n";
  return out.str();
}

std::set<std::string> valuation_atoms(const Valuation& v) {
  std::set<std::string> names;
  for (const auto& [atom, worlds] : v.sets()) names.insert(atom);
  return names;
}

}  // namespace

std::string to_dot(const Frame& fr) { return render_dot(fr, nullptr, {}, std::nullopt); }

std::string to_dot(const Model& m) {
  return render_dot(m.frame(), &m.valuation(), valuation_atoms(m.valuation()), std::nullopt);
}

std::string to_dot(const Countermodel& cm) {
  std::set<std::string> names = valuation_atoms(cm.valuation());
  names.merge(atoms(cm.formula()));
  return render_dot(cm.frame(), &cm.valuation(), names, cm.world());
}

}  // namespace kripkelab
