#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "kripkelab/kripkelab.hpp"

namespace kripkelab::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::string dot_path;

  std::string formula;
  std::string file;
  std::string logic;
  std::string condition;
  std::string kind;
  std::optional<std::size_t> world;
  std::size_t bound = 4;
  std::size_t max_n = 4;
  std::size_t n = 0;
  bool dedup = false;
  bool stats = false;
  bool list = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool json_output(const Options& o) { return o.format == "json"; }

std::string describe_frame(const Frame& fr) {
  std::string out = std::to_string(fr.size()) + (fr.size() == 1 ? " world" : " worlds");
  const auto pairs = fr.covering_pairs();
  if (pairs.empty()) return out + ", no strict order";
  out += ", ";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) out += ", ";
    out += "w" + std::to_string(pairs[i].first) + " < w" + std::to_string(pairs[i].second);
  }
  return out;
}

void print_countermodel(std::ostream& out, const Countermodel& cm) {
  out << "countermodel for " << render(cm.formula()) << '\n'
      << "  frame:      " << describe_frame(cm.frame()) << '\n'
      << "  refuted at: w" << cm.world() << '\n'
      << "  valuation:\n";
  std::set<std::string> names = atoms(cm.formula());
  for (const auto& [atom, worlds] : cm.valuation().sets()) names.insert(atom);
  for (const std::string& a : names) out << "    " << a << " = " << to_string(cm.valuation().at(a)) << '\n';
}

void write_dot(const Options& o, const std::string& dot) {
  if (o.dot_path.empty()) return;
  std::ofstream file(o.dot_path);
  if (!file || !(file << dot)) throw InputError("cannot write " + o.dot_path);
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_parse(const Options& o, std::ostream& out) {
  const Formula f = parse(o.formula);
  const std::set<std::string> names = atoms(f);
  if (json_output(o)) {
    out << json{{"formula", render(f)}, {"ast", render_ast(f)}, {"atoms", names}}.dump(2) << '\n';
  } else {
    std::string atom_list;
    for (const std::string& a : names) atom_list += (atom_list.empty() ? "" : ", ") + a;
    out << "formula: " << render(f) << '\n'
        << "ast:     " << render_ast(f) << '\n'
        << "atoms:   " << (atom_list.empty() ? "(none)" : atom_list) << '\n';
  }
  return kPositive;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Model m = load_model(o.file);
  const Formula f = parse(o.formula);
  const WorldSet forced = truth_set(m, f);
  WorldSet asked = m.frame().worlds();
  if (o.world) {
    if (*o.world >= m.frame().size()) throw UnknownWorld(*o.world, m.frame().size());
    asked = WorldSet::single(*o.world);
  }
  const bool all_forced = asked.subset_of(forced);
  if (json_output(o)) {
    json forced_at = json::array();
    for (World w : forced.to_vector()) forced_at.push_back(w);
    out << json{{"formula", render(f)}, {"forced_at", forced_at}, {"forced", all_forced}}.dump(2)
        << '\n';
  } else {
    out << "formula: " << render(f) << '\n';
    for (World w : asked.to_vector()) {
      out << "  w" << w << ": " << (forced.contains(w) ? "forced" : "not forced") << '\n';
    }
  }
  return all_forced ? kPositive : kCountermodel;
}

int cmd_valid(const Options& o, std::ostream& out) {
  const Frame fr = load_frame(o.file);
  const Formula f = parse(o.formula);
  const ValidityResult r = frame_valid(fr, f);
  if (is_valid(r)) {
    write_dot(o, to_dot(fr));
    if (json_output(o)) {
      out << json{{"verdict", "valid"}, {"formula", render(f)}, {"frame", to_json(fr)}}.dump(2)
          << '\n';
    } else {
      out << "valid: " << render(f) << " on frame with " << describe_frame(fr) << '\n';
    }
    return kPositive;
  }
  const auto& cm = std::get<Countermodel>(r);
  write_dot(o, to_dot(cm));
  if (json_output(o)) {
    out << json{{"verdict", "countermodel"}, {"countermodel", to_json(cm)}}.dump(2) << '\n';
  } else {
    print_countermodel(out, cm);
  }
  return kCountermodel;
}

int cmd_decide(const Options& o, std::ostream& out) {
  const auto name = parse_logic_name(o.logic);
  if (!name) throw InputError("unknown logic '" + o.logic + "' (expected ipc, cpc, gl, bd2, gl+bd2)");
  const Formula f = parse(o.formula);
  const Decision d = decide(logic(*name), f, o.bound);
  if (d.countermodel) write_dot(o, to_dot(*d.countermodel));

  if (json_output(o)) {
    json j = to_json(d);
    j["logic"] = std::string(to_string(*name));
    j["formula"] = render(f);
    out << j.dump(2) << '\n';
  } else {
    switch (d.verdict) {
      case Decision::Verdict::kValid:
        out << "valid in " << to_string(*name) << ": " << render(f)
            << " (search is complete at " << d.searched_up_to
            << (d.searched_up_to == 1 ? " world)\n" : " worlds)\n");
        break;
      case Decision::Verdict::kRefuted:
        out << "refuted in " << to_string(*name) << '\n';
        print_countermodel(out, *d.countermodel);
        break;
      case Decision::Verdict::kNoCountermodelUpTo:
        out << "no countermodel in " << to_string(*name) << " up to " << d.searched_up_to
            << " worlds (inconclusive)\n";
        break;
    }
  }
  switch (d.verdict) {
    case Decision::Verdict::kValid:
      return kPositive;
    case Decision::Verdict::kRefuted:
      return kCountermodel;
    case Decision::Verdict::kNoCountermodelUpTo:
      break;
  }
  return kInconclusive;
}

int cmd_correspond(const Options& o, std::ostream& out) {
  const auto condition = FrameCondition::from_name(o.condition);
  if (!condition) {
    throw InputError("unknown condition '" + o.condition +
                     "' (expected lin, bd2-paper, bd2-chain, discrete, depth-le-K, cone-size-le-K)");
  }
  const Formula schema = parse(o.formula);
  const CorrespondenceReport r = check_correspondence(schema, *condition, o.max_n, o.dedup);

  if (json_output(o)) {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << "schema:    " << render(r.schema) << '\n'
        << "condition: " << r.condition.id() << '\n'
        << "frames:    " << (r.dedup ? "one per isomorphism class" : "labeled") << '\n'
        << "   n    frames  schema_valid  condition_true  mismatches\n";
    for (const SizeTally& t : r.tallies) {
      char line[96];
      std::snprintf(line, sizeof line, "%4zu %9zu %13zu %15zu %11zu\n", t.worlds, t.frames,
                    t.schema_valid, t.condition_true, t.mismatches);
      out << line;
    }
    if (r.equivalent()) {
      out << "result: equivalent on all frames up to " << r.max_n << " worlds\n";
    } else {
      out << "result: " << r.total_mismatches() << " mismatches\n"
          << "first mismatch: " << describe_frame(r.first_mismatch->frame) << " ("
          << to_string(r.first_mismatch->direction) << ")\n";
      if (r.first_mismatch->countermodel) print_countermodel(out, *r.first_mismatch->countermodel);
    }
  }
  return r.equivalent() ? kPositive : kCountermodel;
}

int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.kind != "gl" && o.kind != "bd2") throw InputError("witness kind must be gl or bd2");
  const Frame fr = load_frame(o.file);
  try {
    const Countermodel cm = o.kind == "gl" ? gl_witness(fr) : bd2_witness(fr);
    write_dot(o, to_dot(cm));
    if (json_output(o)) {
      out << to_json(cm).dump(2) << '\n';
    } else {
      print_countermodel(out, cm);
    }
    return kCountermodel;
  } catch (const PreconditionFailed& e) {
    if (json_output(o)) {
      out << json{{"precondition_failed", e.what()}}.dump(2) << '\n';
    }
    err << "precondition failed: " << e.what() << '\n';
    return kInconclusive;
  }
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  std::size_t count = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> histogram;
  json frames = json::array();
  for_each_frame(o.n, o.dedup, [&](const Frame& fr) {
    ++count;
    if (o.stats) ++histogram[{depth(fr), width(fr)}];
    if (o.list) frames.push_back(to_json(fr));
    return true;
  });

  if (json_output(o)) {
    json j = {{"n", o.n}, {"dedup", o.dedup}, {"frames", count}};
    if (o.stats) {
      json h = json::array();
      for (const auto& [key, c] : histogram) {
        h.push_back({{"depth", key.first}, {"width", key.second}, {"count", c}});
      }
      j["histogram"] = std::move(h);
    }
    if (o.list) j["list"] = std::move(frames);
    out << j.dump(2) << '\n';
  } else {
    out << "frames: " << count << (o.dedup ? " (up to isomorphism)" : " (labeled)") << '\n';
    if (o.stats) {
      out << "  depth  width  count\n";
      for (const auto& [key, c] : histogram) {
        char line[64];
        std::snprintf(line, sizeof line, "%7zu %6zu %6zu\n", key.first, key.second, c);
        out << line;
      }
    }
    if (o.list) {
      for (const json& fr : frames) out << fr.dump() << '\n';
    }
  }
  return kPositive;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  const Model m = load_model(o.file);
  const std::string dot = m.valuation().sets().empty() ? to_dot(m.frame()) : to_dot(m);
  if (o.dot_path.empty()) {
    out << dot;
  } else {
    write_dot(o, dot);
  }
  return kPositive;
}

int cmd_collapse(const Options& o, std::ostream& out) {
  const CollapseReport r = collapse_check(o.max_n);
  if (json_output(o)) {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << "frames checked:          " << r.frames_checked << " (up to " << r.max_n
        << " worlds)\n"
        << "one/two-world frames:    " << r.small_frames_checked << '\n'
        << "violations:              " << r.violations.size() << '\n';
    for (const CollapseViolation& v : r.violations) {
      out << "  " << describe_frame(v.frame) << ": " << v.detail << '\n';
    }
  }
  return r.ok() ? kPositive : kCountermodel;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Kripke semantics workbench for intuitionistic and intermediate logics",
               "kripkelab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto add_dot = [&o](CLI::App* sub) {
    sub->add_option("--dot", o.dot_path, "Write a Graphviz rendering to PATH");
  };

  auto* parse_cmd = app.add_subcommand("parse", "Parse a formula and show its AST");
  parse_cmd->add_option("formula", o.formula)->required();

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula in a model file");
  eval_cmd->add_option("model", o.file, "Model JSON")->required();
  eval_cmd->add_option("formula", o.formula)->required();
  eval_cmd->add_option("--world", o.world, "Only report this world");

  auto* valid_cmd = app.add_subcommand("valid", "Decide validity of a formula on a frame file");
  valid_cmd->add_option("frame", o.file, "Frame JSON")->required();
  valid_cmd->add_option("formula", o.formula)->required();
  add_dot(valid_cmd);

  auto* decide_cmd = app.add_subcommand("decide", "Bounded countermodel search in a logic");
  decide_cmd->add_option("logic", o.logic, "ipc, cpc, gl, bd2 or gl+bd2")->required();
  decide_cmd->add_option("formula", o.formula)->required();
  decide_cmd->add_option("--bound", o.bound, "Largest frame size searched")
      ->check(CLI::Range(std::size_t{1}, kMaxEnumerationWorlds));
  add_dot(decide_cmd);

  auto* correspond_cmd =
      app.add_subcommand("correspond", "Compare a schema with a frame condition on all small frames");
  correspond_cmd->add_option("schema", o.formula)->required();
  correspond_cmd->add_option("condition", o.condition)->required();
  correspond_cmd->add_option("--max-n", o.max_n, "Largest frame size")
      ->check(CLI::Range(std::size_t{1}, kMaxEnumerationWorlds));
  correspond_cmd->add_flag("--dedup", o.dedup, "One frame per isomorphism class");

  auto* witness_cmd = app.add_subcommand("witness", "Build the GL or BD2 countermodel for a frame");
  witness_cmd->add_option("kind", o.kind, "gl or bd2")->required();
  witness_cmd->add_option("frame", o.file, "Frame JSON")->required();
  add_dot(witness_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count the partial orders on n worlds");
  enumerate_cmd->add_option("--n", o.n, "Number of worlds")
      ->required()
      ->check(CLI::Range(std::size_t{1}, kMaxEnumerationWorlds));
  enumerate_cmd->add_flag("--dedup", o.dedup, "One frame per isomorphism class");
  enumerate_cmd->add_flag("--stats", o.stats, "Histogram by (depth, width)");
  enumerate_cmd->add_flag("--list", o.list, "Print every frame as JSON");

  auto* dot_cmd = app.add_subcommand("export-dot", "Render a frame or model file as Graphviz DOT");
  dot_cmd->add_option("file", o.file, "Frame or model JSON")->required();
  add_dot(dot_cmd);

  auto* collapse_cmd =
      app.add_subcommand("collapse", "Check that GL+BD2 frames are those with cones of <= 2 worlds");
  collapse_cmd->add_option("--max-n", o.max_n, "Largest frame size")
      ->check(CLI::Range(std::size_t{1}, kMaxEnumerationWorlds));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPositive;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPositive;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(o, out);
    if (eval_cmd->parsed()) return cmd_eval(o, out);
    if (valid_cmd->parsed()) return cmd_valid(o, out);
    if (decide_cmd->parsed()) return cmd_decide(o, out);
    if (correspond_cmd->parsed()) return cmd_correspond(o, out);
    if (witness_cmd->parsed()) return cmd_witness(o, out, err);
    if (enumerate_cmd->parsed()) return cmd_enumerate(o, out);
    if (dot_cmd->parsed()) return cmd_export_dot(o, out);
    if (collapse_cmd->parsed()) return cmd_collapse(o, out);
  } catch (const kripkelab::Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace kripkelab::cli
