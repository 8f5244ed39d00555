#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "kripkelab/io.hpp"

namespace kripkelab {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(KRIPKELAB_DATA_DIR) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliParse, Examples) {
  Result r = run({"parse", "(p->q)|(q->p)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "Or(Imp(Atom(p), Atom(q)), Imp(Atom(q), Atom(p)))"));
  EXPECT_TRUE(contains(r.out, "atoms:   p, q"));

  r = run({"parse", "p->"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "position 4")) << r.err;

  r = run({"parse", "~~(p|~p)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "Imp(Imp(Or(Atom(p), Imp(Atom(p), Bottom)), Bottom), Bottom)"));
}

TEST(CliValid, Examples) {
  EXPECT_EQ(run({"valid", data("3chain.json"), "(p->q)|(q->p)"}).code, 0);
  Result r = run({"valid", data("3chain.json"), "p|(p->(q|~q))"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "refuted at: w0"));
  EXPECT_EQ(run({"valid", data("fork.json"), "(p->q)|(q->p)"}).code, 1);
}

TEST(CliValid, InputErrors) {
  EXPECT_EQ(run({"valid", data("missing.json"), "p"}).code, 2);
  EXPECT_EQ(run({"valid", data("fork.json"), "p &"}).code, 2);
  EXPECT_EQ(run({"valid", data("fork.json")}).code, 2);
}

TEST(CliValid, WritesDot) {
  const auto path = std::filesystem::temp_directory_path() / "kripkelab_cli_test.dot";
  std::filesystem::remove(path);
  EXPECT_EQ(run({"valid", data("fork.json"), "(p->q)|(q->p)", "--dot", path.string()}).code, 1);
  std::ifstream in(path);
  std::stringstream dot;
  dot << in.rdbuf();
  EXPECT_TRUE(contains(dot.str(), "digraph"));
  EXPECT_TRUE(contains(dot.str(), "peripheries=2"));
  std::filesystem::remove(path);
}

TEST(CliDecide, Examples) {
  EXPECT_EQ(run({"decide", "cpc", "p|~p"}).code, 0);

  Result r = run({"decide", "ipc", "p|~p", "--bound", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "2 worlds, w0 < w1"));
  EXPECT_TRUE(contains(r.out, "p = {w1}"));

  r = run({"decide", "gl+bd2", "p|~p", "--bound", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "2 worlds, w0 < w1"));

  EXPECT_EQ(run({"decide", "ipc", "~~(p|~p)", "--bound", "3"}).code, 3);
  EXPECT_EQ(run({"decide", "s4", "p"}).code, 2);
  EXPECT_EQ(run({"decide", "ipc", "p", "--bound", "9"}).code, 2);
}

TEST(CliCorrespond, Examples) {
  Result r = run({"correspond", "(p->q)|(q->p)", "lin", "--max-n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "equivalent"));

  r = run({"correspond", "p|(p->(q|~q))", "bd2-paper", "--max-n", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "first mismatch: 2 worlds, w0 < w1 (schema valid, condition false)"));

  EXPECT_EQ(run({"correspond", "p|(p->(q|~q))", "bd2-chain", "--max-n", "4"}).code, 0);
  EXPECT_EQ(run({"correspond", "p", "sideways"}).code, 2);
}

TEST(CliCorrespond, JsonReport) {
  Result r = run({"correspond", "p|(p->(q|~q))", "bd2-paper", "--max-n", "3", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(frame_from_json(j.at("first_mismatch").at("frame")), make_frame(2, {{0, 1}}));
  // Global flag may also precede the subcommand.
  Result before = run({"--format", "json", "correspond", "p|(p->(q|~q))", "bd2-paper", "--max-n", "3"});
  EXPECT_EQ(before.out, r.out);
}

TEST(CliWitness, Examples) {
  Result r = run({"witness", "bd2", data("3chain.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "p = {w1, w2}"));
  EXPECT_TRUE(contains(r.out, "q = {w2}"));
  EXPECT_TRUE(contains(r.out, "refuted at: w0"));

  r = run({"witness", "gl", data("fork.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "p = {w1}"));
  EXPECT_TRUE(contains(r.out, "q = {w2}"));

  EXPECT_EQ(run({"witness", "gl", data("3chain.json")}).code, 3);
  EXPECT_EQ(run({"witness", "bd3", data("3chain.json")}).code, 2);
}

TEST(CliEnumerate, Examples) {
  EXPECT_TRUE(contains(run({"enumerate", "--n", "2"}).out, "frames: 3 "));
  EXPECT_TRUE(contains(run({"enumerate", "--n", "3"}).out, "frames: 19 "));
  Result r = run({"enumerate", "--n", "1", "--stats", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("frames"), 1);
  EXPECT_EQ(j.at("histogram")[0].at("depth"), 1);
  EXPECT_EQ(j.at("histogram")[0].at("width"), 1);
  EXPECT_EQ(run({"enumerate", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"enumerate"}).code, 2);
}

TEST(CliEval, ForcedWorlds) {
  Result r = run({"eval", data("fork_model.json"), "p|q"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "w0: not forced"));
  EXPECT_EQ(run({"eval", data("fork_model.json"), "p|q", "--world", "1"}).code, 0);
  EXPECT_EQ(run({"eval", data("fork_model.json"), "p", "--world", "7"}).code, 2);
  EXPECT_EQ(run({"eval", data("downset_model.json"), "p"}).code, 2);
}

TEST(CliExportDot, ModelLabels) {
  Result r = run({"export-dot", data("fork_model.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "w1 [label=\"w1\\np /q\"]")) << r.out;
  EXPECT_TRUE(contains(r.out, "w0 -> w2;"));
}

TEST(CliCollapse, NoViolations) {
  Result r = run({"collapse", "--max-n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "violations:              0"));
}

TEST(Cli, UnknownFlagsAndCommandsAreInputErrors) {
  EXPECT_EQ(run({"enumerate", "--n", "2", "--wat"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "parse", "p"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"correspond", "(p->q)|(q->p)", "lin", "--max-n", "4",
                                         "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
}  // namespace kripkelab
