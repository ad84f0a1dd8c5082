#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "crtube/io.hpp"

using namespace crtube;
using cli::ExitCode;
using cli::RunConfig;

namespace {

std::string data(const std::string& f) { return std::string(CRTUBE_DATA_DIR) + "/" + f; }

struct Outcome {
  ExitCode code;
  std::string out;
  std::string err;
  io::Json json() const { return io::Json::parse(out); }
};

Outcome run(RunConfig cfg) {
  std::ostringstream out, err;
  ExitCode c = cli::run(cfg, out, err);
  return {c, out.str(), err.str()};
}

RunConfig command(const std::string& cmd, std::vector<std::string> inputs, bool json = true) {
  RunConfig c;
  c.command = cmd;
  c.inputs = std::move(inputs);
  c.json = json;
  return c;
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST(Cli, AnalyzeLightCone) {
  Outcome o = run(command("analyze", {data("lightcone.json")}));
  ASSERT_EQ(o.code, ExitCode::ok) << o.err;
  io::Json j = o.json();
  EXPECT_EQ(j["schema"], io::kSchemaVersion);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["result"]["nondegeneracy"]["order"], 2);
  EXPECT_EQ(j["result"]["minimality"]["verdict"], "minimal");
  EXPECT_EQ(j["result"]["conical"], true);
}

TEST(Cli, ConfigDefaultsRecorded) {
  io::Json c = run(command("analyze", {data("lightcone.json")})).json()["config"];
  EXPECT_EQ(c["backend"], "auto");
  EXPECT_DOUBLE_EQ(c["tol"].get<double>(), 1e-8);
  EXPECT_EQ(c["max_degree"], 6);
  EXPECT_EQ(c["seed"], 42);
  EXPECT_TRUE(c.contains("max_k"));
}

TEST(Cli, CompareSeparatesBySigma) {
  Outcome o = run(command("compare", {data("ey1.json"), data("ex_m2.json")}));
  ASSERT_EQ(o.code, ExitCode::ok) << o.err;
  io::Json cmp = o.json()["result"]["comparison"];
  EXPECT_EQ(cmp["verdict"], "distinct");
  auto reasons = cmp["reasons"].get<std::vector<std::string>>();
  EXPECT_NE(std::find(reasons.begin(), reasons.end(), "sigma"), reasons.end());
  Outcome text = run(command("compare", {data("ey1.json"), data("ex_m2.json")}, false));
  EXPECT_NE(text.out.find("sigma"), std::string::npos);
}

TEST(Cli, HolLightConeAndBackends) {
  Outcome o = run(command("hol", {data("lightcone_levelset.json")}));
  ASSERT_EQ(o.code, ExitCode::ok) << o.err;
  EXPECT_EQ(o.json()["result"]["hol"]["graded_dims"], io::Json::parse("[3,4,3]"));
  RunConfig bad = command("hol", {data("lightcone_levelset.json")});
  bad.backend = Backend::exact_jet;
  Outcome r = run(bad);
  EXPECT_EQ(r.code, ExitCode::input_error);
  EXPECT_EQ(r.json()["status"], "refused");
}

TEST(Cli, ByteIdenticalReports) {
  for (const char* f : {"lightcone.json", "ey1.json", "ez.json"}) {
    Outcome a = run(command("hol", {data(f)}));
    Outcome b = run(command("hol", {data(f)}));
    EXPECT_EQ(a.code, ExitCode::ok);
    EXPECT_EQ(a.out, b.out) << f;
  }
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run(command("analyze", {data("missing.json")})).code, ExitCode::input_error);
  std::string broken = temp_file("crtube_broken.json", "{ \"kind\": \"orbit\", ");
  EXPECT_EQ(run(command("analyze", {broken})).code, ExitCode::input_error);
  std::string schema = temp_file("crtube_schema.json", R"({"kind": "orbit", "n": 3, "generators": []})");
  Outcome o = run(command("analyze", {schema}));
  EXPECT_EQ(o.code, ExitCode::input_error);
  EXPECT_EQ(o.json()["status"], "input_error");
  EXPECT_FALSE(o.json()["error"].get<std::string>().empty());
  // Refusal: the graded solver does not apply to a non-conical tube.
  Outcome ev = run(command("hol", {data("ev.json")}));
  EXPECT_EQ(ev.code, ExitCode::input_error);
  EXPECT_NE(ev.json()["error"].get<std::string>().find("hol_solver"), std::string::npos);
}

TEST(Cli, Endocone) {
  RunConfig c = command("endocone", {});
  c.phi_path = data("phi_ey1.json");
  c.d = 1;
  c.a = "1,0,1";
  Outcome o = run(c);
  ASSERT_EQ(o.code, ExitCode::ok) << o.err;
  io::Json r = o.json()["result"];
  EXPECT_EQ(r["cyclic"], true);
  EXPECT_EQ(r["du_condition"], true);
  EXPECT_EQ(r["predicted_hol"]["total"], 5);
  EXPECT_EQ(r["cr_dimension"], 2);
  c.a = "1,0";
  EXPECT_EQ(run(c).code, ExitCode::input_error);
}

TEST(Cli, CatalogRunAllPasses) {
  RunConfig c = command("catalog", {});
  c.subcommand = "run-all";
  Outcome o = run(c);
  EXPECT_EQ(o.code, ExitCode::ok) << o.out;
  io::Json j = o.json();
  EXPECT_EQ(j["status"], "ok");
}

TEST(Cli, CatalogRunWithParams) {
  RunConfig c = command("catalog", {"EB"});
  c.subcommand = "run";
  c.p = 2;
  c.q = 1;
  c.alpha = "3";
  Outcome o = run(c);
  EXPECT_EQ(o.code, ExitCode::ok) << o.out;
  RunConfig bad = command("catalog", {"EY(-1)"});
  bad.subcommand = "run";
  EXPECT_EQ(run(bad).code, ExitCode::input_error);
}
