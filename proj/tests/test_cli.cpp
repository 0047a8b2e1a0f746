#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "cli.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(TSG_DATA_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = tsg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir() {
  const auto d = std::filesystem::temp_directory_path() / "tsg_cli_test";
  std::filesystem::create_directories(d);
  return d;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto p = temp_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

// Every boolean "pass" anywhere in the result tree.
void collect_passes(const json& j, std::vector<bool>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "pass" && it.value().is_boolean()) out.push_back(it.value().get<bool>());
      collect_passes(it.value(), out);
    }
  } else if (j.is_array()) {
    for (const auto& x : j) collect_passes(x, out);
  }
}

const std::vector<std::vector<std::string>>& all_commands() {
  static const std::vector<std::vector<std::string>> cmds{
      {"algebra", "validate", "--algebra", data("heisenberg3.toml")},
      {"algebra", "cohomology", "--algebra", "builtin:so(3)", "--degree", "2"},
      {"qf", "search", "--algebra", data("so3_plus_so3.toml"), "--seed", "7"},
      {"qf", "search", "--algebra", "builtin:h3_plus_R", "--seed", "2"},
      {"qf", "validate", "--algebra", "builtin:h3_plus_R", "--form", data("h3_plus_R_beta.toml")},
      {"algebroid", "check", "--algebroid", data("so3_action.toml")},
      {"algebroid", "check", "--algebroid", data("tangent_r2.toml"), "--form", data("tangent_r2_form.toml"),
       "--samples", "12", "--seed", "4"},
      {"groupoid", "check", "--realization", data("aff1_action.toml"), "--form", data("beta.toml"), "--seed", "3",
       "--samples", "200"},
      {"groupoid", "check", "--realization", data("pair_r2.toml"), "--form", data("beta.toml"), "--seed", "3",
       "--samples", "50"},
      {"groupoid", "check", "--realization", data("mgm_r2_aff1.toml"), "--form", data("beta_mgm.toml"), "--seed",
       "3", "--samples", "50"},
      {"slgb", "check", "--spec", data("slgb_shear.toml")},
      {"slgb", "check", "--spec", data("slgb_shear_bad_cocycle.toml")},
      {"slgb", "check", "--spec", data("slgb_scaling.toml")},
      {"slgb", "check", "--spec", data("slgb_trivial.toml")},
  };
  return cmds;
}

}  // namespace

TEST_CASE("report envelope") {
  const Run r = run({"algebra", "validate", "--algebra", data("heisenberg3.toml")});
  CHECK(r.code == 0);
  const json j = r.report();
  CHECK(j["schema"] == "tsg-report/v1");
  CHECK(j["tool_version"] == "0.1.0");
  CHECK(j["command"] == "algebra validate");
  CHECK(j["pass"] == true);
  CHECK(j["exit_code"] == 0);
  CHECK(j["inputs"]["algebra"]["sha256"].get<std::string>().size() == 64);
  CHECK(j["result"]["jacobi"]["pass"] == true);
}

TEST_CASE("documented command outcomes") {
  const Run so = run({"qf", "search", "--algebra", data("so3_plus_so3.toml"), "--seed", "7"});
  CHECK(so.code == 1);
  CHECK(so.report()["result"]["certificate"] == "GenericPfaffianZero");
  CHECK(so.report()["result"]["status"] == "None");

  const Run aff = run({"qf", "search", "--algebra", "builtin:aff(1)"});
  CHECK(aff.code == 0);
  CHECK(aff.report()["result"]["status"] == "Frobenius");

  const Run odd = run({"qf", "search", "--algebra", "builtin:heisenberg3"});
  CHECK(odd.code == 1);
  CHECK(odd.report()["result"]["certificate"] == "OddDimension");

  const Run coh = run({"algebra", "cohomology", "--algebra", "builtin:heisenberg3"});
  CHECK(coh.code == 0);
  CHECK(coh.report()["result"]["betti"] == json::array({1, 2, 2, 1}));

  const Run g = run({"groupoid", "check", "--realization", data("aff1_action.toml"), "--form", data("beta.toml"),
                     "--seed", "3", "--samples", "200"});
  CHECK(g.code == 0);
  const json gr = g.report()["result"];
  CHECK(gr["left_invariance_defect"]["value"].get<double>() < 1e-10);
  CHECK(gr["left_invariance_defect"]["pass"] == true);

  const Run alg = run({"algebroid", "check", "--algebroid", data("tangent_r2.toml"), "--form",
                       data("tangent_r2_form.toml")});
  CHECK(alg.code == 0);
  CHECK(alg.report()["result"]["quasi_frobenius"]["pfaffian"] == "x1^2 + 1");

  CHECK(run({"slgb", "check", "--spec", data("slgb_shear.toml")}).code == 0);
  const Run bad = run({"slgb", "check", "--spec", data("slgb_shear_bad_cocycle.toml")});
  CHECK(bad.code == 1);
  CHECK(bad.report()["result"]["cocycle"]["condition"] == "cocycle");
  const Run sc = run({"slgb", "check", "--spec", data("slgb_scaling.toml")});
  CHECK(sc.code == 1);
  CHECK(sc.report()["result"]["transitions"]["condition"] == "automorphism:form");
}

TEST_CASE("exit code is 0 iff every verdict passes") {
  for (const auto& args : all_commands()) {
    CAPTURE(args[0] + " " + args[1] + " " + args[3]);
    const Run r = run(args);
    REQUIRE(r.code != 2);
    const json j = r.report();
    std::vector<bool> passes;
    collect_passes(j["result"], passes);
    bool all = true;
    for (bool p : passes) all = all && p;
    CHECK((r.code == 0) == all);
    CHECK(j["pass"] == (r.code == 0));
    CHECK(j["exit_code"] == r.code);
  }
}

TEST_CASE("identical runs give byte-identical reports") {
  for (const auto& args : all_commands()) {
    CAPTURE(args[0] + " " + args[1] + " " + args[3]);
    const Run a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("--out writes the same report as standard output") {
  const auto path = (temp_dir() / "report.json").string();
  std::vector<std::string> args{"slgb", "check", "--spec", data("slgb_shear.toml")};
  const Run direct = run(args);
  args.push_back("--out");
  args.push_back(path);
  const Run to_file = run(args);
  CHECK(to_file.code == direct.code);
  CHECK(to_file.out.empty());
  std::ifstream f(path, std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(text == direct.out);
  std::filesystem::remove(path);
}

TEST_CASE("a different seed changes the seed field only where sampling matters") {
  const Run a = run({"qf", "search", "--algebra", "builtin:abelian(4)", "--seed", "1"});
  const Run b = run({"qf", "search", "--algebra", "builtin:abelian(4)", "--seed", "1"});
  CHECK(a.out == b.out);
  CHECK(a.report()["seed"] == 1);
}

TEST_CASE("input errors exit 2") {
  const Run missing = run({"algebra", "validate", "--algebra", "/nonexistent.toml"});
  CHECK(missing.code == 2);
  CHECK(missing.report()["error"]["kind"] == "MalformedInput");
  CHECK(missing.report()["pass"] == false);

  const Run unknown = run({"algebra", "validate", "--algebra", "builtin:not_an_algebra"});
  CHECK(unknown.code == 2);
  CHECK(unknown.report()["error"]["kind"] == "UnknownName");

  const std::string broken = write_temp("broken.toml", "dim = 2\nbrackets = [[1, 2, 2, \"1\"\n");
  CHECK(run({"algebra", "validate", "--algebra", broken}).code == 2);

  const Run mismatch = run({"groupoid", "check", "--realization", data("aff1_action.toml"), "--form",
                            data("beta_mgm.toml")});
  CHECK(mismatch.code == 2);

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"algebra", "validate"}).code == 2);
  CHECK(run({"qf", "validate", "--algebra", "builtin:aff(1)"}).code == 2);
  CHECK(run({"groupoid", "check", "--realization", data("aff1_action.toml"), "--form", data("beta.toml"),
             "--samples", "lots"})
            .code == 2);
  const Run usage = run({"algebra", "validate", "--bogus"});
  CHECK(usage.code == 2);
  CHECK(usage.err.find("algebra") != std::string::npos);
}

TEST_CASE("domain failures exit 1") {
  const std::string jacobi = write_temp("bad_jacobi.toml", "dim = 3\nbrackets = [[1, 2, 3, \"1\"], [1, 3, 1, \"1\"]]\n");
  const Run r = run({"algebra", "validate", "--algebra", jacobi});
  CHECK(r.code == 1);
  CHECK(r.report()["result"]["jacobi"]["condition"] == "jacobi");

  const std::string not_action =
      write_temp("not_action.toml", "algebra = \"builtin:aff(1)\"\nchart_dim = 1\nfields = [[\"x1\"], [\"1\"]]\n");
  const Run na = run({"algebroid", "check", "--algebroid", not_action});
  CHECK(na.code == 1);
  CHECK(na.report()["error"]["kind"] == "NotAnAction");

  const Run qv = run({"qf", "validate", "--algebra", "builtin:h3_plus_R", "--form", data("beta_mgm.toml")});
  CHECK(qv.code == 1);
  CHECK(qv.report()["result"]["verdict"]["condition"] == "cocycle");
  std::filesystem::remove_all(temp_dir());
}

TEST_CASE("help and version") {
  const Run h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("slgb") != std::string::npos);
  CHECK(h.out.find("builtin:") != std::string::npos);
  const Run v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find("0.1.0") != std::string::npos);
}
