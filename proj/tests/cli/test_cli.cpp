#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string corpus(const std::string& file) {
  return (std::filesystem::path(CGEOM_MANIFOLD_DIR) / file).string();
}

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(CGEOM_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("check exits 1 when an identity fails") {
  const Run r = run("check " + corpus("nk_family.geom"));
  CHECK(r.code == 1);
  CHECK(contains(r.out, "FAIL  lemma-3.4"));
  CHECK(contains(r.out, "PASS  lemma-3.2"));
  CHECK(contains(r.out, "reconciling convention: +1"));
}

TEST_CASE("check exits 0 on a passing subset") {
  const Run r = run("check " + corpus("nk_family.geom") + " --identity lemma-3.2 --identity h-sq-2.6");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "k = -a^2 + 1"));
}

TEST_CASE("parameter substitution from the command line") {
  CHECK(run("check " + corpus("nk_family.geom") + " --param a=1").code == 0);
  CHECK(run("check " + corpus("nk_family.geom") + " --param a=1/2 --identity lemma-3.2").code == 0);
  CHECK(run("check " + corpus("nk_family.geom") + " --param b=1").code == 2);
}

TEST_CASE("json output is byte-stable and well formed") {
  const std::string args = "check " + corpus("nk_family.geom") + " --json";
  const Run first = run(args), second = run(args);
  CHECK(first.out == second.out);
  const auto j = nlohmann::json::parse(first.out);
  CHECK(j["manifold"] == "nk_family");
  CHECK(j["convention"] == "+1");
  CHECK(j["checks"].size() == 39);
}

TEST_CASE("curvature sign from flag and environment") {
  const std::string base = "check " + corpus("nk_family.geom") + " --identity lemma-3.2 --json";
  const Run flag = run(base + " --curvature-sign -1");
  CHECK(flag.code == 1);
  CHECK(nlohmann::json::parse(flag.out)["convention"] == "-1");
  CHECK(run(base + " --curvature-sign=-1").out == flag.out);
  const Run env = run(base, "GEOM_CURVATURE_SIGN=-1");
  CHECK(env.out == flag.out);
  CHECK(run(base + " --curvature-sign +1", "GEOM_CURVATURE_SIGN=-1").code == 0);
  CHECK(run(base + " --curvature-sign 2").code == 2);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("check /nonexistent.geom").code == 2);
  CHECK(run("check " + corpus("nk_family.geom") + " --identity no-such-id").code == 2);
  const std::string bad = write_temp("cgeom_jacobi.geom", R"([manifold]
name = broken
dim = 3
[frame]
names = e1, e2, e3
metric = identity
[brackets]
e1, e2 = e1
e1, e3 = e3
e2, e3 = e2
)");
  const Run r = run("check " + bad);
  CHECK(r.code == 2);
  CHECK(contains(r.out, "Jacobi identity fails"));
}

TEST_CASE("compute prints tensors") {
  const std::string f = corpus("nk_family.geom");
  CHECK(run("compute " + f + " --tensor star-scalar").out == "r* = 2*a^2 - 2\n");
  CHECK(run("compute " + f + " --tensor scalar").out == "scalar = -2*a^2 + 2\n");
  const Run star = run("compute " + f + " --tensor star-ricci");
  CHECK(contains(star.out, "S*[e2,e2] = a^2 - 1"));
  CHECK(contains(run("compute " + f + " --tensor h").out, "h[e3,e3] = -a"));
  CHECK(contains(run("compute " + f + " --tensor connection").out, "Gamma[e3,e2,e1] = -a - 1"));
  CHECK(contains(run("compute " + f + " --tensor dEta").out, "dEta[e2,e3] = -1"));
  CHECK(run("compute " + f + " --tensor bogus").code == 2);
  CHECK(run("compute " + corpus("abelian.geom") + " --tensor h").code == 2);
}

TEST_CASE("soliton verb") {
  const Run killing = run("soliton " + corpus("nk_flat_killing.geom"));
  CHECK(killing.code == 0);
  CHECK(contains(killing.out, "lambda = 1/2*p + 1/3"));

  CHECK(run("soliton " + corpus("nk_flat_killing.geom") + " --lambda \"p/2 + 1/3\"").code == 0);
  CHECK(run("soliton " + corpus("nk_flat_killing.geom") + " --lambda \"p/2 + 1\"").code == 1);
  CHECK(run("soliton " + corpus("nk_flat_killing.geom") + " --lambda p --solve").code == 2);

  CHECK(run("soliton " + corpus("nk_family.geom")).code == 2);
  CHECK(run("soliton " + corpus("nk_family.geom") + " --param a=1 --field e2").code == 0);

  const Run trace = run("soliton " + corpus("nk_family_soliton.geom") + " --param a=1 --trace-only --json");
  const auto j = nlohmann::json::parse(trace.out);
  CHECK(j["checks"][0]["id"] == "soliton-1.1");
  CHECK(j["checks"][0]["derived"]["lambda"] == "1/2*p + 1/3");
  CHECK(j["checks"][0]["status"] == "fail");
}

TEST_CASE("gradient flag with a fixed pressure") {
  const Run r = run("soliton " + corpus("nk_family_soliton.geom") + " --param a=1 --param p=0 --gradient");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "lambda_for_poisson = 1/3"));
}

TEST_CASE("version flag") {
  const Run r = run("--version");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "cgeom "));
}
