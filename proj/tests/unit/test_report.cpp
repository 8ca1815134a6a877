#include <doctest.h>

#include <json.hpp>

#include "cgeom/report.hpp"
#include "fixtures.hpp"

using namespace cgeom;

namespace {

CheckReport sample() {
  CheckReport r;
  r.engine_version = "cgeom test";
  r.manifold_name = "nk_family";
  r.convention = -1;
  r.reconciling_convention = "+1";
  CheckEntry pass{"h-2.4"};
  CheckEntry fail{"lemma-3.2", Status::Fail, Witness{{"e2", "e2"}, "-2*a^2 + 2"}};
  fail.add("k", "-a^2 + 1");
  r.entries = {pass, fail, CheckEntry::not_applicable("poisson", "r* != 0"),
               CheckEntry::error("grad-soliton-1.2", "Hess not symmetric", Witness{{"e2", "e3"}, "-2"})};
  return r;
}

}  // namespace

TEST_CASE("status strings") {
  for (Status s : {Status::Pass, Status::Fail, Status::NotApplicable, Status::Error})
    CHECK(status_from_string(to_string(s)) == s);
  CHECK(to_string(Status::NotApplicable) == "not-applicable");
  CHECK_FALSE(status_from_string("maybe").has_value());
}

TEST_CASE("ok ignores not-applicable entries") {
  CheckReport r = sample();
  CHECK_FALSE(r.ok());
  r.entries = {r.entries[0], r.entries[2]};
  CHECK(r.ok());
  CHECK(r.find("poisson") != nullptr);
  CHECK(r.find("lemma-3.2") == nullptr);
}

TEST_CASE("json layout") {
  const auto j = nlohmann::json::parse(to_json(sample()));
  CHECK(j["version"] == "cgeom test");
  CHECK(j["manifold"] == "nk_family");
  CHECK(j["convention"] == "-1");
  CHECK(j["reconciling_convention"] == "+1");
  REQUIRE(j["checks"].size() == 4);
  CHECK(j["checks"][0] == nlohmann::json{{"id", "h-2.4"}, {"status", "pass"}});
  CHECK(j["checks"][1]["witness"]["at"] == nlohmann::json{"e2", "e2"});
  CHECK(j["checks"][1]["witness"]["residual"] == "-2*a^2 + 2");
  CHECK(j["checks"][1]["derived"]["k"] == "-a^2 + 1");
  CHECK(j["checks"][2]["status"] == "not-applicable");
  CHECK(j["checks"][3]["status"] == "error");
}

TEST_CASE("json round-trip and byte stability") {
  const CheckReport r = sample();
  const std::string text = to_json(r);
  CHECK(report_from_json(text) == r);
  CHECK(to_json(report_from_json(text)) == text);
}

TEST_CASE("text rendering") {
  const std::string text = to_text(sample());
  CHECK(text.find("FAIL  lemma-3.2") != std::string::npos);
  CHECK(text.find("N/A   poisson  (r* != 0)") != std::string::npos);
  CHECK(text.find("at (e2, e2)  residual: -2*a^2 + 2") != std::string::npos);
}

TEST_CASE("format_vector") {
  const ManifoldDocument doc = cgeom::testing::family();
  const Scalar a = Scalar::parameter();
  const Vector v{Scalar(0), Scalar(-2) * a, Scalar(1)};
  CHECK(format_vector(v, doc.manifold) == "-2*a e2 + e3");
  CHECK(format_vector(zero_vector(3), doc.manifold) == "0");
  CHECK(parse_vector(format_vector(v, doc.manifold), doc.manifold) == v);
}

TEST_CASE("residual probe keeps the first witness and counts failures") {
  const ManifoldDocument doc = cgeom::testing::family();
  ResidualProbe probe(doc.manifold, "demo");
  probe.expect_zero({0}, Scalar(0));
  probe.expect_zero({1}, Scalar(3));
  probe.expect_zero({2}, Scalar(4));
  CHECK(probe.tested() == 3);
  CHECK(probe.failures() == 2);
  const CheckEntry e = probe.finish();
  CHECK(e.status == Status::Fail);
  CHECK(e.witness == Witness{{"e2"}, "3"});
  CHECK(*e.derived_value("nonzero_residuals") == "2/3");
}
