#include <filesystem>
#include <fstream>
#include <thread>

#include "doctest.h"
#include "etnc/errors.hpp"
#include "etnc/io.hpp"
#include "httplib.h"

using namespace etnc;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = ETNC_FIXTURES_DIR;

std::vector<fs::path> problem_fixtures() {
  std::vector<fs::path> out;
  for (const auto& e : fs::recursive_directory_iterator(kFixtures)) {
    const auto name = e.path().filename().string();
    if (e.is_regular_file() && e.path().extension() == ".json" && name.find(".truth.") == std::string::npos &&
        e.path().parent_path().filename() != "invalid")
      out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Json read_json(const fs::path& p) {
  std::ifstream in(p);
  return Json::parse(in);
}

std::string schema_message(const Json& j) {
  try {
    parse_problem(j);
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";
}

Status status_of(const VerificationReport& r, const std::string& name) {
  const CheckResult* c = r.find(name);
  REQUIRE_MESSAGE(c != nullptr, name);
  return c->status;
}

}  // namespace

TEST_CASE("normalize is idempotent on every fixture") {
  const auto files = problem_fixtures();
  REQUIRE(files.size() >= 9);
  for (const auto& f : files) {
    CAPTURE(f.string());
    const Json once = to_json(load_problem(f.string()));
    const Json twice = to_json(parse_problem(once));
    CHECK(once.dump() == twice.dump());
  }
}

TEST_CASE("schema errors name the offending field") {
  const Json base = read_json(kFixtures / "79a1_q29_p7.json");

  CHECK(schema_message(read_json(kFixtures / "invalid" / "empty_analytic.json")).find("analytic") != std::string::npos);
  CHECK(schema_message(read_json(kFixtures / "invalid" / "numeric_decimal.json"))
            .find("analytic.ratios.values[3][0]") != std::string::npos);

  Json j = base;
  j["header"]["p"] = 2;
  CHECK(schema_message(j).find("header.p") != std::string::npos);

  j = base;
  j["analytic"]["ratios"]["labels"] = {0, 1, 3, 2, 6, 4, 4};
  CHECK(schema_message(j).find("analytic.ratios.labels") != std::string::npos);

  j = base;
  j["header"].erase("label");
  CHECK(schema_message(j).find("header.label") != std::string::npos);

  j = base;
  j["format"] = "etnc-problem/9";
  CHECK_FALSE(schema_message(j).empty());
}

TEST_CASE("missing curve data surfaces as a schema error") {
  Json j = read_json(kFixtures / "79a1_q29_p7.json");
  j["curve"]["residue_point_counts"] = Json::object();
  const ProblemFile pf = parse_problem(j);
  CHECK_THROWS_AS(run_all(pf, RunConfig{}), SchemaError);
}

TEST_CASE("paper fixtures end to end") {
  const VerificationReport r79 = run_all(load_problem((kFixtures / "79a1_q29_p7.json").string()), RunConfig{});
  CHECK(r79.exit_code() == 0);
  for (const char* name : {"hypotheses", "rationality", "max_order", "bsd_p", "zpg", "cor1.iv", "consistency"})
    CHECK_MESSAGE(status_of(r79, name) != Status::Fail, name);

  const VerificationReport r389 = run_all(load_problem((kFixtures / "389a1_q37_p3n2.json").string()), RunConfig{});
  CHECK(r389.exit_code() == 0);
  CHECK(status_of(r389, "rationality") == Status::Pass);
  CHECK(status_of(r389, "max_order") == Status::Skipped);
  CHECK(status_of(r389, "cor1.i") == Status::Pass);
  CHECK(r389.find("mazur_tate")->summary ==
        "L = -sigma + 2*sigma^2 - sigma^3 + 2*sigma^5 - 2*sigma^6 - 2*sigma^7 + 2*sigma^8");
}

TEST_CASE("synthetic fixtures recover the planted unit") {
  for (const auto& f : problem_fixtures()) {
    if (f.parent_path().filename() != "synthetic") continue;
    CAPTURE(f.string());
    fs::path truth_path = f;
    truth_path.replace_extension(".truth.json");
    const Json truth = read_json(truth_path);
    const std::string variant = truth["variant"];
    const ProblemFile pf = load_problem(f.string());
    const VerificationReport r = run_all(pf, RunConfig{});

    if (variant == "ok") {
      CHECK(r.exit_code() == 0);
      std::vector<Rational> u;
      for (const auto& c : truth["unit"]) u.emplace_back(c.get<long>());
      const GroupRingElt planted(CyclicGroup(pf.p, pf.n), u);
      CHECK(r.find("zpg")->details["element"] == planted.to_string());
    } else if (variant == "zpg_fail") {
      CHECK(status_of(r, "max_order") == Status::Pass);
      CHECK(status_of(r, "bsd_p") == Status::Pass);
      CHECK(status_of(r, "zpg") == Status::Fail);
      CHECK(r.exit_code() == 1);
    } else if (variant == "max_fail") {
      CHECK(status_of(r, "rationality") == Status::Pass);
      CHECK(status_of(r, "max_order") == Status::Fail);
      CHECK(status_of(r, "zpg") == Status::Blocked);
      CHECK(r.exit_code() == 1);
    } else if (variant == "degenerate") {
      CHECK(status_of(r, "regulator") == Status::Fail);
      CHECK(status_of(r, "rationality") == Status::Blocked);
      CHECK(r.exit_code() == 1);
    } else {
      FAIL("unknown variant " << variant);
    }
  }
}

TEST_CASE("truncated and untruncated leading terms agree") {
  const auto a = run_all(load_problem((kFixtures / "synthetic" / "synth_p3n2_m110.json").string()), RunConfig{});
  const auto b =
      run_all(load_problem((kFixtures / "synthetic" / "synth_p3n2_m110_untruncated.json").string()), RunConfig{});
  CHECK(a.find("zpg")->details["element"] == b.find("zpg")->details["element"]);
  CHECK(a.find("mazur_tate")->summary == b.find("mazur_tate")->summary);
}

TEST_CASE("reports do not depend on the thread count") {
  for (const char* name : {"79a1_q29_p7.json", "389a1_q37_p3n2.json", "synthetic/synth_p3n2_m101.json"}) {
    const ProblemFile pf = load_problem((kFixtures / name).string());
    RunConfig one, four;
    four.threads = 4;
    CHECK(run_all(pf, one).to_json().dump() == run_all(pf, four).to_json().dump());
  }
}

TEST_CASE("check selection") {
  const ProblemFile pf = load_problem((kFixtures / "79a1_q29_p7.json").string());
  RunConfig cfg;
  cfg.checks = {"max"};
  const VerificationReport r = run_all(pf, cfg);
  CHECK(status_of(r, "max_order") == Status::Pass);
  CHECK(status_of(r, "rationality") == Status::Pass);
  CHECK(status_of(r, "zpg") == Status::Skipped);
  CHECK(status_of(r, "bsd_p") == Status::Skipped);
}

TEST_CASE("tolerance override can force a failure") {
  // 389a1 is printed to 6 digits; demanding 1e-12 leaves the residual far outside both bands.
  const ProblemFile pf = load_problem((kFixtures / "389a1_q37_p3n2.json").string());
  RunConfig cfg;
  cfg.tol = Rational(1, 1000000000000);
  const VerificationReport r = run_all(pf, cfg);
  CHECK(status_of(r, "rationality") == Status::Fail);
  CHECK(status_of(r, "mazur_tate") == Status::Blocked);
  CHECK(r.exit_code() == 1);
}

TEST_CASE("fetch_metadata against a local server") {
  httplib::Server server;
  server.Get("/api/curves/79a1", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"label":"79a1","dimension":1,"conductor":79,"torsion_order":1,"dual_torsion_order":1,
                        "tamagawa":{"79":1},"residue_point_counts":{"29":36}})",
                    "application/json");
  });
  server.Get("/api/curves/garbage", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("not json", "text/plain");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  const std::string endpoint = "http://127.0.0.1:" + std::to_string(port) + "/api";

  const CurveData c = fetch_metadata("79a1", endpoint);
  CHECK(c.conductor == 79);
  CHECK(c.residue_point_counts.at(29) == 36);

  Json j = read_json(kFixtures / "79a1_q29_p7.json");
  j["curve"].erase("tamagawa");
  j["curve"].erase("residue_point_counts");
  ProblemFile pf = parse_problem(j);
  CHECK_THROWS_AS(run_all(pf, RunConfig{}), SchemaError);
  merge_missing(pf.curve, fetch_metadata(pf.curve.label, endpoint));
  CHECK(run_all(pf, RunConfig{}).exit_code() == 0);

  CHECK_THROWS_AS(fetch_metadata("garbage", endpoint), NetworkError);
  CHECK_THROWS_AS(fetch_metadata("11a1", endpoint), NetworkError);
  CHECK_THROWS_AS(fetch_metadata("79a1", "ftp-less-endpoint"), NetworkError);

  server.stop();
  worker.join();
}
