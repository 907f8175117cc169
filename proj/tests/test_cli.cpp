#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "dprig/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = dprig::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json parsed(const CliResult& result) { return json::parse(result.out); }

std::string without_spaces(std::string text) {
  text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
  return text;
}

}  // namespace

TEST_CASE("usage errors exit 2 and name the offending flag") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);

  const CliResult range = run({"lct", "--degree", "15"});
  CHECK(range.code == 2);
  CHECK(range.err.find("--degree") != std::string::npos);

  CHECK(run({"lct"}).code == 2);  // neither --degree nor --germ
  CHECK(run({"lct", "--degree", "3", "--germ", "x"}).code == 2);
  CHECK(run({"curves", "--degree", "3"}).code == 2);  // missing --h-degree
  CHECK(run({"curves", "--degree", "3", "--h-degree", "4"}).code == 2);

  const CliResult format = run({"lattice", "--degree", "3", "--format",
                                "yaml"});
  CHECK(format.code == 2);
  CHECK(format.err.find("--format") != std::string::npos);

  CHECK(run({"lattice", "--degree", "3", "--bogus"}).code == 2);
  CHECK(run({"decomps", "--degree", "5"}).code == 2);
  CHECK(run({"classify", "--degree", "0"}).code == 2);

  // parameter flags are capped at [1, 10^6]
  CHECK(run({"verify-example", "--name", "x", "--n", "0"}).code == 2);
  CHECK(run({"verify-example", "--name", "x", "--n", "1000001"}).code == 2);
  CHECK(run({"verify-example", "--name", "x", "--m", "-3"}).code == 2);
}

TEST_CASE("help exits 0") {
  const CliResult top = run({"--help"});
  CHECK(top.code == 0);
  CHECK(top.out.find("dprig") != std::string::npos);

  const CliResult sub = run({"rigidity", "--help"});
  CHECK(sub.code == 0);
  CHECK((sub.out + sub.err).find("--tau-x") != std::string::npos);
}

TEST_CASE("domain errors exit 1 with a diagnostic") {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{
           {"lattice", "--degree", "7", "--variant", "quadric"},
           {"verify-example", "--name", "corti_kollar_deg3"},
           {"verify-example", "--name", "corti_kollar_deg3", "--n", "1",
            "--m", "2"},
           {"verify-example", "--name", "corti_kollar_deg3", "--m", "1"},
           {"verify-example", "--name", "unknown_example"},
           {"rigidity", "--tau-x", "abc", "--tau-y", "1/2"},
           {"rigidity", "--tau-x", "5/3", "--tau-y", "1/2"},
           {"lct", "--germ", "x + 1"},
       }) {
    const CliResult result = run(args);
    CHECK(result.code == 1);
    CHECK(result.err.find("error:") == 0);
    CHECK(result.out.empty());
  }
}

TEST_CASE("curves reports the documented class counts") {
  const CliResult cubic = run(
      {"curves", "--degree", "3", "--h-degree", "1", "--format", "json"});
  REQUIRE(cubic.code == 0);
  const json doc = parsed(cubic);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["command"] == "curves");
  CHECK(doc["count"] == 27);
  REQUIRE(doc["classes"].size() == 27);
  for (const json& entry : doc["classes"]) {
    CHECK(entry["h_degree"] == 1);
    CHECK(entry["self_intersection"] == -1);
    CHECK(entry["genus"] == 0);
    CHECK(entry["coefficients"].size() == 7);
  }

  const json lines4 = parsed(
      run({"curves", "--degree", "4", "--h-degree", "1", "--format",
           "json"}));
  CHECK(lines4["count"] == 16);
  const json conics4 = parsed(
      run({"curves", "--degree", "4", "--h-degree", "2", "--format",
           "json"}));
  CHECK(conics4["count"] == 10);
  const json quadric = parsed(
      run({"curves", "--degree", "8", "--variant", "quadric", "--h-degree",
           "1", "--format", "json"}));
  CHECK(quadric["count"] == 2);
}

TEST_CASE("classify renders the degeneration catalog") {
  const CliResult text = run({"classify", "--degree", "4"});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("4 entries") != std::string::npos);

  const json doc = parsed(run({"classify", "--degree", "4", "--format",
                               "json"}));
  CHECK(doc["count"] == 4);
  REQUIRE(doc["entries"].size() == 4);
  // ordered by descending component count; the irreducible cusp comes last
  CHECK(doc["entries"][3]["label"] == "cusp");
  CHECK(doc["entries"][3]["degrees"] == json::array({4}));
  for (const json& entry : doc["entries"]) {
    CHECK(entry["verdict"] == "worse_than_lc");
  }

  const json degree1 = parsed(run({"classify", "--degree", "1", "--format",
                                   "json"}));
  CHECK(degree1["count"] == 1);
  CHECK(degree1["entries"][0]["label"] == "cusp");
}

TEST_CASE("verify-example emits the documented report") {
  const json corti = parsed(run({"verify-example", "--name",
                                 "corti_kollar_deg3", "--n", "1", "--format",
                                 "json"}));
  CHECK(corti["schema_version"] == 1);
  CHECK(corti["name"] == "corti_kollar_deg3");
  CHECK(corti["parameters"] == json{{"n", 1}});
  CHECK(corti["map_valid"] == true);
  CHECK(corti["t_power"] == 6);
  CHECK(corti["transformed_divisor"] == "z - t^3*w");
  CHECK(corti["fiber_configuration"] == "three concurrent lines");
  CHECK(corti["local_lct"] == "5/6");
  CHECK(corti["is_lc"] == false);

  const json cusp = parsed(run({"verify-example", "--name", "cE6_deg3",
                                "--m", "1", "--format", "json"}));
  CHECK(cusp["local_lct"] == "1");
  CHECK(cusp["is_lc"] == true);
  CHECK(cusp["t_power"] == 6);

  const json weighted = parsed(run({"verify-example", "--name",
                                    "grinenko_deg2", "--format", "json"}));
  CHECK(weighted["t_power"] == 2);
  CHECK(weighted["parameters"] == json::object());
  CHECK(weighted["transformed_divisor"].is_null());
  CHECK(weighted["fiber_configuration"].is_null());
  CHECK(weighted["local_lct"].is_null());
  CHECK(weighted["is_lc"].is_null());
}

TEST_CASE("rigidity reports both directions of the criterion") {
  const json rigid = parsed(run({"rigidity", "--tau-x", "2/3", "--tau-y",
                                 "2/3", "--format", "json"}));
  CHECK(rigid["condition_holds"] == true);
  CHECK(rigid["rigid"] == true);
  CHECK(rigid["witness"].is_null());

  const json loose = parsed(run({"rigidity", "--tau-x", "1/2", "--tau-y",
                                 "1/2", "--format", "json"}));
  CHECK(loose["condition_holds"] == false);
  CHECK(loose["rigid"] == false);
  REQUIRE(loose["witness"].is_object());
  CHECK(loose["witness"]["a"] == "1/2");
  CHECK(loose["witness"]["b"] == 1);
  CHECK(loose["witness"]["m"] == 1);
  CHECK(loose["witness"]["verified"] == true);
}

TEST_CASE("lct serves global bounds and germ thresholds") {
  CHECK(parsed(run({"lct", "--degree", "1", "--format", "json"}))["threshold"]
        == "5/6");
  CHECK(parsed(run({"lct", "--degree", "8", "--variant", "quadric",
                    "--format", "json"}))["threshold"] == "1/2");

  const json germ = parsed(run({"lct", "--germ", "x^3 + y^2", "--format",
                                "json"}));
  CHECK(germ["mode"] == "germ");
  CHECK(germ["germ"] == "x^3 + y^2");
  CHECK(germ["threshold"] == "5/6");

  CHECK(parsed(run({"lct", "--germ", "x^3 + y^3 + 2*t^6", "--format",
                    "json"}))["threshold"] == "5/6");
  CHECK(parsed(run({"lct", "--germ", "y^2*z + z^2 + t^12", "--format",
                    "json"}))["threshold"] == "5/6");
}

TEST_CASE("decomps reports the census with exclusion statuses") {
  const json doc = parsed(run({"decomps", "--degree", "4", "--format",
                               "json"}));
  CHECK(doc["counts"]["candidates"] == 11);
  CHECK(doc["counts"]["index_excluded"] == 4);
  CHECK(doc["counts"]["intersection_excluded"] == 3);
  CHECK(doc["counts"]["realizable"] == 4);
  REQUIRE(doc["shapes"].size() == 11);
  int realizable = 0;
  int index_excluded = 0;
  int intersection_excluded = 0;
  for (const json& entry : doc["shapes"]) {
    const std::string status = entry["status"];
    if (status == "realizable") {
      ++realizable;
      CHECK(entry["configurations"].is_number());
      CHECK(entry["configurations"] >= 1);
    } else {
      CHECK(entry["configurations"].is_null());
      if (status == "index-excluded") ++index_excluded;
      if (status == "intersection-excluded") ++intersection_excluded;
    }
  }
  CHECK(realizable == 4);
  CHECK(index_excluded == 4);
  CHECK(intersection_excluded == 3);

  const json degree1 = parsed(run({"decomps", "--degree", "1", "--format",
                                   "json"}));
  CHECK(degree1["counts"]["candidates"] == 1);
  CHECK(degree1["counts"]["realizable"] == 1);
}

TEST_CASE("lattice summaries") {
  const json cubic = parsed(run({"lattice", "--degree", "3", "--format",
                                 "json"}));
  CHECK(cubic["rank"] == 7);
  CHECK(cubic["fano_index"] == 1);
  CHECK(cubic["canonical_self_intersection"] == 3);
  CHECK(cubic["canonical_class"] ==
        json::array({-3, 1, 1, 1, 1, 1, 1}));

  const json quadric = parsed(run({"lattice", "--degree", "8", "--variant",
                                   "quadric", "--format", "json"}));
  CHECK(quadric["rank"] == 2);
  CHECK(quadric["fano_index"] == 2);
  CHECK(quadric["canonical_self_intersection"] == 8);
}

TEST_CASE("emit-tables is byte-identical and carries the golden rows") {
  const CliResult first = run({"emit-tables"});
  const CliResult second = run({"emit-tables"});
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == dprig::emit_tables());

  const json wrapped = parsed(run({"emit-tables", "--format", "json"}));
  CHECK(wrapped["markdown"] == first.out);

  // structure: a title and three sections
  CHECK(first.out.rfind("# ", 0) == 0);
  std::size_t sections = 0;
  for (std::size_t at = first.out.find("\n## "); at != std::string::npos;
       at = first.out.find("\n## ", at + 1)) {
    ++sections;
  }
  CHECK(sections == 3);

  // golden rows, compared with spacing removed so column widths stay free
  const std::string flat = without_spaces(first.out);
  CHECK(flat.find("|1|blowup|5/6|") != std::string::npos);
  CHECK(flat.find("|2|blowup|3/4|") != std::string::npos);
  CHECK(flat.find("|3|blowup|2/3|") != std::string::npos);
  CHECK(flat.find("|5|blowup|1/2|") != std::string::npos);
  CHECK(flat.find("|8|quadric|1/2|") != std::string::npos);
  CHECK(flat.find("|9|blowup|1/3|") != std::string::npos);
  CHECK(flat.find("|4|11|4|3|4|") != std::string::npos);
  CHECK(flat.find("|3|6|2|1|3|") != std::string::npos);
  CHECK(first.out.find("three concurrent lines") != std::string::npos);
  CHECK(first.out.find("cuspidal rational curve") != std::string::npos);
  CHECK(first.out.find("a line and a conic intersecting tangentially") !=
        std::string::npos);
}

TEST_CASE("text and json renderings agree on numeric content") {
  {
    const json doc = parsed(run({"lct", "--degree", "3", "--format",
                                 "json"}));
    const CliResult text = run({"lct", "--degree", "3"});
    CHECK(text.out.find(doc["threshold"].get<std::string>()) !=
          std::string::npos);
  }
  {
    const json doc = parsed(run({"curves", "--degree", "4", "--h-degree",
                                 "2", "--format", "json"}));
    const CliResult text = run({"curves", "--degree", "4", "--h-degree",
                                "2"});
    const std::string lead =
        std::to_string(doc["count"].get<int>()) + " curve classes";
    CHECK(text.out.rfind(lead, 0) == 0);
  }
  {
    const json doc = parsed(run({"decomps", "--degree", "3", "--format",
                                 "json"}));
    const CliResult text = run({"decomps", "--degree", "3"});
    std::ostringstream totals;
    totals << "totals: " << doc["counts"]["candidates"].get<int>()
           << " candidates, " << doc["counts"]["index_excluded"].get<int>()
           << " index-excluded, "
           << doc["counts"]["intersection_excluded"].get<int>()
           << " intersection-excluded, "
           << doc["counts"]["realizable"].get<int>() << " realizable";
    CHECK(text.out.find(totals.str()) != std::string::npos);
  }
  {
    const json doc = parsed(run({"verify-example", "--name",
                                 "corti_kollar_deg3", "--n", "2", "--format",
                                 "json"}));
    const CliResult text = run({"verify-example", "--name",
                                "corti_kollar_deg3", "--n", "2"});
    CHECK(doc["t_power"] == 12);
    CHECK(text.out.find("t-power 12") != std::string::npos);
    CHECK(text.out.find("local lct: " +
                        doc["local_lct"].get<std::string>()) !=
          std::string::npos);
    CHECK(doc["local_lct"] == "3/4");
    CHECK(text.out.find("log canonical: no") != std::string::npos);
  }
  {
    const json doc = parsed(run({"rigidity", "--tau-x", "1/2", "--tau-y",
                                 "1/2", "--format", "json"}));
    const CliResult text = run({"rigidity", "--tau-x", "1/2", "--tau-y",
                                "1/2"});
    CHECK(text.out.find("a = " + doc["witness"]["a"].get<std::string>()) !=
          std::string::npos);
    CHECK(text.out.find("e = " + doc["witness"]["e"].get<std::string>()) !=
          std::string::npos);
  }
  {
    const json doc = parsed(run({"lattice", "--degree", "5", "--format",
                                 "json"}));
    const CliResult text = run({"lattice", "--degree", "5"});
    CHECK(text.out.find("rank: " +
                        std::to_string(doc["rank"].get<int>())) !=
          std::string::npos);
  }
}

TEST_CASE("json documents round-trip and carry the schema header") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> calls =
      {
          {"lattice", {"lattice", "--degree", "2", "--format", "json"}},
          {"curves",
           {"curves", "--degree", "2", "--h-degree", "1", "--format",
            "json"}},
          {"decomps", {"decomps", "--degree", "2", "--format", "json"}},
          {"classify", {"classify", "--degree", "2", "--format", "json"}},
          {"lct", {"lct", "--degree", "2", "--format", "json"}},
          {"rigidity",
           {"rigidity", "--tau-x", "3/4", "--tau-y", "3/4", "--format",
            "json"}},
          {"verify-example",
           {"verify-example", "--name", "grinenko_deg1", "--format",
            "json"}},
          {"emit-tables", {"emit-tables", "--format", "json"}},
      };
  for (const auto& [command, args] : calls) {
    const CliResult result = run(args);
    REQUIRE(result.code == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["command"] == command);
    CHECK(doc.dump(2) + "\n" == result.out);
  }
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::vector<std::vector<std::string>> calls = {
      {"curves", "--degree", "3", "--h-degree", "1"},
      {"curves", "--degree", "3", "--h-degree", "1", "--format", "json"},
      {"decomps", "--degree", "4"},
      {"classify", "--degree", "4", "--format", "json"},
      {"rigidity", "--tau-x", "2/3", "--tau-y", "5/6"},
      {"verify-example", "--name", "line_conic_deg3", "--m", "3"},
  };
  for (const auto& args : calls) {
    const CliResult first = run(args);
    const CliResult second = run(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}
