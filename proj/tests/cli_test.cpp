#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "dirackit/cli.hpp"

using namespace dirackit;
using nlohmann::json;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    RunResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Writes the job text to a file under a per-process scratch directory and
// returns the path.
std::string job_file(const std::string& name, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() /
                   ("dirackit_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    fs::path path = dir / name;
    std::ofstream stream(path);
    stream << text;
    return path.string();
}

const char* kSl2rTrio = R"({
  "pair": {"family_tag": "equal_rank", "root_family": "C", "rank": 1},
  "params": [
    {"name": "ds+", "kind": "real", "lambda": [2], "cartan_k": 0},
    {"name": "ds-", "kind": "real", "lambda": [-2], "cartan_k": 0,
     "positive_system": "[-1]"},
    {"name": "ps", "kind": "real", "lambda": [2], "cartan_k": 1}
  ]
})";

}  // namespace

TEST_CASE("classify tabulates each family") {
    std::string complex_job = job_file("complex.json", R"({
      "pair": {"family_tag": "complex", "root_family": "A", "rank": 2}
    })");
    RunResult r = run({"classify", "--input", complex_job});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["command"] == "classify");
    CHECK(doc["denominator"] == 2);
    CHECK(doc["family"] == "complex");
    REQUIRE(doc["rows"].size() == 2);
    for (const json& row : doc["rows"]) {
        CHECK(row["h_plus"] == 2);
        CHECK(row["h_minus"] == 2);
        CHECK(row["class_size"] == 1);
    }

    std::string gl_job = job_file("gl4.json", R"({
      "pair": {"family_tag": "gl_real", "m": 4}
    })");
    json gl = json::parse(run({"classify", "--input", gl_job}).out);
    REQUIRE(gl["rows"].size() == 4);
    std::vector<int> strata;
    for (const json& row : gl["rows"]) strata.push_back(row["untransformed_pairs"]);
    CHECK(strata == std::vector<int>{2, 2, 1, 0});

    std::string real_job = job_file("sl2r_classify.json", R"({
      "pair": {"family_tag": "equal_rank", "root_family": "C", "rank": 1}
    })");
    json real = json::parse(run({"classify", "--input", real_job}).out);
    REQUIRE(real["rows"].size() == 2);
    CHECK(real["rows"][0]["cartan_k"] == 0);
    CHECK(real["rows"][1]["a_dim"] == 1);
    CHECK(real["rows"][1]["cayley_roots"] == json::array({json::array({4})}));
    CHECK(real["rows"][1]["theta_h"] == "[-1]");

    std::string exotic = job_file("e8.json", R"({
      "pair": {"family_tag": "complex", "root_family": "E", "rank": 8}
    })");
    CHECK(run({"classify", "--input", exotic}).code == 2);
}

TEST_CASE("index reports modules with their diagnostics") {
    std::string path = job_file("sl2r_index.json", kSl2rTrio);
    RunResult r = run({"index", "--input", path});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["command"] == "index");
    CHECK(doc["mode"] == "ordinary");
    REQUIRE(doc["results"].size() == 3);

    const json& dsp = doc["results"][0];
    CHECK(dsp["name"] == "ds+");
    CHECK(dsp["index"] == json::array({{{"weight", {6}}, {"multiplicity", 1}}}));
    CHECK(dsp["infinitesimal_character"] == json::array({6}));
    CHECK(dsp["vogan_ok"] == true);
    CHECK(dsp["d2_all_zero"] == true);
    CHECK(dsp["case_tag"] == "case1");
    CHECK(dsp["eta"] == -1);

    const json& dsm = doc["results"][1];
    CHECK(dsm["index"] == json::array({{{"weight", {-6}}, {"multiplicity", 1}}}));

    // The principal series: zero index, case tag inferred as case3, and no
    // eta since its b is not theta-stable.
    const json& ps = doc["results"][2];
    CHECK(ps["index"] == json::array());
    CHECK(ps["case_tag"] == "case3");
    CHECK_FALSE(ps.contains("eta"));

    // A nontrivial twist on a complex group kills the index.
    std::string complex_twist = job_file("complex_twist.json", R"({
      "pair": {"family_tag": "complex", "root_family": "C", "rank": 1},
      "mode": "twisted",
      "params": [
        {"name": "s", "kind": "complex", "lambda": [1], "w": "[-1]"},
        {"name": "e", "kind": "complex", "lambda": [1]}
      ]
    })");
    json twisted = json::parse(run({"index", "--input", complex_twist}).out);
    CHECK(twisted["results"][0]["index"] == json::array());
    CHECK(twisted["results"][1]["index"] ==
          json::array({{{"weight", {2}}, {"multiplicity", 1}}}));
}

TEST_CASE("ep emits the pairing matrix") {
    std::string path = job_file("sl2r_ep.json", kSl2rTrio);
    json doc = json::parse(run({"ep", "--input", path}).out);
    CHECK(doc["labels"] == json::array({"ds+", "ds-", "ps"}));
    CHECK(doc["matrix"] == json::parse("[[1,0,0],[0,1,0],[0,0,0]]"));
    for (const json& row : doc["mismatched"]) {
        for (const json& cell : row) CHECK(cell == false);
    }
    CHECK_FALSE(doc.contains("twisted_constant"));

    // One parameter gives a 1x1 matrix.
    std::string single = job_file("single_ep.json", R"({
      "pair": {"family_tag": "equal_rank", "root_family": "C", "rank": 1},
      "params": [{"name": "ds+", "kind": "real", "lambda": [2], "cartan_k": 0}]
    })");
    json one = json::parse(run({"ep", "--input", single}).out);
    CHECK(one["matrix"] == json::parse("[[1]]"));

    // Twisted pairings on a complex group, with the sign datum flipped on
    // the second copy.
    std::string twisted = job_file("complex_ep.json", R"({
      "pair": {"family_tag": "complex", "root_family": "C", "rank": 1},
      "mode": "twisted",
      "params": [
        {"name": "x", "kind": "complex", "lambda": [1]},
        {"name": "y", "kind": "complex", "lambda": [1], "epsilon": -1}
      ]
    })");
    json tw = json::parse(run({"ep", "--input", twisted}).out);
    CHECK(tw["matrix"] == json::parse("[[2,-2],[-2,2]]"));
    CHECK(tw["twisted_constant"] == 2);

    // A virtual copy of a parameter pairs exactly like the original.
    std::string with_virtual = job_file("virtual_ep.json", R"({
      "pair": {"family_tag": "equal_rank", "root_family": "C", "rank": 1},
      "params": [
        {"name": "a", "kind": "real", "lambda": [2], "cartan_k": 0},
        {"name": "b", "kind": "virtual", "terms": [[1, "a"]]}
      ]
    })");
    json copy = json::parse(run({"ep", "--input", with_virtual}).out);
    CHECK(copy["matrix"] == json::parse("[[1,1],[1,1]]"));

    // Parameters at different infinitesimal characters pair to zero and are
    // marked, not refused.
    std::string mixed = job_file("mixed_ep.json", R"({
      "pair": {"family_tag": "equal_rank", "root_family": "C", "rank": 1},
      "params": [
        {"name": "a", "kind": "real", "lambda": [2], "cartan_k": 0},
        {"name": "b", "kind": "real", "lambda": [4], "cartan_k": 0}
      ]
    })");
    json mm = json::parse(run({"ep", "--input", mixed}).out);
    CHECK(mm["matrix"] == json::parse("[[1,0],[0,1]]"));
    CHECK(mm["mismatched"] == json::parse("[[false,true],[true,false]]"));
    std::string table = run({"ep", "--input", mixed, "--table"}).out;
    CHECK(table.find("*") != std::string::npos);
    CHECK(table.find("infinitesimal characters differ") != std::string::npos);

    std::string empty = job_file("empty_ep.json", R"({
      "pair": {"family_tag": "equal_rank", "root_family": "C", "rank": 1}
    })");
    CHECK(run({"ep", "--input", empty}).code == 2);
}

TEST_CASE("character reports the elliptic numerator and denominator") {
    std::string path = job_file("character.json", R"({
      "pair": {"family_tag": "equal_rank", "root_family": "C", "rank": 1},
      "params": [{"name": "ds0", "kind": "real", "lambda": [0], "cartan_k": 0}]
    })");
    json doc = json::parse(run({"character", "--input", path}).out);
    CHECK(doc["command"] == "character");
    CHECK(doc["name"] == "ds0");
    CHECK(doc["character"]["numerator"] ==
          json::array({{{"weight", {2}}, {"coefficient", 1}}}));
    CHECK(doc["character"]["denominator"] ==
          json::parse(R"([{"coefficient":1,"weight":[2]},
                          {"coefficient":-1,"weight":[-2]}])"));
    CHECK_FALSE(doc.contains("value"));

    // At the quarter rotation the value is exactly 1/2.
    RunResult angled = run({"character", "--input", path, "--angles",
                            "1.5707963267948966"});
    REQUIRE(angled.code == 0);
    json with_value = json::parse(angled.out);
    CHECK(with_value["value"]["re"].get<double>() == doctest::Approx(0.5));
    CHECK(with_value["value"]["im"].get<double>() ==
          doctest::Approx(0.0).epsilon(1e-12));

    // The identity is a singular point of the elliptic set.
    RunResult singular = run({"character", "--input", path, "--angles", "0"});
    CHECK(singular.code == 3);
    CHECK(singular.err.find("error:") != std::string::npos);

    CHECK(run({"character", "--input", path, "--angles", "0.3,oops"}).code == 2);
}

TEST_CASE("selfcheck runs its oracle suites") {
    RunResult r = run({"selfcheck"});
    CHECK(r.code == 0);
    CHECK(r.out.find("selfcheck: all suites passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("output bytes are deterministic") {
    std::string path = job_file("det.json", kSl2rTrio);
    for (const std::string& sub : {"index", "ep"}) {
        RunResult a = run({sub, "--input", path});
        RunResult b = run({sub, "--input", path});
        CHECK(a.out == b.out);
        RunResult ta = run({sub, "--input", path, "--table"});
        RunResult tb = run({sub, "--input", path, "--table"});
        CHECK(ta.out == tb.out);
        CHECK(ta.out != a.out);
    }
}

TEST_CASE("mode overrides replace the document mode") {
    // The document asks for twisted mode; forcing ordinary mode on a complex
    // pair is refused, since the ordinary index needs equal rank.
    std::string path = job_file("override.json", R"({
      "pair": {"family_tag": "complex", "root_family": "C", "rank": 1},
      "mode": "twisted",
      "params": [{"name": "x", "kind": "complex", "lambda": [1]}]
    })");
    CHECK(run({"index", "--input", path}).code == 0);
    RunResult forced = run({"index", "--input", path, "--mode", "ordinary"});
    CHECK(forced.code == 2);
    CHECK(forced.err.find("equal-rank") != std::string::npos);

    // The reverse override turns an ordinary document twisted.
    std::string sl2r = job_file("override2.json", kSl2rTrio);
    json doc = json::parse(run({"ep", "--input", sl2r, "--mode", "twisted"}).out);
    CHECK(doc["mode"] == "twisted");
    // dim s = 2 is even, so the twisted constant is 1 here.
    CHECK(doc["twisted_constant"] == 1);

    CHECK(run({"index", "--input", path, "--mode", "sideways"}).code != 0);
}

TEST_CASE("invalid jobs exit with the validation code") {
    std::vector<std::pair<const char*, const char*>> bad_jobs = {
        {"bad_case.json", R"({
          "pair": {"family_tag": "equal_rank", "root_family": "C", "rank": 1},
          "params": [{"name": "x", "kind": "real", "lambda": [2],
                      "cartan_k": 0, "case_tag": "case9"}]
        })"},
        {"dup_names.json", R"({
          "pair": {"family_tag": "equal_rank", "root_family": "C", "rank": 1},
          "params": [
            {"name": "x", "kind": "real", "lambda": [2], "cartan_k": 0},
            {"name": "x", "kind": "real", "lambda": [2], "cartan_k": 0}
          ]
        })"},
        {"unknown_ref.json", R"({
          "pair": {"family_tag": "equal_rank", "root_family": "C", "rank": 1},
          "params": [{"name": "v", "kind": "virtual", "terms": [[1, "ghost"]]}]
        })"},
        {"bad_cartan.json", R"({
          "pair": {"family_tag": "equal_rank", "root_family": "C", "rank": 1},
          "params": [{"name": "x", "kind": "real", "lambda": [2], "cartan_k": 5}]
        })"},
        {"bad_mode.json", R"({
          "pair": {"family_tag": "equal_rank", "root_family": "C", "rank": 1},
          "mode": "diagonal"
        })"},
        {"wrong_kind.json", R"({
          "pair": {"family_tag": "equal_rank", "root_family": "C", "rank": 1},
          "params": [{"name": "x", "kind": "complex", "lambda": [1]}]
        })"},
        {"not_json.json", "{ this is not json"},
    };
    for (const auto& [name, text] : bad_jobs) {
        std::string path = job_file(name, text);
        RunResult r = run({"classify", "--input", path});
        CHECK(r.code == 2);
        CHECK_FALSE(r.err.empty());
    }

    CHECK(run({"classify", "--input", "/nonexistent/job.json"}).code == 2);
    CHECK(run({"classify"}).code == 2);
    CHECK(run({"index"}).code == 2);
}

TEST_CASE("command line surface") {
    RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("classify") != std::string::npos);
    CHECK(help.out.find("selfcheck") != std::string::npos);

    CHECK(run({}).code != 0);
    CHECK(run({"frobnicate"}).code != 0);
}
