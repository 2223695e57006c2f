#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dihedra/cli.hpp"

using dihedra::cli::dispatch;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

bool one_line(const std::string& s) { return !s.empty() && s.find('\n') == s.size() - 1; }

}  // namespace

TEST_CASE("classify") {
  const auto r = run({"classify", "2", "3", "6"});
  CHECK(r.code == dihedra::cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j["C1"] == true);
  CHECK(j["C2"] == true);
  CHECK(j["solution"].is_array());
  const auto f = run({"--json", "classify", "2", "2", "2"});
  CHECK(f.code == 0);
  CHECK(one_line(f.out));
  const auto k = json::parse(f.out);
  CHECK(k["C"] == false);
  CHECK(k["solution"].is_null());
}

TEST_CASE("validation errors exit 1 with one line") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"classify", "2", "x", "6"},
                                                                {"classify", "2", "3"},
                                                                {"classify", "1", "3", "6"},
                                                                {"identity", "1/3", "1/0", "1/2"},
                                                                {"identity", "1/3", "a/b", "1/2"},
                                                                {"count", "2", "2", "2"},
                                                                {"involutions", "2", "3", "5"},
                                                                {"witnesses", "2", "3", "6"},
                                                                {"repr", "2"},
                                                                {"order", "6", "1", "--vec", "1,z"},
                                                                {"order", "6", "1", "--vec", "1,2,3"},
                                                                {"sweep"},
                                                                {"sweep", "--in", "/nonexistent/file"},
                                                                {"frobnicate"},
                                                                {}}) {
    CAPTURE(args.empty() ? std::string("<none>") : args[0]);
    const auto r = run(args);
    CHECK(r.code == dihedra::cli::kUsage);
    CHECK(r.out.empty());
    CHECK(one_line(r.err));
    CHECK(r.err.rfind("error: ", 0) == 0);
  }
  CHECK(run({"witnesses", "2", "3", "6"}).err.find("q1=2, r1=1") != std::string::npos);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sweep") != std::string::npos);
}

TEST_CASE("count, snf, involutions, identity, order") {
  const auto c = json::parse(run({"count", "4", "4", "2", "--oracle"}).out);
  CHECK(c["count_formula"] == 2);
  CHECK(c["count_simplified"] == 4);
  CHECK(c["count_oracle"] == 2);
  CHECK(json::parse(run({"snf", "4", "4", "2"}).out)["invariant_factors"] == json::array({2, 4}));
  const auto inv = json::parse(run({"involutions", "2", "3", "6"}).out);
  CHECK(inv["involutions"][1]["text"] == "s g^4");
  CHECK(inv["rotations_generate"] == true);
  const auto id = json::parse(run({"identity", "2/6", "1/3", "7/3"}).out);
  CHECK(id["angles"] == json::array({"1/3", "1/3", "1/3"}));
  CHECK(id["agree"] == true);
  const auto o = json::parse(run({"order", "12", "4", "--vec", "1,-2,3,5"}).out);
  CHECK(o["order"] == 3);
  CHECK(json::parse(run({"order", "12", "0"}).out)["order"] == "infinite");
  CHECK(json::parse(run({"order", "12", "5", "--refl", "--vec", "0,0,0,0"}).out)["order"] == 2);
}

TEST_CASE("repr text and json") {
  const auto t = run({"repr", "6", "--inventory"});
  CHECK(t.code == 0);
  CHECK(t.out.find("R1xR2") != std::string::npos);
  CHECK(t.out.find("[  0 -1 ]") != std::string::npos);
  const auto j = run({"--json", "repr", "6", "--inventory"});
  CHECK(one_line(j.out));
  const auto rec = json::parse(j.out);
  CHECK(rec["inventory_count"] == 6);
  CHECK(rec["checks"]["charpoly_is_Phi_n"] == true);
}

TEST_CASE("witnesses and verify") {
  const auto w = json::parse(run({"witnesses", "6", "15", "10"}).out);
  CHECK(w["all_hold"] == true);
  CHECK(w["certificates"].size() > 10);
  const auto v = json::parse(run({"verify", "2", "3", "6"}).out);
  CHECK(v["verdict"] == "obstructed");
  CHECK(v["obstruction"]["rechecked"] == true);
  CHECK(v["index"] == 4);
}

TEST_CASE("sweep reports and exit codes") {
  const auto r = run({"--json", "sweep", "--max", "20", "--jobs", "3"});
  // The simplified count formula disagrees with the oracle inside this box.
  CHECK(r.code == dihedra::cli::kDiscrepancy);
  const auto report = json::parse(r.out);
  CHECK(report["command"] == "sweep");
  CHECK(report["outputs"]["triples"] == 19 * 19 * 19);
  CHECK(report["outputs"]["equivalence_mismatches"] == 0);
  CHECK(report["outputs"]["count_mismatches"] == 0);
  CHECK(report["outputs"]["simplified_formula_mismatches"].get<int>() > 0);
  CHECK(report["discrepancy_flags"].size() == report["outputs"]["simplified_formula_mismatches"]);
  CHECK(report["timing"]["seconds"].is_number());

  // The box 2..3 has no discrepancy of any kind.
  const auto small = run({"sweep", "--max", "3"});
  CHECK(small.code == dihedra::cli::kOk);
}

TEST_CASE("records are byte-stable and independent of the worker count") {
  const auto a = lines(run({"--json", "sweep", "--max", "12", "--jobs", "1", "--records"}).out);
  const auto b = lines(run({"--json", "sweep", "--max", "12", "--jobs", "5", "--records"}).out);
  REQUIRE(a.size() == 11 * 11 * 11 + 1);
  REQUIRE(b.size() == a.size());
  for (std::size_t i = 0; i + 1 < a.size(); ++i) CHECK(a[i] == b[i]);
  CHECK(json::parse(a.front())["triple"] == json::array({2, 2, 2}));
  CHECK(json::parse(a.back())["command"] == "sweep");
  const auto c = lines(run({"--json", "classify", "6", "15", "10"}).out);
  const auto d = lines(run({"--json", "classify", "6", "15", "10"}).out);
  CHECK(c == d);
}

TEST_CASE("batch input from a file") {
  const std::string path = "dihedra_cli_batch_test.txt";
  {
    std::ofstream f(path);
    f << "# triples\n2 3 6\n\n4 4 2  # comment\n2 2 2\n";
  }
  const auto r = run({"--json", "sweep", "--in", path, "--records"});
  CHECK(r.code == dihedra::cli::kDiscrepancy);  // (4,4,2) trips the simplified formula
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(json::parse(ls[0])["triple"] == json::array({2, 3, 6}));
  CHECK(json::parse(ls[1])["discrepancy_flags"][0]["kind"] == "simplified_formula_mismatch");
  CHECK(json::parse(ls[2])["C"] == false);
  CHECK(json::parse(ls[3])["outputs"]["condition_c"] == 2);
  {
    std::ofstream f(path);
    f << "2 3\n";
  }
  const auto bad = run({"sweep", "--in", path});
  CHECK(bad.code == dihedra::cli::kUsage);
  CHECK(bad.err.find("line 1") != std::string::npos);
  std::remove(path.c_str());
}
