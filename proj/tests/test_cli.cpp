#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "elhgeo/canonical.hpp"
#include "elhgeo/faithfulness.hpp"
#include "elhgeo/parser.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;
using namespace elhgeo;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "elhgeo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("elhgeo-cli-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("entail") {
  TempDir dir;
  const auto onto = dir.file("ex.elh", serialize(testing::o_ex()));
  Result r = run({"entail", "--ontology", onto, "--axiom", "ClassAssertion(B a)"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\n  \"entailed\": true\n}\n");
  r = run({"entail", "--ontology", onto, "--axiom", "ClassAssertion(A b)"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["entailed"] == false);
}

TEST_CASE("modelcheck on the running example's embedding") {
  TempDir dir;
  const auto onto = dir.file("ex.elh", serialize(testing::o_ex()));
  const auto emb = dir.path("emb.json");
  REQUIRE(run({"embed", "--ontology", onto, "--convex", "--out", emb}).code == 0);
  CHECK(nlohmann::json::parse(slurp(emb))["dimension"] == 16);

  Result r = run({"--deterministic", "modelcheck", "--embedding", emb, "--axiom",
                  "SubClassOf(B A)"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == false);
  CHECK(j["counterexample"].size() == 16);
  CHECK_FALSE(j.contains("elapsed_us"));

  r = run({"modelcheck", "--embedding", "-", "--axiom", "SubClassOf(A B)", "--linear-scan"},
          slurp(emb));
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).contains("elapsed_us"));
}

TEST_CASE("faithfulness") {
  TempDir dir;
  const auto onto = dir.file("ex.elh", serialize(testing::o_ex()));
  Result r = run({"faithfulness", "--ontology", onto, "--deterministic"});
  CHECK(r.code == 0);
  const std::string digest = ontology_digest(testing::o_ex());
  CHECK(r.out == "{\n  \"ontology\": \"" + digest +
                     "\",\n  \"universe\": 41,\n  \"checked\": 41,\n  \"counts\": {\n"
                     "    \"IQ\": 20,\n    \"CI\": 20,\n    \"RI\": 1\n  },\n"
                     "  \"mismatches\": []\n}\n");

  const auto report = dir.path("report.json");
  r = run({"faithfulness", "--ontology", onto, "--report", report, "--limit", "5",
           "--seed", "9", "--jobs", "2", "--nonconvex"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const auto j = nlohmann::json::parse(slurp(report));
  CHECK(j["checked"] == 5);
  CHECK(j.contains("elapsed_ms"));

  r = run({"faithfulness", "--ontology", onto, "--include-top", "--deterministic"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).contains("top_mismatches"));
  CHECK(run({"faithfulness", "--ontology", onto, "--jobs", "0"}).code == 2);
}

TEST_CASE("normalize and canonical") {
  Result r = run({"normalize", "--ontology", "-"}, "SubClassOf(A Some(r And(B C)))\n");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "SubClassOf(A Some(r N_0))\n"
        "SubClassOf(And(B C) N_0)\n"
        "SubClassOf(N_0 B)\n"
        "SubClassOf(N_0 C)\n");

  r = run({"canonical", "--ontology", "-"}, serialize(testing::o_ex()));
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["domain"] == 12);
  CHECK(r.out == to_json(build_canonical(testing::o_ex()).interpretation).dump(2) + "\n");

  // Unnormalized input is normalized on the way in.
  r = run({"entail", "--ontology", "-", "--axiom", "SubClassOf(A B)"},
          "SubClassOf(A And(B C))\n");
  CHECK(r.code == 0);
}

TEST_CASE("embedding an interpretation") {
  TempDir dir;
  const auto interp = dir.file("i.json", to_json(testing::i_ex()).dump());
  const Result r = run({"embed", "--interpretation", interp});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dimension"] == 6);
  CHECK(j["individuals"]["a"] == std::vector<int>{1, 0, 1, 1, 0, 1});
  CHECK(j["individuals"]["b"] == std::vector<int>{0, 1, 0, 1, 0, 0});
  CHECK(j["convex"] == false);
  CHECK(run({"embed", "--interpretation", interp, "--ontology", interp}).code == 2);
  CHECK(run({"embed"}).code == 2);
}

TEST_CASE("outputs are reproducible") {
  TempDir dir;
  const auto onto = dir.file("ex.elh", serialize(testing::o_ex()));
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--deterministic", "faithfulness", "--ontology", onto},
           {"canonical", "--ontology", onto},
           {"embed", "--ontology", onto, "--convex"},
           {"normalize", "--ontology", onto}}) {
    const Result a = run(args);
    const Result b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("errors and exit codes") {
  TempDir dir;
  Result r = run({"entail", "--ontology", "-", "--axiom", "SubClassOf(A B)"},
                 "SubClassOf(A And(B\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("syntax error") != std::string::npos);
  CHECK(run({"entail", "--ontology", dir.path("missing.elh"), "--axiom",
             "SubClassOf(A B)"}).code == 2);
  CHECK(run({"entail", "--ontology", "-", "--axiom", "SubClassOf(A B)"},
            "SubClassOf(A Bottom)\n").code == 2);
  CHECK(run({"entail", "--ontology", "-", "--axiom", "SubClassOf(A And(B C))"},
            "SubClassOf(A B)\n").code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"entail", "--ontology", "-"}).code == 2);
  const auto bad = dir.file("bad.json", "{not json");
  CHECK(run({"modelcheck", "--embedding", bad, "--axiom", "SubClassOf(A B)"}).code == 2);
  CHECK(run({"embed", "--interpretation", "-", "--out", "-"}, "[1, 2]").code == 2);
}

TEST_CASE("help lists every flag") {
  const Result top = run({"--help"});
  CHECK(top.code == 0);
  for (const char* s : {"--deterministic", "normalize", "entail", "canonical", "embed",
                        "modelcheck", "faithfulness"})
    CHECK(top.out.find(s) != std::string::npos);
  const std::vector<std::pair<std::string, std::vector<std::string>>> flags = {
      {"normalize", {"--ontology", "--out"}},
      {"entail", {"--ontology", "--axiom"}},
      {"canonical", {"--ontology", "--out"}},
      {"embed", {"--ontology", "--interpretation", "--convex", "--out"}},
      {"modelcheck", {"--embedding", "--axiom", "--linear-scan"}},
      {"faithfulness",
       {"--ontology", "--report", "--seed", "--limit", "--jobs", "--include-top",
        "--nonconvex"}}};
  for (const auto& [cmd, list] : flags) {
    const Result r = run({cmd, "--help"});
    CHECK(r.code == 0);
    for (const auto& f : list) {
      CAPTURE(cmd);
      CAPTURE(f);
      CHECK(r.out.find(f) != std::string::npos);
    }
  }
}
