#include "gtmono/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace gtmono;
using gtmono::io::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string> &args, const std::string &stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  const int code = cli::run_command(args, out, err, in);
  return {code, out.str(), err.str()};
}

const std::filesystem::path corpus_dir{GTMONO_CORPUS_DIR};

} // namespace

TEST(Cli, BasisHarmonicSpecExample) {
  const Outcome r = run({"basis", "--space", "harmonic", "-m", "3", "-k", "1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  ASSERT_EQ(doc["elements"].size(), 3u);
  EXPECT_EQ(doc["elements"][0]["mu"], "1|1");
  EXPECT_EQ(doc["elements"][1]["mu"], "1|-1");
  EXPECT_EQ(doc["elements"][2]["mu"], "1|0");
  EXPECT_EQ(doc["elements"][2]["poly"].dump(),
            R"({"m":3,"terms":[{"coeff":{"blades":[{"idx":[],"im":"0/1","re":"1/1"}],"m":3},"exp":[0,0,1]}]})");
}

TEST(Cli, BasisTextAndSpinor) {
  const Outcome text = run({"basis", "--space", "clifford", "-m", "3", "-k", "1", "--text"});
  ASSERT_EQ(text.code, 0);
  EXPECT_EQ(text.out.substr(0, text.out.find('\n')), "1|1\t(1/1)*x1 + (-1/1)*e12*x2");
  const Outcome spinor = run({"basis", "--space", "spinor", "-m", "4", "-k", "1", "--chirality", "-"});
  ASSERT_EQ(spinor.code, 0);
  const json doc = json::parse(spinor.out);
  EXPECT_EQ(doc["chirality"], "-");
  EXPECT_EQ(doc["elements"].size(), 6u);
  EXPECT_EQ(doc["elements"][0]["nu"], "+");
}

TEST(Cli, CheckSpecExampleAndAllProperties) {
  const Outcome r = run({"check", "--property", "appell", "--space", "clifford", "-m", "3", "-k", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("PASS appell clifford m=3 k<=2", 0), 0u) << r.out;
  for (const std::string space : {"harmonic", "clifford", "spinor"})
    for (const std::string prop : {"appell", "monogenicity", "orthogonality", "dimensions"}) {
      const Outcome c = run({"check", "--property", prop, "--space", space, "-m", "4", "-k", "2"});
      EXPECT_EQ(c.code, 0) << prop << " " << space << "\n" << c.err;
    }
  EXPECT_EQ(run({"check", "--property", "coeff-relation", "-m", "4", "-k", "2"}).code, 0);
  const Outcome ck = run({"check", "--property", "ck", "-m", "4", "-k", "3", "--json"});
  EXPECT_EQ(ck.code, 0);
  EXPECT_EQ(json::parse(ck.out)["ok"], true);
}

TEST(Cli, ExpandRejectsNonMonogenicInput) {
  const Outcome r = run({"expand", "--space", "clifford", "-m", "3", "--input", "-"}, "x1*x2");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("input fails monogenicity"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ExpandTableAndRoundTrip) {
  const Outcome r = run({"expand", "--space", "clifford", "-m", "3", "--input", "-"},
                    "3*(x3 + 1/2*(x1*e1 + x2*e2)*e3) + (x1 - e12*x2)*1/2*e13");
  ASSERT_EQ(r.code, 0) << r.err;
  const json table = json::parse(r.out);
  ASSERT_EQ(table.size(), 2u);
  EXPECT_EQ(table[0]["mu"], "1|1");
  EXPECT_EQ(table[0]["coeff"]["blades"][0]["idx"], json({1, 3}));
  EXPECT_EQ(table[0]["coeff"]["blades"][0]["re"], "1/2");
  EXPECT_EQ(table[1]["mu"], "1|0");
  EXPECT_EQ(table[1]["coeff"]["blades"][0]["re"], "3/1");

  const Outcome rt = run({"expand", "--space", "clifford", "-m", "3", "--roundtrip", "--input", "-"},
                     "x1 - e12*x2");
  EXPECT_EQ(rt.code, 0);
  EXPECT_EQ(json::parse(rt.out)["roundtrip_exact"], true);
}

TEST(Cli, CorpusRoundTrips) {
  int seen = 0;
  for (const auto &entry : std::filesystem::directory_iterator(corpus_dir)) {
    const std::string name = entry.path().stem().string();
    const std::string space = name.substr(0, name.find('_'));
    const std::string m = name.substr(name.find("_m") + 2, 1);
    const Outcome r = run({"expand", "--space", space, "-m", m, "--roundtrip", "--input",
                       entry.path().string()});
    EXPECT_EQ(r.code, 0) << name << "\n" << r.err;
    EXPECT_EQ(json::parse(r.out)["roundtrip_exact"], true) << name;
    ++seen;
  }
  EXPECT_GE(seen, 6);
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  const std::vector<std::vector<std::string>> commands = {
      {"basis", "--space", "spinor", "-m", "5", "-k", "2"},
      {"basis", "--space", "harmonic", "-m", "4", "-k", "3", "--approx"},
      {"expand", "--space", "harmonic", "-m", "4", "--input", (corpus_dir / "harmonic_m4_cubic.txt").string()},
      {"check", "--property", "orthogonality", "--space", "clifford", "-m", "3", "-k", "2"},
  };
  for (const auto &args : commands) {
    const Outcome a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, JsonInputAccepted) {
  const Outcome basis = run({"basis", "--space", "clifford", "-m", "3", "-k", "2"});
  const json first = json::parse(basis.out)["elements"][1]["poly"];
  const Outcome r = run({"expand", "--space", "clifford", "-m", "3", "--input", "-"}, first.dump());
  ASSERT_EQ(r.code, 0) << r.err;
  const json table = json::parse(r.out);
  ASSERT_EQ(table.size(), 1u);
  EXPECT_EQ(table[0]["mu"], json::parse(basis.out)["elements"][1]["mu"]);
}

TEST(Cli, Decompose) {
  const Outcome branch = run({"decompose", "branch", "-m", "3", "-k", "1", "--input", "-"}, "x3");
  ASSERT_EQ(branch.code, 0) << branch.err;
  const json b = json::parse(branch.out);
  ASSERT_EQ(b["components"].size(), 2u);
  EXPECT_EQ(b["components"][0]["poly"]["m"], 2);
  EXPECT_EQ(b["components"][0]["poly"]["terms"].size(), 1u);
  EXPECT_EQ(b["components"][1]["poly"]["terms"].size(), 0u);

  const Outcome fischer =
      run({"decompose", "fischer", "-m", "3", "-k", "1", "--input", "-"}, "(x1*e1 + x2*e2)*e3");
  ASSERT_EQ(fischer.code, 0) << fischer.err;
  const json f = json::parse(fischer.out);
  EXPECT_EQ(f["components"][0]["poly"]["terms"][0]["exp"], json({0, 0}));
  EXPECT_EQ(f["components"][1]["poly"]["terms"].size(), 0u);
}

TEST(Cli, UsageErrorsExitTwo) {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"frobnicate"},
      {"basis", "--space", "quaternion", "-m", "3", "-k", "1"},
      {"basis", "-m", "2", "-k", "1"},
      {"basis", "-m", "3"},
      {"basis", "-m", "3", "-k", "1", "--json", "--text"},
      {"check", "--property", "nonsense"},
      {"check", "-m", "3"},
      {"expand", "-m", "3"},
      {"decompose", "sideways", "-m", "3", "--input", "-"},
      {"basis", "-m", "3", "-k", "1", "--chirality", "0"},
  };
  for (const auto &args : bad) {
    const Outcome r = run(args, "x1");
    std::string joined;
    for (const auto &a : args)
      joined += a + " ";
    EXPECT_EQ(r.code, 2) << joined;
  }
  const Outcome parse = run({"expand", "-m", "3", "--input", "-"}, "2x1");
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("1:2"), std::string::npos) << parse.err;
  EXPECT_EQ(run({"expand", "-m", "3", "--input", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
