#include "apforge/cli/commands.hpp"
#include "apforge/corpus/cases.hpp"

#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace apforge;
using corpus::Corpus;

namespace {

const Corpus& bundled() {
  static const Corpus c = corpus::parse_corpus(corpus::bundled_corpus_text(), "bundled");
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(const std::string& args) {
  const std::string cmd = std::string(APFORGE_CLI) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string tmp(const std::string& name) { return std::string(APFORGE_TMP_DIR) + "/" + name; }

}  // namespace

TEST_CASE("bundled corpus equals the data file") {
  CHECK(corpus::bundled_corpus_text() == slurp(APFORGE_DATA_DIR "/corpus.json"));
  const auto& c = bundled();
  CHECK(c.version == "1.0.0");
  CHECK(c.hash == corpus::fnv1a_hex(corpus::bundled_corpus_text()));
  CHECK(c.cases.size() == 10);
  CHECK(c.families.size() == 8);
  CHECK(c.fields.size() == 8);
}

TEST_CASE("fnv1a reference values") {
  CHECK(corpus::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(corpus::fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("case selection") {
  const auto& c = bundled();
  CHECK(c.select("all").size() == 10);
  CHECK(c.select("3223").size() == 3);
  CHECK(c.select("2223").size() == 2);
  CHECK(c.select("3222").size() == 2);
  CHECK(c.select("2322").front()->id == "2232");
  CHECK(c.select("2323").front()->id == "3232");
  CHECK(c.select("3233").front()->id == "3323");
  CHECK_THROWS_AS(c.select("4444"), corpus::CorpusError);
}

TEST_CASE("malformed corpora are rejected") {
  CHECK_THROWS_AS(corpus::parse_corpus("{", "x"), corpus::CorpusError);
  CHECK_THROWS_AS(corpus::parse_corpus(R"({"version": "1"})", "x"), corpus::CorpusError);
  auto j = nlohmann::json::parse(corpus::bundled_corpus_text());
  j["cases"][0]["curve"]["kind"] = "surface";
  CHECK_THROWS_AS(corpus::parse_corpus(j.dump(), "x"), corpus::CorpusError);
  CHECK_THROWS_AS(corpus::load_corpus_file("/nonexistent/corpus.json"), corpus::CorpusError);
}

TEST_CASE("charts") {
  using exact::form_from_ints;
  const auto f = form_from_ints({2, 0, 15, 0, 60, 0, -4});
  CHECK(corpus::apply_chart(f, {"even_y"}) == std::vector<exact::BigRat>{-4, 60, 15, 2});
  CHECK(corpus::apply_chart(f, {"dehomogenize"}) == f.coeffs());
  const auto g = corpus::apply_chart(form_from_ints({4, 0, 57, 0, 156, 0, 4}), {"dehomogenize", "scale 1/4"});
  CHECK(g[2] == exact::BigRat(57, 4));
  CHECK_THROWS_AS(corpus::apply_chart(form_from_ints({1, 1, 1}), {"even_y"}), corpus::CorpusError);
  CHECK_THROWS_AS(corpus::apply_chart(f, {}), corpus::CorpusError);
}

TEST_CASE("every derivation reproduces its displayed curve") {
  const auto& c = bundled();
  for (const auto& k : c.cases) {
    CAPTURE(k.id);
    CHECK_NOTHROW(corpus::derive_case(c, k));
    CHECK(corpus::derive_case_records(c, k).ok());
  }
}

TEST_CASE("a perturbed expectation raises DerivationMismatch with a diff") {
  auto j = nlohmann::json::parse(corpus::bundled_corpus_text());
  j["cases"][1]["steps"][2]["expect"][6] = "29";
  const auto c = corpus::parse_corpus(j.dump(), "perturbed");
  try {
    corpus::derive_case(c, c.cases[1]);
    FAIL("no mismatch raised");
  } catch (const corpus::DerivationMismatch& e) {
    CHECK(e.diff().find("29") != std::string::npos);
  }
  CHECK_FALSE(corpus::derive_case_records(c, c.cases[1]).ok());
}

TEST_CASE("case facts") {
  const auto& c = bundled();
  auto find = [](const std::vector<cli::CheckRecord>& recs, const std::string& id) {
    for (const auto& r : recs)
      if (r.id == id) return r;
    FAIL("missing record " << id);
    return recs.front();
  };
  const auto c1 = corpus::run_case(c, *c.select("2223b").front());
  CHECK(find(c1, "2223b/#J(F_5)").actual == "21");
  CHECK(find(c1, "2223b/#J(F_7)").actual == "52");
  CHECK(find(c1, "2223b/claim 1").status == cli::Status::UncheckedClaim);

  corpus::CaseOptions opt;
  opt.height = 50;
  opt.extra_primes = {3, 13};
  const auto c3 = corpus::run_case(c, *c.select("3232").front(), opt);
  CHECK(find(c3, "3232/points height 50").status == cli::Status::Pass);
  CHECK(find(c3, "3232/#J(F_13) Weil band").actual == "252");
  CHECK(find(c3, "3232/#J(F_3) Weil band").status == cli::Status::Undecided);

  const auto r = corpus::run_case(c, *c.select("2332").front());
  CHECK(find(r, "2332/resultant").status == cli::Status::Fail);
  CHECK(find(r, "2332/resultant S-unit {2,3}").status == cli::Status::Pass);
}

TEST_CASE("report tallies and stable JSON") {
  cli::RunReport rep;
  rep.add("a", true, "1", "1", 3.25);
  rep.add("b", false, "1", "2");
  rep.add({"c", cli::Status::UncheckedClaim, "claim", "not checked", 0});
  const auto s = rep.summary();
  CHECK(s.pass == 1);
  CHECK(s.fail == 1);
  CHECK(s.unchecked_claim == 1);
  CHECK(rep.any_fail());
  const auto j = rep.to_json(false);
  CHECK(j["records"][0]["runtime_ms"] == 0.0);
  CHECK(j["summary"]["total"] == 3);
  CHECK(j["records"][2]["status"] == "unchecked-claim");
  CHECK(rep.to_json(true)["records"][0]["runtime_ms"] == 3.25);
}

TEST_CASE("genus commands") {
  CHECK_FALSE(cli::cmd_genus_scan(4, 5).any_fail());
  CHECK(cli::cmd_genus_scan(4, 5).records.size() == 256);
  CHECK(cli::cmd_genus_chi(2, 3, 7).records[0].actual.rfind("GenusGT1", 0) == 0);
  CHECK(cli::cmd_genus_vector(3, {2, 3, 6}).records[0].actual.rfind("AllGenusLE1Possible", 0) == 0);
  CHECK_THROWS_AS(cli::cmd_genus_vector(4, {2, 3}), std::invalid_argument);
}

TEST_CASE("verify-lemma command") {
  const auto& c = bundled();
  CHECK(cli::cmd_verify_lemma(c, std::string("i"), 0).records.size() == 2);
  CHECK_FALSE(cli::cmd_verify_lemma(c, std::nullopt, 60).any_fail());
  CHECK_THROWS_AS(cli::cmd_verify_lemma(c, std::string("ix"), 0), std::invalid_argument);
}

TEST_CASE("exit codes") {
  CHECK(run("genus --chi 2 3 7") == 0);
  CHECK(run("verify-lemma --bound 0") == 0);
  CHECK(run("cases --case 2332") == 1);
  CHECK(run("cases --case 9999") == 2);
  CHECK(run("genus --k 9 --scan-L 3") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("search --k 6 --L 7 --bound 100000") == 3);
  CHECK(run("--corpus /nonexistent.json cases --all") == 2);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
  REQUIRE(run("--no-timings --jobs 1 --report " + tmp("r1.json") + " cases --case 3232 --height 200") == 0);
  REQUIRE(run("--no-timings --jobs 3 --report " + tmp("r2.json") + " cases --case 3232 --height 200") == 0);
  const auto a = slurp(tmp("r1.json"));
  CHECK(!a.empty());
  CHECK(a == slurp(tmp("r2.json")));
  const auto j = nlohmann::json::parse(a);
  CHECK(j["corpus_hash"] == bundled().hash);
  CHECK(j["command"] == "apforge --no-timings cases --case 3232 --height 200");
}

TEST_CASE("corpus override through the environment") {
  auto j = nlohmann::json::parse(corpus::bundled_corpus_text());
  j["version"] = "9.9.9";
  {
    std::ofstream out(tmp("alt.json"));
    out << j.dump();
  }
  setenv("APFORGE_CORPUS", tmp("alt.json").c_str(), 1);
  CHECK(corpus::load_corpus().version == "9.9.9");
  CHECK(corpus::load_corpus(APFORGE_DATA_DIR "/corpus.json").version == "1.0.0");
  unsetenv("APFORGE_CORPUS");
  CHECK(corpus::load_corpus().source == "bundled");
}
