#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "linearr/cli.hpp"
#include "linearr/corpus.hpp"
#include "linearr/io.hpp"
#include "linearr/report.hpp"

using namespace linearr;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("linearr_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".arr");
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("corpus passes its own expectations") {
  CHECK(corpus().size() >= 15);
  for (const CorpusEntry& e : corpus()) {
    CAPTURE(e.name);
    CHECK(verify_entry(e).empty());
    CHECK(e.arrangement.name() == e.name);
  }
  CHECK_THROWS_AS(corpus_entry("no-such-entry"), DataError);
  CHECK(find_corpus_entry("no-such-entry") == nullptr);
}

TEST_CASE("arrangement files round-trip") {
  for (const CorpusEntry& e : corpus()) {
    const Arrangement back = parse_arrangement(format_arrangement(e.arrangement), e.name);
    CHECK(back.same_lines(e.arrangement));
    CHECK(back.field() == e.arrangement.field());
  }
  TempFile f(format_arrangement(corpus_entry("ceva3").arrangement));
  const Arrangement loaded = load_arrangement(f.path());
  CHECK(loaded.same_lines(corpus_entry("ceva3").arrangement));
}

TEST_CASE("arrangement file errors") {
  CHECK_THROWS_AS(parse_arrangement("", "empty"), ParseError);
  CHECK_THROWS_AS(parse_arrangement("# only a comment\n", "empty"), ParseError);
  CHECK_THROWS_AS(parse_arrangement("field: rational\n", "nolines"), ParseError);
  try {
    parse_arrangement("field: rational\n1 0 0\n0 1 0\n2 0 0\n", "dup");
    FAIL("duplicate accepted");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("lines 1 and 3") != std::string::npos);
  }
  try {
    parse_arrangement("field: rational\n1 0 0\n0 1 1*w\n", "omega");
    FAIL("w accepted in rational field");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 5);
  }
  try {
    parse_arrangement("# header\nfield: eisenstein\n1 2\n", "short");
    FAIL("short row accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_arrangement("field: rational\n0 0 0\n", "zero"), ParseError);
  CHECK_THROWS_AS(parse_arrangement("field: reals\n1 0 0\n", "field"), ParseError);
  CHECK_THROWS_AS(parse_arrangement("1 0 0\n", "noheader"), ParseError);
  CHECK_THROWS_AS(load_arrangement("/nonexistent/file.arr"), DataError);
}

TEST_CASE("parametric families") {
  const FamilyInstance p = instantiate_family("pappus", Scalar(2));
  CHECK(census(p.arrangement).t(3) == 10);
  CHECK(census(p.arrangement).t(2) == 6);
  CHECK(p.warnings.empty());
  CHECK_THROWS_AS(instantiate_family("pappus", Scalar(1)), DataError);
  CHECK_THROWS_AS(instantiate_family("pappus", Scalar(0)), DataError);
  CHECK_THROWS_AS(instantiate_family("pappus", Scalar(-1)), DataError);
  CHECK_THROWS_AS(instantiate_family("nonsense", Scalar(2)), DataError);
  CHECK(instantiate_family_spec("generic:5").arrangement.size() == 5);
  CHECK(census(instantiate_family_spec("pencil:4").arrangement).t(4) == 1);
  CHECK_THROWS_AS(instantiate_family_spec("pappus"), DataError);
  for (const char* b : {"3", "-2", "1/2", "3/7", "5"})
    CHECK(census(instantiate_family_spec(std::string("pappus:") + b).arrangement) ==
          census(corpus_entry("pappus").arrangement));
}

TEST_CASE("cli commands and exit codes") {
  Run r = run({"census", "ceva3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "t3=12 t2=0\n");

  r = run({"census", "example-2.6-3"});
  CHECK(r.out == "t3=17 t2=15\n");

  r = run({"betti", "-p", "3", "ceva3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("beta_13=2") != std::string::npos);

  r = run({"nets", "-k", "3", "ceva3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("(3,3)-nets: 4") != std::string::npos);

  r = run({"latin", "--order", "4"});
  CHECK(r.out.find("576 squares, 2 main classes") != std::string::npos);

  r = run({"monodromy", "ceva3"});
  CHECK(r.out.find("verdict: nontrivial") != std::string::npos);

  r = run({"isomorphic", "pappus", "pappus:3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("isomorphic", 0) == 0);
  r = run({"isomorphic", "example-2.6-1", "example-2.6-4"});
  CHECK(r.out.rfind("not isomorphic", 0) == 0);

  r = run({"verify", "lemma14"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("conclusion: no admissible solution") != std::string::npos);

  r = run({"verify", "corpus"});
  CHECK(r.code == kExitOk);

  r = run({"corpus", "show", "triangle"});
  CHECK(parse_arrangement(r.out, "triangle").same_lines(corpus_entry("triangle").arrangement));

  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"betti", "-p", "4", "ceva3"}).code == kExitUsage);
  CHECK(run({"nets", "-k", "5", "ceva3"}).code == kExitUsage);
  CHECK(run({"census", "no-such-arrangement"}).code == kExitDataError);
  CHECK(run({"census", "pappus:1"}).code == kExitDataError);
  CHECK(run({"monodromy", "pencil-4"}).code == kExitDataError);
  CHECK(run({"nets", "-k", "4", "ceva3"}).code == kExitDataError);

  TempFile bad("field: rational\n1 0 0\n0 1 x\n");
  r = run({"census", bad.path()});
  CHECK(r.code == kExitDataError);
  CHECK(r.err.find(":3:5:") != std::string::npos);

  TempFile good(format_arrangement(corpus_entry("hesse9").arrangement));
  r = run({"census", good.path()});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "t3=9 t2=9\n");
}

TEST_CASE("json output") {
  const Run a = run({"--json", "analyze", "example-2.6-2"});
  const Run b = run({"--json", "analyze", "example-2.6-2"});
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j["census"]["t3"] == 19);
  CHECK(j["census"]["t2"] == 9);
  CHECK(j["betti"]["3"]["beta"].get<int>() >= 1);
  CHECK(j["nets"][0]["classes"][0] == Json::array({1, 2, 3, 4}));
  CHECK(j["nets"][0]["main_class"] == "cyclic");
  CHECK(j["monodromy"]["verdict"] == "nontrivial");

  const Json c = Json::parse(run({"--json", "census", "hesse12"}).out);
  CHECK(c["census"]["t4"] == 9);

  const Json p = Json::parse(run({"--json", "analyze", "pencil-4"}).out);
  CHECK(p["monodromy"]["verdict"].is_null());

  const Json report = analysis_report(corpus_entry("ceva3").arrangement);
  CHECK(report["nets"].size() == 4);
  CHECK(report["pencil"][0]["relation"] == Json::array({"1", "1", "-1"}));
}
