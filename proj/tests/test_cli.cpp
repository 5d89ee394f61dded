#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "zipmorph/cg.hpp"
#include "zipmorph/generator.hpp"
#include "zipmorph/pipeline.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "zipmorph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = zipmorph::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = ZIPMORPH_DATA_DIR;

}  // namespace

TEST_CASE("grad") {
  CHECK(run({"grad", "--grade", "weak", "kaappi"}).out == "kaapi\n");
  CHECK(run({"grad", "--grade", "strong", "kamma"}).out == "kampa\n");
  CHECK(run({"grad", "--grade", "weak", "xyz"}).out == "xyz\n");
  CHECK(run({"grad", "--grade", "weak", "--trace", "kaappi"}).out ==
        "input\tkaappi\t\ngradation\tkaappi\t4\nmaterialize\tkaapi\t\n");
  const Result empty = run({"grad", "--grade", "weak", ""});
  CHECK(empty.code != 0);
  CHECK(empty.err.find("empty word") != std::string::npos);
  CHECK(run({"grad", "--grade", "sideways", "kaappi"}).code != 0);
  CHECK(run({"grad", "--grade", "strong", "kaapi"}).err.find("warning") != std::string::npos);
}

TEST_CASE("harmony and pipeline") {
  CHECK(run({"harmony", "kynässA"}).out == "kynässä\n");
  CHECK(run({"pipeline", "--grade", "weak", "kampAstAVn"}).out == "kammastaan\n");
  CHECK(run({"pipeline", "--grade", "weak", "talossA"}).out == "talossa\n");
  CHECK(run({"pipeline", "--grade", "weak", "a"}).out == "a\n");
  CHECK(run({"pipeline", "--grade", "weak", "rantAssA"}).out ==
        zipmorph::run_pipeline(std::string("rantAssA"), zipmorph::Grade::Weak) + "\n");
  const Result traced = run({"pipeline", "--grade", "weak", "--trace", "pukussA"});
  CHECK(traced.out.find("gradation\tpukussA\t2\n") != std::string::npos);
  CHECK(traced.out.find("materialize\tpuussa\t\n") != std::string::npos);
}

TEST_CASE("generate") {
  CHECK(run({"generate", "kaappi", "--case", "genitive"}).out == "kaapin\n");
  CHECK(run({"generate", "kampa", "--case", "elative", "--poss3"}).out == "kammastaan\n");
  CHECK(run({"generate", "talo", "--case", "nominative"}).out == "talo\n");
  CHECK(run({"generate", "talo", "--case", "vocative"}).code != 0);
  CHECK(run({"generate", "mies", "--case", "genitive"}).code == 1);
}

TEST_CASE("cg") {
  const Result r = run({"cg", kData + "/cg/disambiguation_rules.rg", kData + "/cg/kuusi_sentences.tsv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "kuusi\tnum:kuusi\nkoiraa\tnoun:koira\n\n"
        "kuusi\tnoun:kuusi\nkasvaa\tverb:kasvaa\n\n"
        "ei\tverb:ei\nvoi\tverb:voida\n");

  const Result echoed = run({"cg", kData + "/cg/empty.rg", kData + "/cg/kuusi_sentences.tsv"});
  CHECK(echoed.out == "kuusi\tnum:kuusi;noun:kuusi\nkoiraa\tnoun:koira\n\n"
                      "kuusi\tnum:kuusi;noun:kuusi\nkasvaa\tverb:kasvaa\n\n"
                      "ei\tverb:ei\nvoi\tnoun:voi;verb:voida\n");

  const Result traced =
      run({"cg", "--trace", kData + "/cg/cascade_rules.rg", kData + "/cg/cascade_sentence.tsv"});
  CHECK(traced.out.find("sana\tverb:sanoa\n") != std::string::npos);
  CHECK(traced.err.find("rule 3 fired at token 2: {noun/sana, verb/sanoa} → {verb/sanoa}") != std::string::npos);

  CHECK(run({"cg", kData + "/cg/missing.rg", kData + "/cg/cascade_sentence.tsv"}).code == 1);
}

TEST_CASE("laws, bench, dump-patterns") {
  const Result laws = run({"laws", "--seed", "7", "--cases", "50"});
  CHECK(laws.code == 0);
  CHECK(laws.out.find("FAIL") == std::string::npos);
  CHECK(laws.out.find("PASS zipper L3") != std::string::npos);

  const Result bench = run({"bench", "--iterations", "1", "--no-pin"});
  CHECK(bench.code == 0);
  for (const char* row : {"gradation (avg/11)", "harmony (avg/4)", "possessive (avg/4)", "full pipeline (avg/4)",
                          "single rule", "full rule file"}) {
    CHECK(bench.out.find(row) != std::string::npos);
  }

  const Result dump = run({"dump-patterns"});
  CHECK(dump.out.rfind("kotus_index\tstrong\tweak\ttype\texample\n", 0) == 0);
  CHECK(dump.out.find("1\tpp\tp0\tquantitative\tkaappi -> kaapi\n") != std::string::npos);
  CHECK(dump.out.find("6\tVk\tV0\tqualitative-single\tpuku -> puu\n") != std::string::npos);
  CHECK(dump.out.find("11\tnk\tng\tqualitative-cluster\tkenkä -> kengä\n") != std::string::npos);
}

TEST_CASE("no subcommand is an error") { CHECK(run({}).code != 0); }
