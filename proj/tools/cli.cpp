#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "zipmorph/bench.hpp"
#include "zipmorph/cg.hpp"
#include "zipmorph/deletion_writer.hpp"
#include "zipmorph/generator.hpp"
#include "zipmorph/gradation.hpp"
#include "zipmorph/laws.hpp"
#include "zipmorph/pipeline.hpp"
#include "zipmorph/text.hpp"
#include "zipmorph/vowel_rules.hpp"

namespace zipmorph::cli {

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::u32string word_arg(const std::string& raw) {
  std::u32string word = decode_nfc(raw);
  if (word.empty()) throw std::invalid_argument("empty word");
  return word;
}

int cmd_grad(const std::string& raw, Grade grade, bool trace, std::ostream& out, std::ostream& err) {
  const std::u32string word = word_arg(raw);
  const Pipeline single({{"gradation", gradation_arrow(grade)}});
  const PipelineRun result = single.run(word, trace);
  if (trace) {
    out << format_trace(result.trace);
  } else {
    out << encode_utf8(result.surface) << '\n';
  }
  if (grade == Grade::Strong) {
    const auto sites = unrecoverable_sites(result.surface);
    if (!sites.empty()) {
      err << "warning: strengthening cannot restore deleted consonants (pp/tt/kk -> p/t/k, k -> 0); "
          << sites.size() << " candidate site(s) left as is\n";
    }
  }
  return 0;
}

int cmd_harmony(const std::string& raw, std::ostream& out) {
  const std::u32string word = word_arg(raw);
  const Pipeline single({{"harmony", lift_pure(harmony_arrow)}});
  out << encode_utf8(single.run(word).surface) << '\n';
  return 0;
}

int cmd_pipeline(const std::string& raw, Grade grade, bool trace, std::ostream& out, std::ostream& err) {
  const PipelineRun result = Pipeline::standard(grade).run(word_arg(raw), trace);
  if (trace) {
    out << format_trace(result.trace);
  } else {
    out << encode_utf8(result.surface) << '\n';
  }
  for (const auto& d : result.diagnostics) err << "warning: " << d << '\n';
  return 0;
}

int cmd_generate(const std::string& lemma, NounCase noun_case, bool poss3, std::ostream& out) {
  out << generate(lemma, noun_case, poss3) << '\n';
  return 0;
}

int cmd_cg(const std::string& rules_path, const std::string& input_path, bool trace, std::ostream& out,
           std::ostream& err) {
  const std::vector<cg::Rule> rules = cg::parse_rules(read_file(rules_path));
  std::vector<cg::Sentence> sentences = cg::parse_readings(read_file(input_path));
  for (cg::Sentence& s : sentences) {
    cg::FiringSink sink;
    if (trace) sink = [&](const cg::Firing& f) { err << cg::format_firing(f) << '\n'; };
    s = cg::run_cg(s, rules, sink);
  }
  out << cg::format_readings(sentences);
  return 0;
}

int cmd_laws(std::uint64_t seed, std::size_t cases, std::ostream& out) {
  laws::Options opts;
  opts.seed = seed;
  opts.cases = cases;
  bool ok = true;
  for (const auto& result : laws::all_laws(opts)) {
    out << laws::format(result) << '\n';
    ok = ok && result.passed;
  }
  return ok ? 0 : 1;
}

int cmd_bench(std::size_t iterations, bool pin, std::ostream& out) {
  if (pin && !bench::pin_to_one_core()) out << "(could not pin to a single core)\n";
  out << bench::format_table(bench::run(iterations));
  return 0;
}

int cmd_dump_patterns(std::ostream& out) {
  out << "kotus_index\tstrong\tweak\ttype\texample\n";
  for (const GradationPattern* p : patterns_by_kotus_index()) {
    out << p->kotus_index << '\t' << p->strong[0].render() << p->strong[1].render() << '\t'
        << p->weak[0].render() << p->weak[1].render() << '\t' << to_string(p->type) << '\t'
        << p->example_strong << " -> " << p->example_weak << '\n';
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"zipmorph: comonadic Finnish morphophonology and CG-lite disambiguation"};
  app.require_subcommand(1);

  const std::vector<std::string> grades{"weak", "strong"};
  std::vector<std::string> cases;
  for (NounCase c : kAllNounCases) cases.emplace_back(to_string(c));

  std::string word;
  std::string grade_name;
  bool trace = false;

  auto* grad = app.add_subcommand("grad", "apply consonant gradation to a word");
  grad->add_option("--grade", grade_name, "target grade")->required()->check(CLI::IsMember(grades));
  grad->add_flag("--trace", trace, "print the per-stage trace");
  grad->add_option("word", word)->required();

  auto* harmony = app.add_subcommand("harmony", "resolve A/O/U archiphonemes by vowel harmony");
  harmony->add_option("word", word)->required();

  auto* pipeline = app.add_subcommand("pipeline", "run gradation, harmony and possessive on an underlying form");
  pipeline->add_option("--grade", grade_name, "gradation grade")->required()->check(CLI::IsMember(grades));
  pipeline->add_flag("--trace", trace, "print the per-stage trace");
  pipeline->add_option("word", word)->required();

  std::string case_name;
  bool poss3 = false;
  auto* gen = app.add_subcommand("generate", "inflect a noun lemma");
  gen->add_option("lemma", word)->required();
  gen->add_option("--case", case_name, "noun case")->required()->check(CLI::IsMember(cases));
  gen->add_flag("--poss3", poss3, "append the third-person possessive -Vn");

  std::string rules_path;
  std::string input_path;
  auto* cgcmd = app.add_subcommand("cg", "disambiguate a readings file with a rule file");
  cgcmd->add_option("rules", rules_path, "rule file")->required();
  cgcmd->add_option("input", input_path, "readings TSV ('-' for stdin)")->required();
  cgcmd->add_flag("--trace", trace, "report rule firings on stderr");

  std::uint64_t seed = 0x5eed;
  std::size_t law_cases = 1000;
  auto* lawcmd = app.add_subcommand("laws", "run the randomized law suites");
  lawcmd->add_option("--seed", seed, "random seed");
  lawcmd->add_option("--cases", law_cases, "cases per law")->check(CLI::PositiveNumber);

  std::size_t iterations = 10000;
  bool no_pin = false;
  auto* benchcmd = app.add_subcommand("bench", "per-rule latency microbenchmarks");
  benchcmd->add_option("--iterations", iterations, "samples per row")->check(CLI::PositiveNumber);
  benchcmd->add_flag("--no-pin", no_pin, "do not pin to a single core");

  auto* dump = app.add_subcommand("dump-patterns", "print the gradation pattern table as TSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const Grade grade = parse_grade(grade_name).value_or(Grade::Weak);
  const NounCase noun_case = parse_noun_case(case_name).value_or(NounCase::Nominative);

  try {
    if (grad->parsed()) return cmd_grad(word, grade, trace, out, err);
    if (harmony->parsed()) return cmd_harmony(word, out);
    if (pipeline->parsed()) return cmd_pipeline(word, grade, trace, out, err);
    if (gen->parsed()) return cmd_generate(word, noun_case, poss3, out);
    if (cgcmd->parsed()) return cmd_cg(rules_path, input_path, trace, out, err);
    if (lawcmd->parsed()) return cmd_laws(seed, law_cases, out);
    if (benchcmd->parsed()) return cmd_bench(iterations, !no_pin, out);
    if (dump->parsed()) return cmd_dump_patterns(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace zipmorph::cli
