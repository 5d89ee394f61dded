#include "zipmorph/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#if defined(__linux__)
#include <sched.h>
#endif

#include "zipmorph/cg.hpp"
#include "zipmorph/gradation.hpp"
#include "zipmorph/pipeline.hpp"
#include "zipmorph/text.hpp"
#include "zipmorph/vowel_rules.hpp"

namespace zipmorph::bench {

namespace {

using Clock = std::chrono::steady_clock;

struct Stats {
  double mean = 0;
  double std = 0;
};

// Times one call of `body` per sample; `sink` keeps results observable.
Stats measure(std::size_t iterations, const std::function<std::size_t()>& body) {
  volatile std::size_t sink = 0;
  double sum = 0;
  double sum_sq = 0;
  for (std::size_t i = 0; i < iterations; ++i) {
    const auto start = Clock::now();
    sink = sink + body();
    const double us = std::chrono::duration<double, std::micro>(Clock::now() - start).count();
    sum += us;
    sum_sq += us * us;
  }
  const double n = static_cast<double>(iterations);
  const double mean = sum / n;
  return {mean, std::sqrt(std::max(0.0, sum_sq / n - mean * mean))};
}

// Mean of per-word means; std is the root mean of per-word variances.
Stats measure_each(std::size_t iterations, const std::vector<std::u32string>& words,
                   const std::function<std::size_t(const std::u32string&)>& body) {
  double mean = 0;
  double var = 0;
  for (const auto& w : words) {
    const Stats s = measure(iterations, [&] { return body(w); });
    mean += s.mean;
    var += s.std * s.std;
  }
  const double n = static_cast<double>(words.size());
  return {mean / n, std::sqrt(var / n)};
}

std::size_t extend_once(const WriterArrow& arrow, const std::u32string& word) {
  const WriterZipper start{{}, CharZipper::from_sequence(word, 0)};
  return materialize(writer_extend(arrow, start)).size();
}

const cg::Sentence& cg_sentence() {
  static const cg::Sentence sentence = cg::parse_readings(
                                           "kuusi\tnum:kuusi;noun:kuusi\n"
                                           "koiraa\tnoun:koira\n"
                                           "ei\tverb:ei\n"
                                           "voi\tnoun:voi;verb:voida\n"
                                           "talo\tnoun:talo;adj:talo;adv:talo;verb:talo\n"
                                           "kasvaa\tverb:kasvaa\n")
                                           .front();
  return sentence;
}

const std::vector<cg::Rule>& cg_rules() {
  static const std::vector<cg::Rule> rules = cg::parse_rules(
      "SELECT lukusana IF (+1 nimisana)\n"
      "SELECT nimisana IF (+1 teonsana)\n"
      "SELECT teonsana IF (-1 BASEFORM=ei)\n"
      "REMOVE laatusana IF (NOT -1 lukusana)\n"
      "REMOVE seikkasana IF (-1 nimisana)\n"
      "SELECT teonsana IF (+1 teonsana)\n");
  return rules;
}

}  // namespace

const Row* Report::find(const std::string& name) const {
  for (const Row& r : rows) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const std::vector<std::u32string>& pipeline_words() {
  static const std::vector<std::u32string> words{U"kampAstAVn", U"rantAssA", U"pukussA", U"kenkästAVn"};
  return words;
}

Report run(std::size_t iterations) {
  if (iterations == 0) iterations = 1;
  Report report;
  report.iterations = iterations;

  const WriterArrow weak = gradation_arrow(Grade::Weak);
  double grad_mean = 0;
  double grad_var = 0;
  for (const GradationPattern* p : patterns_by_kotus_index()) {
    const std::u32string word = decode_nfc(p->example_strong);
    const Stats s = measure(iterations, [&] { return extend_once(weak, word); });
    grad_mean += s.mean;
    grad_var += s.std * s.std;
    report.rows.push_back({"cokleisli",
                           "gradation #" + std::to_string(p->kotus_index) + " " + std::string(p->example_strong),
                           s.mean, s.std});
  }
  report.rows.push_back({"cokleisli", "gradation (avg/11)", grad_mean / 11, std::sqrt(grad_var / 11)});

  const auto& words = pipeline_words();
  const WriterArrow harmony = lift_pure(harmony_arrow);
  const WriterArrow possessive = lift_pure(possessive_arrow);
  const Stats h = measure_each(iterations, words, [&](const std::u32string& w) { return extend_once(harmony, w); });
  report.rows.push_back({"cokleisli", "harmony (avg/4)", h.mean, h.std});
  const Stats ps =
      measure_each(iterations, words, [&](const std::u32string& w) { return extend_once(possessive, w); });
  report.rows.push_back({"cokleisli", "possessive (avg/4)", ps.mean, ps.std});
  const Pipeline pipe = Pipeline::standard(Grade::Weak);
  const Stats full =
      measure_each(iterations, words, [&](const std::u32string& w) { return pipe.run(w).surface.size(); });
  report.rows.push_back({"cokleisli", "full pipeline (avg/4)", full.mean, full.std});

  const auto& sentence = cg_sentence();
  const auto& rules = cg_rules();
  double single_mean = 0;
  double single_var = 0;
  for (const cg::Rule& rule : rules) {
    const Stats s = measure(iterations, [&] { return cg::run_cg(sentence, {rule}).size(); });
    single_mean += s.mean;
    single_var += s.std * s.std;
  }
  const double n_rules = static_cast<double>(rules.size());
  report.rows.push_back({"cg", "single rule (avg/" + std::to_string(rules.size()) + ")", single_mean / n_rules,
                         std::sqrt(single_var / n_rules)});
  const Stats all = measure(iterations, [&] { return cg::run_cg(sentence, rules).size(); });
  report.rows.push_back({"cg", "full rule file (" + std::to_string(rules.size()) + " rules)", all.mean, all.std});
  return report;
}

bool pin_to_one_core() {
#if defined(__linux__)
  cpu_set_t current;
  CPU_ZERO(&current);
  if (sched_getaffinity(0, sizeof(current), &current) != 0) return false;
  for (int cpu = 0; cpu < CPU_SETSIZE; ++cpu) {
    if (CPU_ISSET(cpu, &current)) {
      cpu_set_t one;
      CPU_ZERO(&one);
      CPU_SET(cpu, &one);
      return sched_setaffinity(0, sizeof(one), &one) == 0;
    }
  }
  return false;
#else
  return false;
#endif
}

std::string format_table(const Report& report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-34s %10s %10s\n", "component", "mean (us)", "std (us)");
  out += line;
  std::string group;
  for (const Row& row : report.rows) {
    if (row.group != group) {
      group = row.group;
      out += group == "cg" ? "CG-lite (sentence-level)\n" : "CoKleisli (char-level)\n";
    }
    std::snprintf(line, sizeof line, "  %-32s %10.2f %10.2f\n", row.name.c_str(), row.mean_us, row.std_us);
    out += line;
  }
  std::snprintf(line, sizeof line, "(%zu iterations)\n", report.iterations);
  out += line;
  return out;
}

}  // namespace zipmorph::bench
