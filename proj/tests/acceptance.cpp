// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sentinel_oracle.hpp"
#include "zipmorph/bench.hpp"
#include "zipmorph/cg.hpp"
#include "zipmorph/generator.hpp"
#include "zipmorph/gradation.hpp"
#include "zipmorph/laws.hpp"
#include "zipmorph/pipeline.hpp"
#include "zipmorph/text.hpp"

using namespace zipmorph;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double max_seconds;  // 0 = no runtime bound
  std::function<Outcome()> check;
};

struct TableRow {
  std::u32string strong;
  std::u32string weak;
  bool deletes;
};

const std::vector<TableRow> kTable{
    {U"kaappi", U"kaapi", true}, {U"matto", U"mato", true},   {U"kukka", U"kuka", true},
    {U"tupa", U"tuva", false},   {U"katu", U"kadu", false},   {U"puku", U"puu", true},
    {U"kampa", U"kamma", false}, {U"kulta", U"kulla", false}, {U"ranta", U"ranna", false},
    {U"parta", U"parra", false}, {U"kenkä", U"kengä", false},
};

Outcome gradation_fidelity() {
  Outcome o;
  for (const auto& row : kTable) {
    const auto got = weaken(row.strong);
    o.expect(got == row.weak, encode_utf8(row.strong) + " -> " + encode_utf8(got));
  }
  return o;
}

Outcome roundtrip() {
  Outcome o;
  int holds = 0;
  for (const auto& row : kTable) {
    const bool rt = strengthen(weaken(row.strong)) == row.strong;
    holds += rt ? 1 : 0;
    o.expect(rt == !row.deletes, encode_utf8(row.strong) + (rt ? " unexpectedly roundtrips" : " fails roundtrip"));
  }
  o.expect(holds == 7, std::to_string(holds) + " roundtrips instead of 7");
  return o;
}

Outcome laws_suite() {
  Outcome o;
  laws::Options opts;
  opts.cases = 1000;
  opts.max_length = 20;
  std::vector<laws::LawResult> results = laws::zipper_laws(opts);
  for (auto suite : {laws::deletion_monoid_laws, laws::writer_laws}) {
    auto more = suite(opts);
    results.insert(results.end(), more.begin(), more.end());
  }
  for (const auto& r : results) {
    o.expect(r.passed && r.cases >= 1000, laws::format(r));
  }
  return o;
}

Outcome writer_sentinel() {
  Outcome o;
  int compared = 0;
  for (const GradationPattern& p : gradation_patterns()) {
    const std::u32string carrier = decode_nfc(p.example_strong) + U"ssA";
    const auto writer = run_pipeline(carrier, Grade::Weak);
    const auto sentinel = oracle::sentinel_pipeline(carrier, Grade::Weak);
    o.expect(writer == sentinel, encode_utf8(carrier) + ": " + encode_utf8(writer) + " vs " + encode_utf8(sentinel));
    ++compared;
  }
  o.expect(compared == 11, "expected 11 patterns");
  return o;
}

Outcome pipeline_goldens() {
  Outcome o;
  const std::vector<std::pair<std::u32string, std::u32string>> weak{
      {U"kampAstAVn", U"kammastaan"}, {U"rantAssA", U"rannassa"}, {U"pukussA", U"puussa"},
      {U"talossA", U"talossa"},       {U"pöydässA", U"pöydässä"}, {U"tiessA", U"tiessä"},
      {U"kenkästAVn", U"kengästään"},
  };
  for (const auto& [in, want] : weak) {
    const auto got = run_pipeline(in, Grade::Weak);
    o.expect(got == want, encode_utf8(in) + " -> " + encode_utf8(got));
  }
  return o;
}

Outcome generator_goldens() {
  Outcome o;
  struct Case {
    std::u32string lemma;
    NounCase c;
    bool poss3;
    std::u32string want;
  };
  for (const Case& g : std::vector<Case>{{U"kaappi", NounCase::Genitive, false, U"kaapin"},
                                         {U"talo", NounCase::Inessive, false, U"talossa"},
                                         {U"ranta", NounCase::Inessive, false, U"rannassa"},
                                         {U"kampa", NounCase::Elative, true, U"kammastaan"}}) {
    const auto got = generate(g.lemma, g.c, g.poss3);
    o.expect(got == g.want, encode_utf8(g.lemma) + " -> " + encode_utf8(got));
  }
  return o;
}

std::vector<std::string> pos_tags(const cg::ReadingSet& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs.readings()) out.push_back(r.pos);
  return out;
}

Outcome cg_scenarios() {
  Outcome o;
  const auto run_one = [](const std::string& tsv, const std::string& rules) {
    return cg::run_cg(cg::parse_readings(tsv).front(), cg::parse_rules(rules));
  };
  const auto six_dogs =
      run_one("kuusi\tnum:kuusi;noun:kuusi\nkoiraa\tnoun:koira\n", "SELECT lukusana IF (+1 nimisana)");
  o.expect(pos_tags(six_dogs[0]) == std::vector<std::string>{"num"}, "kuusi koiraa");

  const auto spruce =
      run_one("kuusi\tnum:kuusi;noun:kuusi\nkasvaa\tverb:kasvaa\n", "SELECT nimisana IF (+1 teonsana)");
  o.expect(pos_tags(spruce[0]) == std::vector<std::string>{"noun"}, "kuusi kasvaa");

  const auto cannot = run_one("ei\tverb:ei\nvoi\tnoun:voi;verb:voida\n", "SELECT teonsana IF (-1 BASEFORM=ei)");
  o.expect(pos_tags(cannot[1]) == std::vector<std::string>{"verb"} && cannot[1].readings()[0].baseform == "voida",
           "ei voi");

  const auto cascade = run_one("talo\tnoun:talo\nsana\tnoun:sana;verb:sanoa;adj:sana;adv:sana\nkuuluu\tverb:kuulua\n",
                               "REMOVE laatusana IF (NOT -1 lukusana)\n"
                               "REMOVE seikkasana IF (-1 nimisana)\n"
                               "SELECT teonsana IF (+1 teonsana)\n");
  o.expect(pos_tags(cascade[1]) == std::vector<std::string>{"verb"}, "3-rule cascade");

  laws::Options opts;
  opts.cases = 10000;
  for (const auto& r : laws::cg_laws(opts)) {
    if (r.name.find("emptied") != std::string::npos) o.expect(r.passed && r.cases == 10000, laws::format(r));
  }
  return o;
}

Outcome cg_composition() {
  Outcome o;
  laws::Options opts;
  opts.cases = 500;
  opts.seed = 0xe97;
  bool found = false;
  for (const auto& r : laws::cg_laws(opts)) {
    if (r.name.find("r1 >=> r2") != std::string::npos) {
      found = true;
      o.expect(r.passed && r.cases >= 500, laws::format(r));
    }
  }
  o.expect(found, "equivalence law missing");
  return o;
}

Outcome performance() {
  Outcome o;
  bench::pin_to_one_core();
  const bench::Report report = bench::run(10000);
  const bench::Row* full = report.find("full pipeline (avg/4)");
  if (full == nullptr) {
    o.expect(false, "no pipeline row");
    return o;
  }
  o.expect(full->mean_us < 100.0, "pipeline mean " + std::to_string(full->mean_us) + " us");
  for (const bench::Row& row : report.rows) {
    if (row.group != "cokleisli" || &row == full) continue;
    o.expect(full->mean_us >= row.mean_us, "pipeline " + std::to_string(full->mean_us) + " us < " + row.name + " " +
                                               std::to_string(row.mean_us) + " us");
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "pipeline mean %.2f us", full->mean_us);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome harmony_idempotence() {
  Outcome o;
  laws::Options opts;
  opts.cases = 1000;
  for (const auto& r : laws::harmony_laws(opts)) {
    if (r.name.find("idempotent") != std::string::npos) o.expect(r.passed && r.cases == 1000, laws::format(r));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "gradation table fidelity", 1.0, gradation_fidelity},
      {2, "roundtrip on non-deleting patterns only", 0, roundtrip},
      {3, "comonad, writer and monoid laws", 30.0, laws_suite},
      {4, "writer pipeline equals sentinel pipeline", 0, writer_sentinel},
      {5, "pipeline goldens", 0, pipeline_goldens},
      {6, "generator goldens", 0, generator_goldens},
      {7, "CG scenarios and safety", 0, cg_scenarios},
      {8, "CG sequential equals composed", 0, cg_composition},
      {9, "pipeline latency", 0, performance},
      {10, "harmony idempotence", 0, harmony_idempotence},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.max_seconds > 0 && seconds >= c.max_seconds) {
      outcome.expect(false, "took " + std::to_string(seconds) + " s");
    }
    failures += outcome.ok ? 0 : 1;
    std::printf("[%s] %2d %s (%.3f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.number, c.title.c_str(), seconds,
                outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
