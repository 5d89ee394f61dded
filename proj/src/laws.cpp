#include "zipmorph/laws.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "zipmorph/cg.hpp"
#include "zipmorph/deletion_writer.hpp"
#include "zipmorph/pipeline.hpp"
#include "zipmorph/text.hpp"
#include "zipmorph/vowel_rules.hpp"
#include "zipmorph/zipper.hpp"

namespace zipmorph::laws {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Deterministic schedule so that every (length, focus) pair up to max_length
// is visited once enough cases are run.
std::pair<std::size_t, std::size_t> shape_for_case(std::size_t i, std::size_t max_length) {
  const std::size_t length = 1 + i % max_length;
  const std::size_t focus = (i / max_length) % length;
  return {length, focus};
}

// Affine arrow over Zipper<int>: reads the focus, both neighbours, the
// position and the left-context sum.
struct IntArrow {
  long a, b, c, d, e;

  int operator()(const Zipper<int>& z) const {
    const int* l = z.peek_left();
    const int* r = z.peek_right();
    const long left_sum = std::accumulate(z.left().begin(), z.left().end(), 0L);
    const long v = a * z.extract() + b * (l ? *l : 0) + c * (r ? *r : 0) +
                   d * static_cast<long>(z.position()) + e * left_sum;
    return static_cast<int>(((v % 101) + 101) % 101);
  }

  std::string describe() const {
    std::ostringstream os;
    os << "f(z) = (" << a << "*focus + " << b << "*left1 + " << c << "*right1 + " << d << "*pos + " << e
       << "*sum(left)) mod 101";
    return os.str();
  }
};

IntArrow random_int_arrow(Rng& rng) {
  auto coeff = [&] { return static_cast<long>(pick(rng, 0, 12)) - 6; };
  return {coeff(), coeff(), coeff(), coeff(), coeff()};
}

std::vector<int> random_ints(Rng& rng, std::size_t length) {
  std::vector<int> out(length);
  for (int& v : out) v = static_cast<int>(pick(rng, 0, 100));
  return out;
}

std::string render(const std::vector<int>& seq, std::size_t focus) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) os << ",";
    if (i == focus) os << "*";
    os << seq[i];
  }
  os << "] (focus " << focus << ")";
  return os.str();
}

// Greedy shrink of a focused sequence: drop elements, then zero them, while
// the property keeps failing.
template <class T>
void shrink(std::vector<T>& seq, std::size_t& focus, const std::function<bool(const std::vector<T>&, std::size_t)>& fails,
            const T& zero) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < seq.size() && seq.size() > 1; ++i) {
      std::vector<T> candidate = seq;
      candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
      std::size_t f = focus > i ? focus - 1 : std::min(focus, candidate.size() - 1);
      if (fails(candidate, f)) {
        seq = std::move(candidate);
        focus = f;
        progress = true;
        break;
      }
    }
    if (progress) continue;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] == zero) continue;
      std::vector<T> candidate = seq;
      candidate[i] = zero;
      if (fails(candidate, focus)) {
        seq = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
}

// Runs `cases` instances of a focused-sequence property over ints.
LawResult check_int_zipper(const std::string& name, const Options& opts,
                           const std::function<bool(const Zipper<int>&, const IntArrow&, const IntArrow&)>& holds) {
  LawResult result{name, opts.cases, true, {}};
  Rng rng(opts.seed ^ std::hash<std::string>{}(name));
  for (std::size_t i = 0; i < opts.cases; ++i) {
    auto [length, focus] = shape_for_case(i, opts.max_length);
    std::vector<int> seq = random_ints(rng, length);
    const IntArrow f = random_int_arrow(rng);
    const IntArrow g = random_int_arrow(rng);
    auto fails = [&](const std::vector<int>& s, std::size_t at) {
      return !holds(Zipper<int>::from_sequence(s, at), f, g);
    };
    if (fails(seq, focus)) {
      shrink<int>(seq, focus, fails, 0);
      result.passed = false;
      result.counterexample = render(seq, focus) + "; " + f.describe() + "; g: " + g.describe();
      break;
    }
  }
  return result;
}

// ---------------------------------------------------------------- writer ---

constexpr std::u32string_view kAlphabet = U"aeiouyäökptmnlrsdgvhj";

std::u32string random_word(Rng& rng, std::size_t length) {
  std::u32string out(length, U'a');
  for (char32_t& c : out) c = kAlphabet[pick(rng, 0, kAlphabet.size() - 1)];
  return out;
}

// Rewrites the focus from a small alphabet and sometimes logs a deletion at
// the focus or at a fixed offset from it (wrapped into range).
struct DeletingArrow {
  std::size_t a, b, c;
  std::size_t modulus, residue, shift;

  Emission operator()(const DeletionSet&, const CharZipper& z) const {
    const std::size_t focus = static_cast<std::size_t>(z.extract());
    const char32_t* l = z.peek_left();
    const std::size_t left = l ? static_cast<std::size_t>(*l) : 0;
    const char32_t out = kAlphabet[(a * focus + b * left + c * z.position()) % kAlphabet.size()];
    DeletionSet deletions;
    if ((focus + z.position()) % modulus == residue) {
      deletions = DeletionSet::single((z.position() + shift) % z.size());
    }
    return {deletions, out};
  }

  std::string describe() const {
    std::ostringstream os;
    os << "writer arrow(a=" << a << ", b=" << b << ", c=" << c << ", delete when (focus+pos)%" << modulus
       << "==" << residue << " at pos+" << shift << ")";
    return os.str();
  }
};

DeletingArrow random_deleting_arrow(Rng& rng) {
  const std::size_t modulus = pick(rng, 2, 5);
  return {pick(rng, 0, 7), pick(rng, 0, 7), pick(rng, 0, 7), modulus, pick(rng, 0, modulus - 1), pick(rng, 0, 2)};
}

std::string render(const std::u32string& word, std::size_t focus, const DeletionSet& log) {
  return "word \"" + encode_utf8(word) + "\" focus " + std::to_string(focus) + " log {" + log.to_string() + "}";
}

DeletionSet random_log(Rng& rng, std::size_t length) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < length; ++i) {
    if (pick(rng, 0, 3) == 0) positions.push_back(i);
  }
  return DeletionSet(std::move(positions));
}

LawResult check_writer(const std::string& name, const Options& opts,
                       const std::function<bool(const WriterZipper&, const WriterArrow&, const WriterArrow&)>& holds) {
  LawResult result{name, opts.cases, true, {}};
  Rng rng(opts.seed ^ std::hash<std::string>{}(name));
  for (std::size_t i = 0; i < opts.cases; ++i) {
    auto [length, focus] = shape_for_case(i, opts.max_length);
    std::u32string word = random_word(rng, length);
    const DeletionSet log = random_log(rng, length);
    const DeletingArrow f = random_deleting_arrow(rng);
    const DeletingArrow g = random_deleting_arrow(rng);
    auto fails = [&](const std::vector<char32_t>& w, std::size_t at) {
      std::vector<std::size_t> kept;
      for (std::size_t p : log.positions()) {
        if (p < w.size()) kept.push_back(p);
      }
      const WriterZipper wz{DeletionSet(kept), CharZipper::from_sequence(w, at)};
      return !holds(wz, f, g);
    };
    std::vector<char32_t> chars(word.begin(), word.end());
    if (fails(chars, focus)) {
      shrink<char32_t>(chars, focus, fails, U'a');
      result.passed = false;
      result.counterexample = render(std::u32string(chars.begin(), chars.end()), focus, log) + "; f: " +
                              f.describe() + "; g: " + g.describe();
      break;
    }
  }
  return result;
}

// -------------------------------------------------------------- pipeline ---

// Stems built from CV syllables with gradation-relevant clusters, followed
// by an archiphoneme suffix.
std::u32string random_underlying_word(Rng& rng) {
  static constexpr std::array<std::u32string_view, 22> onsets{
      U"k", U"t", U"p", U"m", U"n", U"l", U"r", U"s", U"v", U"h", U"j", U"pp",
      U"tt", U"kk", U"mp", U"lt", U"nt", U"rt", U"nk", U"ss", U"", U"d"};
  static constexpr std::array<std::u32string_view, 10> vowels{U"a", U"e", U"i", U"o", U"u", U"y", U"ä",
                                                              U"ö", U"aa", U"ie"};
  static constexpr std::array<std::u32string_view, 10> suffixes{U"ssA",  U"stA",   U"llA", U"ltA", U"nA",
                                                                U"stAVn", U"ssAVn", U"Vn",  U"kO",  U"tUt"};
  std::u32string word;
  const std::size_t syllables = pick(rng, 1, 3);
  for (std::size_t s = 0; s < syllables; ++s) {
    word += onsets[pick(rng, 0, onsets.size() - 1)];
    word += vowels[pick(rng, 0, vowels.size() - 1)];
  }
  word += suffixes[pick(rng, 0, suffixes.size() - 1)];
  return word;
}

}  // namespace

std::vector<LawResult> zipper_laws(const Options& opts) {
  std::vector<LawResult> out;
  out.push_back(check_int_zipper("zipper L1: extend extract = id", opts,
                                 [](const Zipper<int>& z, const IntArrow&, const IntArrow&) {
                                   return z.extend([](const Zipper<int>& w) { return w.extract(); }) == z;
                                 }));
  out.push_back(check_int_zipper("zipper L2: extract . extend f = f", opts,
                                 [](const Zipper<int>& z, const IntArrow& f, const IntArrow&) {
                                   return z.extend(f).extract() == f(z);
                                 }));
  out.push_back(check_int_zipper(
      "zipper L3: extend g . extend f = extend (g . extend f)", opts,
      [](const Zipper<int>& z, const IntArrow& f, const IntArrow& g) {
        const auto lhs = z.extend(f).extend(g);
        const auto rhs = z.extend([&](const Zipper<int>& w) { return g(w.extend(f)); });
        return lhs == rhs;
      }));
  out.push_back(check_int_zipper("zipper extend preserves length and focus", opts,
                                 [](const Zipper<int>& z, const IntArrow& f, const IntArrow&) {
                                   const auto e = z.extend(f);
                                   return e.size() == z.size() && e.position() == z.position();
                                 }));
  out.push_back(check_int_zipper("zipper from_sequence . to_sequence = id", opts,
                                 [](const Zipper<int>& z, const IntArrow&, const IntArrow&) {
                                   return Zipper<int>::from_sequence(z.to_sequence(), z.position()) == z;
                                 }));
  return out;
}

std::vector<LawResult> deletion_monoid_laws(const Options& opts) {
  struct Law {
    std::string name;
    std::function<bool(const DeletionSet&, const DeletionSet&, const DeletionSet&)> holds;
  };
  const std::vector<Law> laws{
      {"deletion monoid: identity",
       [](const DeletionSet& a, const DeletionSet&, const DeletionSet&) {
         return set_union(a, empty_deletions()) == a && set_union(empty_deletions(), a) == a;
       }},
      {"deletion monoid: associativity",
       [](const DeletionSet& a, const DeletionSet& b, const DeletionSet& c) {
         return set_union(set_union(a, b), c) == set_union(a, set_union(b, c));
       }},
      {"deletion monoid: commutativity",
       [](const DeletionSet& a, const DeletionSet& b, const DeletionSet&) {
         return set_union(a, b) == set_union(b, a);
       }},
      {"deletion monoid: idempotence",
       [](const DeletionSet& a, const DeletionSet&, const DeletionSet&) { return set_union(a, a) == a; }},
  };
  std::vector<LawResult> out;
  for (const Law& law : laws) {
    LawResult result{law.name, opts.cases, true, {}};
    Rng rng(opts.seed ^ std::hash<std::string>{}(law.name));
    for (std::size_t i = 0; i < opts.cases; ++i) {
      const DeletionSet a = random_log(rng, opts.max_length);
      const DeletionSet b = random_log(rng, opts.max_length);
      const DeletionSet c = random_log(rng, opts.max_length);
      if (!law.holds(a, b, c)) {
        result.passed = false;
        result.counterexample = "a={" + a.to_string() + "} b={" + b.to_string() + "} c={" + c.to_string() + "}";
        break;
      }
    }
    out.push_back(result);
  }
  return out;
}

std::vector<LawResult> writer_laws(const Options& opts) {
  std::vector<LawResult> out;
  out.push_back(check_writer("writer L1: extend_W extract_W = id", opts,
                             [](const WriterZipper& wz, const WriterArrow&, const WriterArrow&) {
                               return writer_extend(writer_identity(), wz) == wz;
                             }));
  out.push_back(check_writer("writer L2: extract_W . extend_W f = snd . f", opts,
                             [](const WriterZipper& wz, const WriterArrow& f, const WriterArrow&) {
                               return writer_extract(writer_extend(f, wz)) == f(wz.log, wz.zipper).value;
                             }));
  out.push_back(check_writer(
      "writer L3: log components associate", opts,
      [](const WriterZipper& wz, const WriterArrow& f, const WriterArrow& g) {
        // (w u D_f) u D_g == w u (D_f u D_g)
        const WriterZipper after_f = writer_extend(f, wz);
        const WriterZipper after_g = writer_extend(g, after_f);
        const auto seq = wz.zipper.to_sequence();
        const auto seq_f = after_f.zipper.to_sequence();
        DeletionSet d_f;
        DeletionSet d_g;
        for (std::size_t i = 0; i < seq.size(); ++i) {
          d_f.merge(f(wz.log, CharZipper::from_sequence(seq, i)).deletions);
          d_g.merge(g(after_f.log, CharZipper::from_sequence(seq_f, i)).deletions);
        }
        return after_g.log == set_union(set_union(wz.log, d_f), d_g) &&
               after_g.log == set_union(wz.log, set_union(d_f, d_g));
      }));
  out.push_back(check_writer(
      "writer L3: extend_W g . extend_W f = extend_W (f >=> g)", opts,
      [](const WriterZipper& wz, const WriterArrow& f, const WriterArrow& g) {
        const WriterZipper sequential = writer_extend(g, writer_extend(f, wz));
        const WriterZipper composed = writer_extend(compose(f, g), wz);
        return sequential == composed;
      }));
  out.push_back(check_writer("writer: compose with identity", opts,
                             [](const WriterZipper& wz, const WriterArrow& f, const WriterArrow&) {
                               const WriterZipper plain = writer_extend(f, wz);
                               return writer_extend(compose(writer_identity(), f), wz) == plain &&
                                      writer_extend(compose(f, writer_identity()), wz) == plain;
                             }));
  return out;
}

std::vector<LawResult> pipeline_laws(const Options& opts) {
  std::vector<LawResult> out;
  for (Grade grade : {Grade::Weak, Grade::Strong}) {
    LawResult seq_vs_comp{"pipeline (" + std::string(to_string(grade)) + "): sequential extends = composed arrow",
                          opts.cases, true, {}};
    LawResult focus_free{"pipeline (" + std::string(to_string(grade)) + "): output independent of start focus",
                         opts.cases, true, {}};
    Rng rng(opts.seed ^ (grade == Grade::Weak ? 0x77 : 0x55));
    const Pipeline pipe = Pipeline::standard(grade);
    const WriterArrow whole = pipe.composed();
    for (std::size_t i = 0; i < opts.cases; ++i) {
      const std::u32string word = random_underlying_word(rng);
      const std::size_t focus = pick(rng, 0, word.size() - 1);
      WriterZipper state{{}, CharZipper::from_sequence(word, focus)};
      for (const Stage& stage : pipe.stages()) state = writer_extend(stage.arrow, state);
      const WriterZipper one_pass = writer_extend(whole, WriterZipper{{}, CharZipper::from_sequence(word, focus)});
      if (seq_vs_comp.passed && !(state == one_pass)) {
        seq_vs_comp.passed = false;
        seq_vs_comp.counterexample = render(word, focus, {});
      }
      if (focus_free.passed && pipe.run_from(word, focus).surface != pipe.run(word).surface) {
        focus_free.passed = false;
        focus_free.counterexample = render(word, focus, {});
      }
    }
    out.push_back(seq_vs_comp);
    out.push_back(focus_free);
  }
  return out;
}

std::vector<LawResult> harmony_laws(const Options& opts) {
  static constexpr std::u32string_view kLower = U"abdefghijklmnoprstuvyäö";
  LawResult idem{"harmony: idempotent on resolved text", opts.cases, true, {}};
  LawResult transparent{"harmony: neutral vowels are transparent", opts.cases, true, {}};
  Rng rng(opts.seed ^ 0x4a11);
  for (std::size_t i = 0; i < opts.cases; ++i) {
    std::u32string word(pick(rng, 1, opts.max_length), U'a');
    for (char32_t& c : word) c = kLower[pick(rng, 0, kLower.size() - 1)];
    const auto resolved = CharZipper::from_sequence(word, 0).extend(harmony_arrow).to_sequence();
    if (idem.passed && std::u32string(resolved.begin(), resolved.end()) != word) {
      idem.passed = false;
      idem.counterexample = "\"" + encode_utf8(word) + "\"";
    }

    // trigger vowel, then consonants/neutral vowels, then the archiphoneme
    const std::u32string trigger = pick(rng, 0, 1) == 0 ? U"a" : U"ä";
    std::u32string padding;
    const std::size_t pads = pick(rng, 0, 6);
    for (std::size_t p = 0; p < pads; ++p) padding += U"eitsk"[pick(rng, 0, 4)];
    const std::u32string base = U"k" + trigger + U"sA";
    const std::u32string padded = U"k" + trigger + padding + U"sA";
    const auto a = CharZipper::from_sequence(base, base.size() - 1);
    const auto b = CharZipper::from_sequence(padded, padded.size() - 1);
    if (transparent.passed && harmony_arrow(a) != harmony_arrow(b)) {
      transparent.passed = false;
      transparent.counterexample = "\"" + encode_utf8(padded) + "\" vs \"" + encode_utf8(base) + "\"";
    }
  }
  return {idem, transparent};
}

namespace {

cg::Sentence random_sentence(Rng& rng, std::size_t max_tokens) {
  static constexpr std::array<std::string_view, 5> kTags{"noun", "verb", "adj", "adv", "num"};
  static constexpr std::array<std::string_view, 4> kBases{"kuusi", "voi", "ei", "olla"};
  cg::Sentence s;
  const std::size_t tokens = pick(rng, 1, max_tokens);
  for (std::size_t t = 0; t < tokens; ++t) {
    std::vector<cg::Reading> readings;
    const std::size_t count = pick(rng, 1, 4);
    for (std::size_t r = 0; r < count; ++r) {
      readings.push_back({std::string(kBases[pick(rng, 0, kBases.size() - 1)]),
                          std::string(kTags[pick(rng, 0, kTags.size() - 1)]),
                          {}});
    }
    s.emplace_back("w" + std::to_string(t), std::move(readings));
  }
  return s;
}

cg::Predicate random_predicate(Rng& rng) {
  static constexpr std::array<std::string_view, 5> kTags{"noun", "verb", "adj", "adv", "num"};
  static constexpr std::array<std::string_view, 4> kBases{"kuusi", "voi", "ei", "olla"};
  if (pick(rng, 0, 3) == 0) {
    return {cg::Predicate::Field::Baseform, {std::string(kBases[pick(rng, 0, kBases.size() - 1)])}};
  }
  cg::Predicate p{cg::Predicate::Field::Pos, {std::string(kTags[pick(rng, 0, kTags.size() - 1)])}};
  if (pick(rng, 0, 4) == 0) p.values.emplace_back(kTags[pick(rng, 0, kTags.size() - 1)]);
  return p;
}

cg::Rule random_rule(Rng& rng) {
  cg::Rule rule{pick(rng, 0, 1) == 0 ? cg::Action::Select : cg::Action::Remove, random_predicate(rng), std::nullopt};
  if (pick(rng, 0, 4) != 0) {
    rule.condition = cg::Condition{pick(rng, 0, 3) == 0, static_cast<int>(pick(rng, 0, 4)) - 2, random_predicate(rng)};
  }
  return rule;
}

std::string render(const cg::Sentence& s) {
  std::string out;
  for (const auto& rs : s) out += rs.surface() + cg::describe(rs) + " ";
  return out;
}

}  // namespace

std::vector<LawResult> cg_laws(const Options& opts) {
  LawResult safety{"cg: no reading set is ever emptied", opts.cases, true, {}};
  LawResult monotone{"cg: readings are only removed", opts.cases, true, {}};
  LawResult equivalence{"cg: run_cg [r1, r2] = extend (r1 >=> r2)", opts.cases, true, {}};
  Rng rng(opts.seed ^ 0xc6);
  for (std::size_t i = 0; i < opts.cases; ++i) {
    const cg::Sentence sentence = random_sentence(rng, 8);
    std::vector<cg::Rule> rules;
    const std::size_t count = pick(rng, 1, 4);
    for (std::size_t r = 0; r < count; ++r) rules.push_back(random_rule(rng));

    cg::Sentence current = sentence;
    for (const cg::Rule& rule : rules) {
      current = cg::run_cg(current, {rule});
      for (std::size_t t = 0; t < current.size() && safety.passed; ++t) {
        if (current[t].readings().empty()) {
          safety.passed = false;
          safety.counterexample = render(sentence) + "| " + rule.to_string();
        }
        for (const cg::Reading& r : current[t].readings()) {
          const auto& orig = sentence[t].readings();
          if (monotone.passed && std::find(orig.begin(), orig.end(), r) == orig.end()) {
            monotone.passed = false;
            monotone.counterexample = render(sentence) + "| " + rule.to_string();
          }
        }
      }
    }

    const cg::Rule& r1 = rules.front();
    const cg::Rule& r2 = rules.back();
    const cg::Sentence sequential = cg::run_cg(sentence, {r1, r2});
    const auto composed = cg::SentenceZipper::from_sequence(sentence, 0)
                              .extend(cg::compose(cg::rule_arrow(r1), cg::rule_arrow(r2)))
                              .to_sequence();
    if (equivalence.passed && sequential != composed) {
      equivalence.passed = false;
      equivalence.counterexample = render(sentence) + "| " + r1.to_string() + " ; " + r2.to_string();
    }
  }
  return {safety, monotone, equivalence};
}

std::vector<LawResult> all_laws(const Options& opts) {
  std::vector<LawResult> out;
  for (auto suite : {zipper_laws, deletion_monoid_laws, writer_laws, pipeline_laws, harmony_laws, cg_laws}) {
    auto part = suite(opts);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::string format(const LawResult& result) {
  if (result.passed) return "PASS " + result.name + " (" + std::to_string(result.cases) + " cases)";
  return "FAIL " + result.name + ": " + result.counterexample;
}

}  // namespace zipmorph::laws
