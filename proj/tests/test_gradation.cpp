#include <doctest.h>

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zipmorph/gradation.hpp"
#include "zipmorph/text.hpp"

using namespace zipmorph;

namespace {

// The gradation table transcribed by hand, in KOTUS row order: strong window, weak window,
// example in, example out. "V" = any vowel, "0" = deleted.
struct Row {
  int index;
  std::u32string strong;
  std::u32string weak;
  std::u32string in;
  std::u32string out;
};
const std::vector<Row> kTable{
    {1, U"pp", U"p0", U"kaappi", U"kaapi"}, {2, U"tt", U"t0", U"matto", U"mato"},
    {3, U"kk", U"k0", U"kukka", U"kuka"},   {4, U"Vp", U"Vv", U"tupa", U"tuva"},
    {5, U"Vt", U"Vd", U"katu", U"kadu"},    {6, U"Vk", U"V0", U"puku", U"puu"},
    {7, U"mp", U"mm", U"kampa", U"kamma"},  {8, U"lt", U"ll", U"kulta", U"kulla"},
    {9, U"nt", U"nn", U"ranta", U"ranna"},  {10, U"rt", U"rr", U"parta", U"parra"},
    {11, U"nk", U"ng", U"kenkä", U"kengä"},
};

bool deletes(const Row& r) { return r.weak[1] == U'0'; }

// Oracle for suppression: scan the anchored (non-wildcard) strong windows.
bool oracle_is_pos0_weak(char32_t focus, char32_t right) {
  for (const Row& r : kTable) {
    if (r.strong[0] != U'V' && r.strong[0] == focus && r.strong[1] == right) return true;
  }
  return false;
}

CharZipper at(const std::u32string& s, std::size_t i) { return CharZipper::from_sequence(s, i); }

}  // namespace

TEST_CASE("pattern table matches the KOTUS rows") {
  const auto by_index = patterns_by_kotus_index();
  REQUIRE(by_index.size() == 11);
  for (std::size_t i = 0; i < kTable.size(); ++i) {
    const GradationPattern& p = *by_index[i];
    const Row& row = kTable[i];
    CAPTURE(row.index);
    CHECK(p.kotus_index == row.index);
    CHECK(decode_nfc(p.strong[0].render() + p.strong[1].render()) == row.strong);
    CHECK(decode_nfc(p.weak[0].render() + p.weak[1].render()) == row.weak);
    CHECK(decode_nfc(p.example_strong) == row.in);
    CHECK(decode_nfc(p.example_weak) == row.out);
    CHECK(p.deletes() == deletes(row));
  }
}

TEST_CASE("priority order: geminates, clusters, singles") {
  const auto patterns = gradation_patterns();
  std::vector<int> order;
  for (const auto& p : patterns) order.push_back(p.kotus_index);
  CHECK(order == std::vector<int>{1, 2, 3, 7, 8, 9, 10, 11, 4, 5, 6});
  for (std::size_t i = 0; i < patterns.size(); ++i) CHECK(patterns[i].priority_rank == static_cast<int>(i));
  for (const auto& p : patterns) {
    CHECK((p.type == PatternType::QualitativeSingle) == (p.strong[0].kind == SlotKind::AnyVowel));
  }
}

TEST_CASE("is_pos0") {
  CHECK(is_pos0(U'p', U'p', Grade::Weak));
  CHECK(oracle_is_pos0_weak(U'n', U't'));
  CHECK(is_pos0(U'n', U't', Grade::Weak));
  CHECK_FALSE(is_pos0(U'p', std::nullopt, Grade::Weak));
  CHECK(is_pos0(U'm', U'm', Grade::Strong));
  CHECK_FALSE(is_pos0(U'a', U'p', Grade::Weak));

  const std::u32string alphabet = U"aeiouyäöhjklmnprstvdg";
  for (char32_t f : alphabet) {
    for (char32_t r : alphabet) {
      CAPTURE(static_cast<unsigned>(f));
      CAPTURE(static_cast<unsigned>(r));
      CHECK(is_pos0(f, r, Grade::Weak) == oracle_is_pos0_weak(f, r));
    }
  }
}

TEST_CASE("find_pattern") {
  const GradationPattern* pp = find_pattern(U'p', U'p', Grade::Weak);
  REQUIRE(pp);
  CHECK(pp->kotus_index == 1);
  const GradationPattern* nt = find_pattern(U'n', U't', Grade::Weak);
  REQUIRE(nt);
  CHECK(nt->kotus_index == 9);
  CHECK(find_pattern(U's', U't', Grade::Weak) == nullptr);
  CHECK(find_pattern(std::nullopt, U't', Grade::Weak) == nullptr);
  CHECK(find_pattern(U'u', U'v', Grade::Strong)->kotus_index == 4);
  CHECK(find_pattern(U'p', U'p', Grade::Strong) == nullptr);
}

TEST_CASE("gradate_at follows suppression, match, keep") {
  const auto first_p = gradate_at(at(U"kaappi", 3), Grade::Weak);
  CHECK(first_p.kind == GradationOutcome::Kind::Keep);
  CHECK(first_p.value == U'p');

  const auto second_p = gradate_at(at(U"kaappi", 4), Grade::Weak);
  CHECK(second_p.kind == GradationOutcome::Kind::Delete);
  CHECK(second_p.value == U'p');

  const auto tupa = gradate_at(at(U"tupa", 2), Grade::Weak);
  CHECK(tupa.kind == GradationOutcome::Kind::Replace);
  CHECK(tupa.value == U'v');

  // one outcome per position
  const std::u32string w = U"kaappi";
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto o = gradate_at(at(w, i), Grade::Weak);
    CHECK((o.kind == GradationOutcome::Kind::Delete) == (i == 4));
  }
}

TEST_CASE("gradation arrow over whole words") {
  const WriterZipper start{{}, at(U"puku", 0)};
  CHECK(materialize(writer_extend(gradation_arrow(Grade::Weak), start)) == U"puu");

  const auto talo = writer_extend(gradation_arrow(Grade::Weak), WriterZipper{{}, at(U"talo", 0)});
  CHECK(talo.log.empty());
  CHECK(materialize(talo) == U"talo");

  // positions past the domain are left alone
  const auto limited = writer_extend(gradation_arrow(Grade::Weak, 2), WriterZipper{{}, at(U"puku", 0)});
  CHECK(materialize(limited) == U"puku");
}

TEST_CASE("weaken reproduces every table example") {
  for (const Row& row : kTable) {
    CAPTURE(row.index);
    CHECK(weaken(row.in) == row.out);
  }
  CHECK(weaken(U"kaappi") != U"kaavi");
  CHECK_THROWS(weaken(U""));
}

TEST_CASE("strengthen inverts exactly the non-deleting patterns") {
  for (const Row& row : kTable) {
    CAPTURE(row.index);
    const bool roundtrips = strengthen(weaken(row.in)) == row.in;
    CHECK(roundtrips == !deletes(row));
    if (deletes(row)) CHECK(strengthen(row.out) == row.out);
  }
  CHECK(strengthen(U"kamma") == U"kampa");
  CHECK(strengthen(U"kengä") == U"kenkä");
  CHECK(strengthen(weaken(U"kaappi")) == U"kaapi");
}

TEST_CASE("roundtrip holds on random stems built around non-deleting clusters") {
  // C V CLUSTER V with a consonant onset that cannot start a window.
  const std::vector<std::u32string> clusters{U"p", U"t", U"mp", U"lt", U"nt", U"rt", U"nk"};
  const std::u32string vowels = U"aeiouyäö";
  const std::u32string onsets = U"hjklmnrsv";
  std::mt19937 rng(1234);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  for (int i = 0; i < 500; ++i) {
    std::u32string w;
    w += onsets[pick(onsets.size())];
    w += vowels[pick(vowels.size())];
    w += clusters[pick(clusters.size())];
    w += vowels[pick(vowels.size())];
    CAPTURE(encode_utf8(w));
    CHECK(weaken(w) != w);
    CHECK(strengthen(weaken(w)) == w);
  }
}

TEST_CASE("matching is case-insensitive and preserves unreplaced case") {
  CHECK(weaken(U"KAMPA") == U"KAMmA");
  CHECK(weaken(U"Kaappi") == U"Kaapi");
}

TEST_CASE("unrecoverable sites flag possible deletions") {
  CHECK(unrecoverable_sites(U"kaapi") == std::vector<std::size_t>{2, 3});
  CHECK(unrecoverable_sites(U"puu") == std::vector<std::size_t>{2});
  CHECK(unrecoverable_sites(U"kampa").empty());
}
