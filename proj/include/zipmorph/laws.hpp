#pragma once

// Randomized law checks for the zipper comonad, the deletion monoid, the
// writer comonad, pipeline composition and CG composition/safety.
//
// Each check draws `cases` random instances from a seeded generator. A
// failing instance is shrunk greedily (drop elements, zero values) before it
// is reported.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace zipmorph::laws {

struct LawResult {
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
  std::string counterexample;  // minimized, empty when passed
};

struct Options {
  std::uint64_t seed = 0x5eed;
  std::size_t cases = 1000;
  std::size_t max_length = 20;
};

std::vector<LawResult> zipper_laws(const Options& opts);
std::vector<LawResult> deletion_monoid_laws(const Options& opts);
std::vector<LawResult> writer_laws(const Options& opts);
std::vector<LawResult> pipeline_laws(const Options& opts);
std::vector<LawResult> harmony_laws(const Options& opts);
std::vector<LawResult> cg_laws(const Options& opts);

std::vector<LawResult> all_laws(const Options& opts);

// "PASS name (N cases)" / "FAIL name: counterexample"
std::string format(const LawResult& result);

}  // namespace zipmorph::laws
