#pragma once

// Per-rule latency microbenchmarks. Timings are per call in microseconds.

#include <cstddef>
#include <string>
#include <vector>

namespace zipmorph::bench {

struct Row {
  std::string group;  // "cokleisli" or "cg"
  std::string name;
  double mean_us = 0;
  double std_us = 0;
};

struct Report {
  std::size_t iterations = 0;
  std::vector<Row> rows;

  const Row* find(const std::string& name) const;
};

// Words each component is timed on.
const std::vector<std::u32string>& pipeline_words();

Report run(std::size_t iterations);

// Tries to pin the calling thread to one core. Returns false if unsupported.
bool pin_to_one_core();

std::string format_table(const Report& report);

}  // namespace zipmorph::bench
