#pragma once

// CoKleisli composition of writer arrows and the standard
// gradation >=> harmony >=> possessive pipeline.
//
// Gradation runs first because it may delete consonants; harmony and the
// possessive copy then scan a context in which deleted cells are still
// present but are never vowels, so their decisions are unaffected. A run
// performs one writer_extend per stage and a single materialize at the end.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zipmorph/deletion_writer.hpp"
#include "zipmorph/gradation.hpp"

namespace zipmorph {

// (f >=> g)(w, z) = g(extend_W f (w, z)), with f's accumulated deletions
// folded into the result so one extend of the composite logs the same set as
// extending f and then g.
WriterArrow compose(WriterArrow f, WriterArrow g);

struct Stage {
  std::string name;
  WriterArrow arrow;
};

struct TraceRow {
  std::string stage;
  std::u32string chars;
  DeletionSet log;
};

struct PipelineRun {
  std::u32string surface;
  std::vector<TraceRow> trace;  // filled only when tracing was requested
  std::vector<std::string> diagnostics;
};

class Pipeline {
 public:
  explicit Pipeline(std::vector<Stage> stages) : stages_(std::move(stages)) {}

  // [gradation(grade), harmony, possessive]. `gradation_end` limits gradation
  // to the first N characters (e.g. the stem in generation).
  static Pipeline standard(Grade grade, std::optional<std::size_t> gradation_end = std::nullopt);

  const std::vector<Stage>& stages() const noexcept { return stages_; }

  // Throws ZipperError on an empty word.
  PipelineRun run(std::u32string_view word, bool trace = false) const;

  // The focus of the starting zipper; output does not depend on it.
  PipelineRun run_from(std::u32string_view word, std::size_t focus, bool trace = false) const;

  // All stages folded into one arrow with compose().
  WriterArrow composed() const;

 private:
  std::vector<Stage> stages_;
};

std::u32string run_pipeline(std::u32string_view word, Grade grade);

// UTF-8 in/out; the input is NFC-normalized first.
std::string run_pipeline(std::string_view word, Grade grade);

// "stage<TAB>chars<TAB>sorted,deletions" per row.
std::string format_trace(const std::vector<TraceRow>& rows);

}  // namespace zipmorph
