#include "zipmorph/pipeline.hpp"

#include <utility>

#include "zipmorph/text.hpp"
#include "zipmorph/vowel_rules.hpp"

namespace zipmorph {

WriterArrow compose(WriterArrow f, WriterArrow g) {
  return [f = std::move(f), g = std::move(g)](const DeletionSet& log, const CharZipper& z) {
    const WriterZipper after_f = writer_extend(f, WriterZipper{log, z});
    Emission out = g(after_f.log, after_f.zipper);
    out.deletions = set_union(after_f.log, out.deletions);
    return out;
  };
}

Pipeline Pipeline::standard(Grade grade, std::optional<std::size_t> gradation_end) {
  return Pipeline({
      {"gradation", gradation_arrow(grade, gradation_end)},
      {"harmony", lift_pure(harmony_arrow)},
      {"possessive", lift_pure(possessive_arrow)},
  });
}

PipelineRun Pipeline::run(std::u32string_view word, bool trace) const { return run_from(word, 0, trace); }

PipelineRun Pipeline::run_from(std::u32string_view word, std::size_t focus, bool trace) const {
  if (word.empty()) throw ZipperError("pipeline: empty word");
  PipelineRun result;
  WriterZipper state{{}, CharZipper::from_sequence(std::u32string(word), focus)};

  auto record = [&](std::string name, const WriterZipper& wz) {
    const auto chars = wz.zipper.to_sequence();
    result.trace.push_back({std::move(name), std::u32string(chars.begin(), chars.end()), wz.log});
  };

  if (trace) record("input", state);
  for (const Stage& stage : stages_) {
    state = writer_extend(stage.arrow, state);
    if (trace) record(stage.name, state);
  }
  result.surface = materialize(state);
  if (trace) result.trace.push_back({"materialize", result.surface, {}});

  for (std::size_t i = 0; i < result.surface.size(); ++i) {
    if (is_archiphoneme(result.surface[i])) {
      result.diagnostics.push_back("unresolved archiphoneme " + encode_utf8(result.surface[i]) +
                                   " at output position " + std::to_string(i));
    }
  }
  return result;
}

WriterArrow Pipeline::composed() const {
  WriterArrow acc = writer_identity();
  for (const Stage& stage : stages_) acc = compose(std::move(acc), stage.arrow);
  return acc;
}

std::u32string run_pipeline(std::u32string_view word, Grade grade) {
  return Pipeline::standard(grade).run(word).surface;
}

std::string run_pipeline(std::string_view word, Grade grade) {
  return encode_utf8(run_pipeline(std::u32string_view(decode_nfc(word)), grade));
}

std::string format_trace(const std::vector<TraceRow>& rows) {
  std::string out;
  for (const TraceRow& row : rows) {
    out += row.stage;
    out += '\t';
    out += encode_utf8(row.chars);
    out += '\t';
    out += row.log.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace zipmorph
