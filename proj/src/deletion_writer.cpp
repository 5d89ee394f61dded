#include "zipmorph/deletion_writer.hpp"

#include <algorithm>
#include <iterator>
#include <utility>

namespace zipmorph {

DeletionSet::DeletionSet(std::initializer_list<std::size_t> positions)
    : DeletionSet(std::vector<std::size_t>(positions)) {}

DeletionSet::DeletionSet(std::vector<std::size_t> positions) : positions_(std::move(positions)) {
  std::sort(positions_.begin(), positions_.end());
  positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
}

bool DeletionSet::contains(std::size_t position) const {
  return std::binary_search(positions_.begin(), positions_.end(), position);
}

DeletionSet& DeletionSet::merge(const DeletionSet& other) {
  if (other.positions_.empty()) return *this;
  if (positions_.empty()) {
    positions_ = other.positions_;
    return *this;
  }
  std::vector<std::size_t> merged;
  merged.reserve(positions_.size() + other.positions_.size());
  std::set_union(positions_.begin(), positions_.end(), other.positions_.begin(),
                 other.positions_.end(), std::back_inserter(merged));
  positions_ = std::move(merged);
  return *this;
}

std::string DeletionSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(positions_[i]);
  }
  return out;
}

DeletionSet empty_deletions() { return {}; }

DeletionSet set_union(const DeletionSet& a, const DeletionSet& b) {
  DeletionSet out = a;
  out.merge(b);
  return out;
}

char32_t writer_extract(const WriterZipper& wz) { return wz.zipper.extract(); }

WriterArrow writer_identity() {
  return [](const DeletionSet&, const CharZipper& z) { return Emission{{}, z.extract()}; };
}

WriterArrow lift_pure(CharArrow f) {
  return [f = std::move(f)](const DeletionSet&, const CharZipper& z) { return Emission{{}, f(z)}; };
}

WriterZipper writer_extend(const WriterArrow& f, const WriterZipper& wz) {
  DeletionSet log = wz.log;
  CharZipper next = wz.zipper.extend([&](const CharZipper& at) {
    Emission e = f(wz.log, at);
    log.merge(e.deletions);
    return e.value;
  });
  return WriterZipper{std::move(log), std::move(next)};
}

std::u32string materialize(const WriterZipper& wz) {
  const std::vector<char32_t> chars = wz.zipper.to_sequence();
  const auto& dead = wz.log.positions();
  if (!dead.empty() && dead.back() >= chars.size()) {
    throw InvariantError("materialize: logged position " + std::to_string(dead.back()) +
                         " outside word of length " + std::to_string(chars.size()));
  }
  std::u32string out;
  out.reserve(chars.size() - dead.size());
  auto next_dead = dead.begin();
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (next_dead != dead.end() && *next_dead == i) {
      ++next_dead;
      continue;
    }
    out.push_back(chars[i]);
  }
  return out;
}

}  // namespace zipmorph
