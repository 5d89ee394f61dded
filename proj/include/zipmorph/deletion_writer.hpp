#pragma once

// Writer comonad over the character zipper: a deletion log (a set of absolute
// positions, combined by union) paired with a Zipper<char32_t>.
//
// Arrows return (deletions, character). A deleting arrow keeps the original
// character in the zipper and only records the position; the zipper never
// shrinks until materialize() removes every logged position in one step.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "zipmorph/zipper.hpp"

namespace zipmorph {

using CharZipper = Zipper<char32_t>;

// Sorted, duplicate-free set of 0-based positions into the original word.
class DeletionSet {
 public:
  DeletionSet() = default;
  DeletionSet(std::initializer_list<std::size_t> positions);
  explicit DeletionSet(std::vector<std::size_t> positions);

  static DeletionSet single(std::size_t position) { return DeletionSet{position}; }

  bool empty() const noexcept { return positions_.empty(); }
  std::size_t size() const noexcept { return positions_.size(); }
  bool contains(std::size_t position) const;
  const std::vector<std::size_t>& positions() const noexcept { return positions_; }

  // In-place union.
  DeletionSet& merge(const DeletionSet& other);

  // "3,4" style rendering; empty set renders as the empty string.
  std::string to_string() const;

  friend bool operator==(const DeletionSet&, const DeletionSet&) = default;

 private:
  std::vector<std::size_t> positions_;
};

DeletionSet empty_deletions();
DeletionSet set_union(const DeletionSet& a, const DeletionSet& b);

struct WriterZipper {
  DeletionSet log;
  CharZipper zipper;

  friend bool operator==(const WriterZipper&, const WriterZipper&) = default;
};

struct Emission {
  DeletionSet deletions;
  char32_t value;

  friend bool operator==(const Emission&, const Emission&) = default;
};

// The incoming log is passed unchanged to every refocusing during one extend.
using WriterArrow = std::function<Emission(const DeletionSet& log, const CharZipper& zipper)>;
using CharArrow = std::function<char32_t(const CharZipper&)>;

class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

char32_t writer_extract(const WriterZipper& wz);

// writer_extract viewed as an arrow: never deletes, returns the focus.
WriterArrow writer_identity();

WriterArrow lift_pure(CharArrow f);

WriterZipper writer_extend(const WriterArrow& f, const WriterZipper& wz);

// Removes every logged position. Throws InvariantError if a logged position is
// outside the zipper.
std::u32string materialize(const WriterZipper& wz);

}  // namespace zipmorph
