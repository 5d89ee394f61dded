#pragma once

// ListZipper: a non-empty sequence with a distinguished focus.
//
// The left context is kept with the nearest neighbour at the back of the
// vector, so peeking one step left is O(1). For "kaappi" focused at 3:
//
//   left  = [k, a, a]   (left.back() == 'a', the immediate neighbour)
//   focus = p
//   right = [p, i]      (right.front() == 'p')
//
// extract() reads the focus; extend(f) applies a context-consuming function
// at every refocusing and returns a zipper of the results with the same
// length and focus position.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace zipmorph {

class ZipperError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class T>
class Zipper {
 public:
  using value_type = T;

  Zipper(std::vector<T> left, T focus, std::vector<T> right)
      : left_(std::move(left)), focus_(std::move(focus)), right_(std::move(right)) {}

  static Zipper from_sequence(std::span<const T> items, std::size_t focus_index) {
    if (items.empty()) {
      throw ZipperError("zipper: cannot focus an empty sequence");
    }
    if (focus_index >= items.size()) {
      throw ZipperError("zipper: focus index " + std::to_string(focus_index) +
                        " out of range for length " + std::to_string(items.size()));
    }
    return Zipper(std::vector<T>(items.begin(), items.begin() + focus_index),
                  items[focus_index],
                  std::vector<T>(items.begin() + focus_index + 1, items.end()));
  }

  static Zipper from_sequence(const std::vector<T>& items, std::size_t focus_index) {
    return from_sequence(std::span<const T>(items), focus_index);
  }

  template <class Char>
    requires std::is_same_v<T, Char>
  static Zipper from_sequence(const std::basic_string<Char>& items, std::size_t focus_index) {
    return from_sequence(std::span<const T>(items.data(), items.size()), focus_index);
  }

  const T& extract() const noexcept { return focus_; }

  std::size_t position() const noexcept { return left_.size(); }
  std::size_t size() const noexcept { return left_.size() + 1 + right_.size(); }

  const std::vector<T>& left() const noexcept { return left_; }
  const std::vector<T>& right() const noexcept { return right_; }

  // k-th neighbour (k >= 1) on either side, or nullptr past the boundary.
  const T* peek_left(std::size_t k = 1) const noexcept {
    return k >= 1 && k <= left_.size() ? &left_[left_.size() - k] : nullptr;
  }
  const T* peek_right(std::size_t k = 1) const noexcept {
    return k >= 1 && k <= right_.size() ? &right_[k - 1] : nullptr;
  }

  // Element at a signed offset from the focus; offset 0 is the focus.
  const T* at_offset(std::ptrdiff_t offset) const noexcept {
    if (offset == 0) return &focus_;
    if (offset < 0) return peek_left(static_cast<std::size_t>(-offset));
    return peek_right(static_cast<std::size_t>(offset));
  }

  std::optional<Zipper> move_left() const {
    if (left_.empty()) return std::nullopt;
    std::vector<T> left(left_.begin(), left_.end() - 1);
    std::vector<T> right;
    right.reserve(right_.size() + 1);
    right.push_back(focus_);
    right.insert(right.end(), right_.begin(), right_.end());
    return Zipper(std::move(left), left_.back(), std::move(right));
  }

  std::optional<Zipper> move_right() const {
    if (right_.empty()) return std::nullopt;
    std::vector<T> left(left_);
    left.push_back(focus_);
    return Zipper(std::move(left), right_.front(),
                  std::vector<T>(right_.begin() + 1, right_.end()));
  }

  std::vector<T> to_sequence() const {
    std::vector<T> out;
    out.reserve(size());
    out.insert(out.end(), left_.begin(), left_.end());
    out.push_back(focus_);
    out.insert(out.end(), right_.begin(), right_.end());
    return out;
  }

  // Element i of the result is f applied to this zipper refocused at i.
  // Refocusings are built directly from the flattened sequence: O(n) each,
  // O(n^2) overall, which is fine for word- and sentence-length inputs.
  template <class F>
  auto extend(F&& f) const -> Zipper<std::decay_t<std::invoke_result_t<F&, const Zipper&>>> {
    using U = std::decay_t<std::invoke_result_t<F&, const Zipper&>>;
    const std::vector<T> items = to_sequence();
    const std::size_t focus_at = position();
    std::vector<U> left;
    std::vector<U> right;
    left.reserve(focus_at);
    right.reserve(items.size() - focus_at - 1);
    std::optional<U> focus;
    for (std::size_t i = 0; i < items.size(); ++i) {
      U value = i == focus_at ? f(*this) : f(from_sequence(items, i));
      if (i < focus_at) {
        left.push_back(std::move(value));
      } else if (i == focus_at) {
        focus.emplace(std::move(value));
      } else {
        right.push_back(std::move(value));
      }
    }
    return Zipper<U>(std::move(left), std::move(*focus), std::move(right));
  }

  friend bool operator==(const Zipper&, const Zipper&) = default;

 private:
  std::vector<T> left_;
  T focus_;
  std::vector<T> right_;
};

}  // namespace zipmorph
