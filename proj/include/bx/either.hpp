#pragma once

#include <utility>
#include <variant>

namespace bx {

/// Tagged union of a left or right value.
template <class L, class R>
class Either {
 public:
  static Either left(L value) { return Either(std::in_place_index<0>, std::move(value)); }
  static Either right(R value) { return Either(std::in_place_index<1>, std::move(value)); }

  bool is_left() const noexcept { return state_.index() == 0; }
  bool is_right() const noexcept { return state_.index() == 1; }

  const L& left_value() const { return std::get<0>(state_); }
  const R& right_value() const { return std::get<1>(state_); }

  template <class OnLeft, class OnRight>
  decltype(auto) match(OnLeft&& on_left, OnRight&& on_right) const {
    if (is_left()) return std::forward<OnLeft>(on_left)(left_value());
    return std::forward<OnRight>(on_right)(right_value());
  }

  friend bool operator==(const Either&, const Either&) = default;

 private:
  template <std::size_t I, class V>
  Either(std::in_place_index_t<I> tag, V&& value) : state_(tag, std::forward<V>(value)) {}

  std::variant<L, R> state_;
};

template <class L, class R>
Either<L, R> make_left(L value) {
  return Either<L, R>::left(std::move(value));
}

template <class L, class R>
Either<L, R> make_right(R value) {
  return Either<L, R>::right(std::move(value));
}

/// Collapses an Either whose branches share a type.
template <class T>
T join_either(const Either<T, T>& value) {
  return value.is_left() ? value.left_value() : value.right_value();
}

}  // namespace bx
