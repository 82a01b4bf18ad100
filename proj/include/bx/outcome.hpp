#pragma once

#include <concepts>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>

namespace bx {

/// Empty payload, used where an operation succeeds without producing data.
struct Unit {
  friend constexpr bool operator==(Unit, Unit) noexcept { return true; }
};

/// Failure carried by an Outcome. A single human-readable message.
struct Error {
  std::string message;

  friend bool operator==(const Error&, const Error&) = default;
};

inline Error failure(std::string message) { return Error{std::move(message)}; }

template <class T>
class Outcome;

namespace detail {
template <class T>
struct is_outcome : std::false_type {};
template <class T>
struct is_outcome<Outcome<T>> : std::true_type {};
}  // namespace detail

template <class T>
concept OutcomeType = detail::is_outcome<std::remove_cvref_t<T>>::value;

/// Success-or-error carrier returned by every lens function.
///
/// Exactly one of data/error is present. `bind` short-circuits on error
/// without invoking the continuation; `ok` is the monadic return.
template <class T>
class Outcome {
 public:
  using value_type = T;

  Outcome(const T& value) : state_(std::in_place_index<0>, value) {}
  Outcome(T&& value) : state_(std::in_place_index<0>, std::move(value)) {}
  Outcome(Error error) : state_(std::in_place_index<1>, std::move(error)) {}

  bool is_ok() const noexcept { return state_.index() == 0; }
  bool is_error() const noexcept { return !is_ok(); }
  explicit operator bool() const noexcept { return is_ok(); }

  /// Precondition: is_ok().
  const T& data() const& { return std::get<0>(state_); }
  T&& data() && { return std::get<0>(std::move(state_)); }

  /// Precondition: is_error().
  const Error& error() const& { return std::get<1>(state_); }
  const std::string& message() const { return error().message; }

  /// Monadic bind. `f` must return an Outcome.
  template <class F>
    requires std::invocable<F, const T&> && OutcomeType<std::invoke_result_t<F, const T&>>
  auto bind(F&& f) const& -> std::invoke_result_t<F, const T&> {
    if (is_ok()) return std::invoke(std::forward<F>(f), data());
    return error();
  }

  template <class F>
    requires std::invocable<F, T&&> && OutcomeType<std::invoke_result_t<F, T&&>>
  auto bind(F&& f) && -> std::invoke_result_t<F, T&&> {
    if (is_ok()) return std::invoke(std::forward<F>(f), std::get<0>(std::move(state_)));
    return std::get<1>(std::move(state_));
  }

  template <class F>
  auto map(F&& f) const& -> Outcome<std::invoke_result_t<F, const T&>> {
    if (is_ok()) return std::invoke(std::forward<F>(f), data());
    return error();
  }

  template <class OnOk, class OnError>
  decltype(auto) match(OnOk&& on_ok, OnError&& on_error) const& {
    if (is_ok()) return std::invoke(std::forward<OnOk>(on_ok), data());
    return std::invoke(std::forward<OnError>(on_error), error());
  }

  /// Replaces the error message, keeping success untouched.
  template <class F>
  Outcome with_context(F&& prefix) const& {
    if (is_ok()) return *this;
    return Error{std::invoke(std::forward<F>(prefix)) + error().message};
  }

  T value_or(T fallback) const& { return is_ok() ? data() : std::move(fallback); }

  friend bool operator==(const Outcome& a, const Outcome& b) { return a.state_ == b.state_; }

 private:
  std::variant<T, Error> state_;
};

template <class T>
Outcome<std::decay_t<T>> ok(T&& value) {
  return Outcome<std::decay_t<T>>(std::forward<T>(value));
}

/// True when both outcomes succeeded with equal data or both failed,
/// regardless of the error text.
template <class T>
bool same_result(const Outcome<T>& a, const Outcome<T>& b) {
  if (a.is_ok() != b.is_ok()) return false;
  return a.is_error() || a.data() == b.data();
}

}  // namespace bx
