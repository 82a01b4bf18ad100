#pragma once

#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bx/lens.hpp"
#include "bx/regex.hpp"

namespace bx {

/// A string lens that also knows the languages it consumes on each side,
/// which is what lets `concat` split an input string into segments.
class StringLens {
 public:
  StringLens(SymmetricLens<std::string, std::string> lens, Regex left_language, Regex right_language)
      : lens_(std::move(lens)), left_(std::move(left_language)), right_(std::move(right_language)) {}

  const SymmetricLens<std::string, std::string>& lens() const noexcept { return lens_; }
  const Regex& left_language() const noexcept { return left_; }
  const Regex& right_language() const noexcept { return right_; }

  Outcome<std::string> create_right(const std::string& x) const { return lens_.create_right(x); }
  Outcome<std::string> create_left(const std::string& y) const { return lens_.create_left(y); }
  Outcome<std::string> put_right(const std::string& x, const std::string& y) const {
    return lens_.put_right(x, y);
  }
  Outcome<std::string> put_left(const std::string& y, const std::string& x) const {
    return lens_.put_left(y, x);
  }

  operator SymmetricLens<std::string, std::string>() const { return lens_; }

  /// The sequence of lenses this one was concatenated from; a lens that is
  /// not a concatenation is its own single part.
  std::vector<StringLens> parts() const {
    if (parts_) return *parts_;
    return {*this};
  }

 private:
  friend StringLens concat(std::vector<StringLens> lenses);

  SymmetricLens<std::string, std::string> lens_;
  Regex left_;
  Regex right_;
  std::shared_ptr<const std::vector<StringLens>> parts_;
};

/// Copies strings that fully match `pattern` on either side.
inline Outcome<StringLens> try_id_lens(std::string_view pattern) {
  auto compiled = Regex::compile(pattern);
  if (compiled.is_error()) return compiled.error();
  Regex regex = compiled.data();
  auto check = [regex](const std::string& s) -> Outcome<std::string> {
    if (!regex.full_match(s))
      return failure("id(\"" + regex.pattern() + "\"): input \"" + s + "\" does not match");
    return s;
  };
  SymmetricLens<std::string, std::string> lens(
      check, check, [check](const std::string& x, const std::string&) { return check(x); },
      [check](const std::string& y, const std::string&) { return check(y); });
  return StringLens(std::move(lens), regex, regex);
}

/// As try_id_lens; an invalid pattern is a programming error and throws.
inline StringLens id_lens(std::string_view pattern) {
  auto lens = try_id_lens(pattern);
  if (lens.is_error()) throw std::invalid_argument(lens.message());
  return std::move(lens).data();
}

namespace detail {

/// Lens whose left language is exactly `left_constant` and right language
/// exactly `right_constant`.  ins and del are the two mirrored cases.
inline StringLens constant_swap(std::string name, std::string left_constant, std::string right_constant) {
  auto expect = [name](const std::string& actual, const std::string& wanted,
                       const char* side) -> Outcome<Unit> {
    if (actual != wanted)
      return failure(name + ": expected " + side + " \"" + wanted + "\", got \"" + actual + "\"");
    return Unit{};
  };
  auto to_right = [=](const std::string& x) {
    return expect(x, left_constant, "left").map([&](Unit) { return right_constant; });
  };
  auto to_left = [=](const std::string& y) {
    return expect(y, right_constant, "right").map([&](Unit) { return left_constant; });
  };
  SymmetricLens<std::string, std::string> lens(
      to_right, to_left,
      [=](const std::string& x, const std::string& y) {
        return expect(y, right_constant, "right").bind([&](Unit) { return to_right(x); });
      },
      [=](const std::string& y, const std::string& x) {
        return expect(x, left_constant, "left").bind([&](Unit) { return to_left(y); });
      });
  return StringLens(std::move(lens), Regex::literal(left_constant), Regex::literal(right_constant));
}

}  // namespace detail

/// Inserts `constant` going right and removes it going left.
inline StringLens ins_lens(std::string constant) {
  return detail::constant_swap("ins(\"" + constant + "\")", "", constant);
}

/// Removes `constant` going right and restores it going left.
inline StringLens del_lens(std::string constant) {
  return detail::constant_swap("del(\"" + constant + "\")", constant, "");
}

namespace detail {

enum class Side { Left, Right };

/// Splits `input` into one segment per lens, each taken as the longest
/// prefix (at the current offset) in that lens's language.  No
/// backtracking across lens boundaries.
inline Outcome<std::vector<std::string>> split_segments(const std::vector<StringLens>& lenses,
                                                        const std::string& input, Side side) {
  std::vector<std::string> segments;
  segments.reserve(lenses.size());
  std::size_t offset = 0;
  for (std::size_t i = 0; i < lenses.size(); ++i) {
    const Regex& language = side == Side::Left ? lenses[i].left_language() : lenses[i].right_language();
    auto length = language.longest_prefix(input, offset);
    if (!length)
      return failure("concat: sub-lens " + std::to_string(i) + " (\"" + language.pattern() +
                     "\") does not match " + (side == Side::Left ? "left" : "right") +
                     " input at offset " + std::to_string(offset));
    segments.push_back(input.substr(offset, *length));
    offset += *length;
  }
  if (offset != input.size())
    return failure("concat: unconsumed " + std::string(side == Side::Left ? "left" : "right") +
                   " input at offset " + std::to_string(offset) + " after sub-lens " +
                   std::to_string(lenses.size() - 1));
  return segments;
}

inline std::string join_patterns(const std::vector<StringLens>& lenses, Side side) {
  std::string pattern;
  for (const auto& lens : lenses) {
    pattern += "(?:";
    pattern += side == Side::Left ? lens.left_language().pattern() : lens.right_language().pattern();
    pattern += ")";
  }
  return pattern;
}

template <class Step>
Outcome<std::string> apply_segments(std::size_t count, Step step) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    auto piece = step(i);
    if (piece.is_error()) return failure("concat: sub-lens " + std::to_string(i) + ": " + piece.message());
    out += piece.data();
  }
  return out;
}

}  // namespace detail

/// Places string lenses one after another over a single string.  Nested
/// concatenations are flattened, so `(a & b) & c` splits like `a & b & c`.
/// Precondition: `lenses` is non-empty.
inline StringLens concat(std::vector<StringLens> lenses) {
  if (lenses.empty()) throw std::invalid_argument("concat requires at least one lens");
  using detail::Side;
  std::vector<StringLens> flat;
  for (const auto& lens : lenses)
    for (auto& part : lens.parts()) flat.push_back(std::move(part));
  auto parts = std::make_shared<const std::vector<StringLens>>(std::move(flat));

  auto create_right = [parts](const std::string& x) {
    return detail::split_segments(*parts, x, Side::Left).bind([&](const std::vector<std::string>& xs) {
      return detail::apply_segments(xs.size(), [&](std::size_t i) { return (*parts)[i].create_right(xs[i]); });
    });
  };
  auto create_left = [parts](const std::string& y) {
    return detail::split_segments(*parts, y, Side::Right).bind([&](const std::vector<std::string>& ys) {
      return detail::apply_segments(ys.size(), [&](std::size_t i) { return (*parts)[i].create_left(ys[i]); });
    });
  };
  auto put_right = [parts](const std::string& x, const std::string& y) {
    return detail::split_segments(*parts, x, Side::Left).bind([&](const std::vector<std::string>& xs) {
      return detail::split_segments(*parts, y, Side::Right).bind([&](const std::vector<std::string>& ys) {
        return detail::apply_segments(xs.size(),
                                      [&](std::size_t i) { return (*parts)[i].put_right(xs[i], ys[i]); });
      });
    });
  };
  auto put_left = [parts](const std::string& y, const std::string& x) {
    return detail::split_segments(*parts, y, Side::Right).bind([&](const std::vector<std::string>& ys) {
      return detail::split_segments(*parts, x, Side::Left).bind([&](const std::vector<std::string>& xs) {
        return detail::apply_segments(ys.size(),
                                      [&](std::size_t i) { return (*parts)[i].put_left(ys[i], xs[i]); });
      });
    });
  };

  auto left_language = Regex::compile(detail::join_patterns(*parts, Side::Left)).data();
  auto right_language = Regex::compile(detail::join_patterns(*parts, Side::Right)).data();
  StringLens result(SymmetricLens<std::string, std::string>(create_right, create_left, put_right, put_left),
                    std::move(left_language), std::move(right_language));
  result.parts_ = parts;
  return result;
}

/// Splits `input` into per-lens segments using the lenses' left (or right)
/// languages; exposed for inspection and tests.
inline Outcome<std::vector<std::string>> split_left(const std::vector<StringLens>& lenses, const std::string& input) {
  return detail::split_segments(lenses, input, detail::Side::Left);
}
inline Outcome<std::vector<std::string>> split_right(const std::vector<StringLens>& lenses, const std::string& input) {
  return detail::split_segments(lenses, input, detail::Side::Right);
}

inline StringLens operator&(const StringLens& a, const StringLens& b) { return concat({a, b}); }

}  // namespace bx
