#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bx/lens.hpp"
#include "bx/show.hpp"

namespace bx {

// Empirical round-tripping checks for lenses.  A failed law is reported as
// a verdict carrying the concrete counterexample, never thrown.

namespace law {
inline constexpr const char* kCreatePutRL = "CreatePutRL";
inline constexpr const char* kCreatePutLR = "CreatePutLR";
inline constexpr const char* kPutRL = "PutRL";
inline constexpr const char* kPutLR = "PutLR";
inline constexpr const char* kPutPutRight = "PutPutRight";
inline constexpr const char* kPutPutLeft = "PutPutLeft";
inline constexpr const char* kRightUpdateRoundTrip = "RightUpdateRoundTrip";
inline constexpr const char* kLeftUpdateRoundTrip = "LeftUpdateRoundTrip";
inline constexpr const char* kPutGet = "PutGet";
inline constexpr const char* kGetPut = "GetPut";
inline constexpr const char* kCreateGet = "CreateGet";
inline constexpr const char* kPutTwice = "PutTwice";
}  // namespace law

struct Verdict {
  std::string law;
  bool passed = true;
  std::string inputs;    // empty when passed
  std::string expected;  // empty when passed
  std::string observed;  // empty when passed

  std::string describe() const {
    if (passed) return law + ": pass";
    return law + ": FAIL with " + inputs + ": expected " + expected + ", observed " + observed;
  }
};

inline Verdict passing(std::string law_name) {
  Verdict verdict;
  verdict.law = std::move(law_name);
  return verdict;
}

struct LawReport {
  std::vector<Verdict> verdicts;
  std::optional<std::uint64_t> seed;
  std::size_t cases = 0;

  bool passed() const {
    for (const auto& v : verdicts)
      if (!v.passed) return false;
    return true;
  }

  const Verdict* find(const std::string& law_name) const {
    for (const auto& v : verdicts)
      if (v.law == law_name) return &v;
    return nullptr;
  }

  /// Records `verdict`, keeping only the first failure per law.
  void merge(const Verdict& verdict) {
    for (auto& existing : verdicts) {
      if (existing.law != verdict.law) continue;
      if (existing.passed && !verdict.passed) existing = verdict;
      return;
    }
    verdicts.push_back(verdict);
  }

  void merge(const LawReport& other) {
    for (const auto& v : other.verdicts) merge(v);
  }

  std::string summary() const {
    std::string out;
    if (seed) out += "seed " + std::to_string(*seed) + ", ";
    out += std::to_string(cases) + " case(s)\n";
    for (const auto& v : verdicts) out += "  " + v.describe() + "\n";
    return out;
  }
};

/// Update scenario: createR/createL of `original_source` must give
/// `expected_original_target`; putting `updated_target` back over the
/// original source must give `expected_updated_source`.
template <class Source, class Target>
struct UpdateRoundTrip {
  Source original_source;
  Target expected_original_target;
  Target updated_target;
  Source expected_updated_source;
};

template <class X, class Y>
struct LensFixture {
  X default_left;
  Y default_right;
  UpdateRoundTrip<X, Y> right_update;  // target on the right is updated
  UpdateRoundTrip<Y, X> left_update;   // target on the left is updated
};

namespace detail {

template <class T>
Verdict judge(const char* law_name, const Outcome<T>& observed, const T& expected, std::string inputs) {
  if (observed.is_ok() && observed.data() == expected) return passing(law_name);
  return Verdict{law_name, false, std::move(inputs), "ok(" + show(expected) + ")", show(observed)};
}

}  // namespace detail

/// createR x >>= \y -> putL y x  ==  ok x
template <class X, class Y>
Verdict check_create_put_rl(const SymmetricLens<X, Y>& lens, const X& x) {
  auto result = lens.create_right(x).bind([&](const Y& y) { return lens.put_left(y, x); });
  return detail::judge(law::kCreatePutRL, result, x, "x=" + show(x));
}

/// createL y >>= \x -> putR x y  ==  ok y
template <class X, class Y>
Verdict check_create_put_lr(const SymmetricLens<X, Y>& lens, const Y& y) {
  auto result = lens.create_left(y).bind([&](const X& x) { return lens.put_right(x, y); });
  return detail::judge(law::kCreatePutLR, result, y, "y=" + show(y));
}

/// putR x y >>= \y' -> putL y' x  ==  ok x
template <class X, class Y>
Verdict check_put_rl(const SymmetricLens<X, Y>& lens, const X& x, const Y& y) {
  auto result = lens.put_right(x, y).bind([&](const Y& updated) { return lens.put_left(updated, x); });
  return detail::judge(law::kPutRL, result, x, "x=" + show(x) + ", y=" + show(y));
}

/// putL y x >>= \x' -> putR x' y  ==  ok y
template <class X, class Y>
Verdict check_put_lr(const SymmetricLens<X, Y>& lens, const Y& y, const X& x) {
  auto result = lens.put_left(y, x).bind([&](const X& updated) { return lens.put_right(updated, y); });
  return detail::judge(law::kPutLR, result, y, "y=" + show(y) + ", x=" + show(x));
}

/// putR x (putR x y) == putR x y, whenever the first put succeeds.
template <class X, class Y>
Verdict check_put_put_right(const SymmetricLens<X, Y>& lens, const X& x, const Y& y) {
  auto once = lens.put_right(x, y);
  if (once.is_error()) return passing(law::kPutPutRight);
  auto twice = lens.put_right(x, once.data());
  return detail::judge(law::kPutPutRight, twice, once.data(), "x=" + show(x) + ", y=" + show(y));
}

/// putL y (putL y x) == putL y x, whenever the first put succeeds.
template <class X, class Y>
Verdict check_put_put_left(const SymmetricLens<X, Y>& lens, const Y& y, const X& x) {
  auto once = lens.put_left(y, x);
  if (once.is_error()) return passing(law::kPutPutLeft);
  auto twice = lens.put_left(y, once.data());
  return detail::judge(law::kPutPutLeft, twice, once.data(), "y=" + show(y) + ", x=" + show(x));
}

template <class X, class Y>
LawReport check_put_put(const SymmetricLens<X, Y>& lens, const X& x, const Y& y) {
  LawReport report;
  report.cases = 1;
  report.merge(check_put_put_right(lens, x, y));
  report.merge(check_put_put_left(lens, y, x));
  return report;
}

template <class X, class Y>
LawReport check_put_put(const SymmetricLens<X, Y>& lens, const LensFixture<X, Y>& fixture) {
  return check_put_put(lens, fixture.default_left, fixture.default_right);
}

/// Both update scenarios of the fixture.
template <class X, class Y>
LawReport check_update_round_trip(const SymmetricLens<X, Y>& lens, const LensFixture<X, Y>& fixture) {
  LawReport report;
  report.cases = 1;
  {
    const auto& t = fixture.right_update;
    auto created = lens.create_right(t.original_source);
    auto verdict = detail::judge(law::kRightUpdateRoundTrip, created, t.expected_original_target,
                                 "createR " + show(t.original_source));
    if (verdict.passed)
      verdict = detail::judge(law::kRightUpdateRoundTrip, lens.put_left(t.updated_target, t.original_source),
                              t.expected_updated_source,
                              "putL " + show(t.updated_target) + " " + show(t.original_source));
    report.merge(verdict);
  }
  {
    const auto& t = fixture.left_update;
    auto created = lens.create_left(t.original_source);
    auto verdict = detail::judge(law::kLeftUpdateRoundTrip, created, t.expected_original_target,
                                 "createL " + show(t.original_source));
    if (verdict.passed)
      verdict = detail::judge(law::kLeftUpdateRoundTrip, lens.put_right(t.updated_target, t.original_source),
                              t.expected_updated_source,
                              "putR " + show(t.updated_target) + " " + show(t.original_source));
    report.merge(verdict);
  }
  return report;
}

/// The four round-tripping laws plus both PutPut analogues on one pair.
template <class X, class Y>
LawReport check_symmetric_laws(const SymmetricLens<X, Y>& lens, const X& x, const Y& y) {
  LawReport report;
  report.cases = 1;
  report.merge(check_create_put_rl(lens, x));
  report.merge(check_create_put_lr(lens, y));
  report.merge(check_put_rl(lens, x, y));
  report.merge(check_put_lr(lens, y, x));
  report.merge(check_put_put_right(lens, x, y));
  report.merge(check_put_put_left(lens, y, x));
  return report;
}

/// Every check the fixture supports: the six laws on the default pair plus
/// both update round trips.
template <class X, class Y>
LawReport check_fixture(const SymmetricLens<X, Y>& lens, const LensFixture<X, Y>& fixture) {
  auto report = check_symmetric_laws(lens, fixture.default_left, fixture.default_right);
  report.merge(check_update_round_trip(lens, fixture));
  return report;
}

/// PutGet, GetPut, CreateGet and PutTwice on one source/view pair.
template <class S, class V>
LawReport check_asymmetric_laws(const AsymmetricLens<S, V>& lens, const S& s, const V& v) {
  LawReport report;
  report.cases = 1;
  std::string inputs = "s=" + show(s) + ", v=" + show(v);
  report.merge(detail::judge(law::kPutGet, lens.put(v, s).bind([&](const S& put) { return lens.get(put); }), v,
                             inputs));
  auto viewed = lens.get(s);
  if (viewed.is_error()) {
    report.merge(Verdict{law::kGetPut, false, inputs, "ok(" + show(s) + ")", show(viewed)});
  } else {
    report.merge(detail::judge(law::kGetPut, lens.put(viewed.data(), s), s, inputs));
  }
  report.merge(detail::judge(law::kCreateGet, lens.create(v).bind([&](const S& c) { return lens.get(c); }), v,
                             inputs));
  auto once = lens.put(v, s);
  if (once.is_ok()) report.merge(detail::judge(law::kPutTwice, lens.put(v, once.data()), once.data(), inputs));
  else report.merge(passing(law::kPutTwice));
  return report;
}

template <class T>
using Generator = std::function<T(std::mt19937_64&)>;

/// Runs the six symmetric checks on `count` generated pairs.  The report
/// keeps the first counterexample per law and records the seed, so a
/// failure can be replayed exactly.
template <class X, class Y>
LawReport randomized_suite(const SymmetricLens<X, Y>& lens, const Generator<X>& left, const Generator<Y>& right,
                           std::size_t count, std::uint64_t seed) {
  LawReport report;
  for (const char* name : {law::kCreatePutRL, law::kCreatePutLR, law::kPutRL, law::kPutLR, law::kPutPutRight,
                           law::kPutPutLeft})
    report.verdicts.push_back(passing(name));
  report.seed = seed;
  report.cases = count;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    X x = left(rng);
    Y y = right(rng);
    report.merge(check_symmetric_laws(lens, x, y));
  }
  return report;
}

}  // namespace bx
