#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "bx/either.hpp"
#include "bx/outcome.hpp"

namespace bx {

/// Simple symmetric lens between X (left) and Y (right), enriched with
/// Outcome results.
///
/// Lenses are immutable values: copies share the same function bundle and
/// combinators always build new lenses.  All four functions are expected to
/// be pure, so a lens may be shared freely across threads.
///
/// Round-tripping laws (checked by law_harness.hpp, not by construction):
///   createR x >>= \y -> putL y x  == ok x
///   createL y >>= \x -> putR x y  == ok y
///   putR x y  >>= \y' -> putL y' x == ok x
///   putL y x  >>= \x' -> putR x' y == ok y
template <class X, class Y>
class SymmetricLens {
 public:
  using left_type = X;
  using right_type = Y;
  using CreateRight = std::function<Outcome<Y>(const X&)>;
  using CreateLeft = std::function<Outcome<X>(const Y&)>;
  using PutRight = std::function<Outcome<Y>(const X&, const Y&)>;
  using PutLeft = std::function<Outcome<X>(const Y&, const X&)>;

  SymmetricLens(CreateRight create_right, CreateLeft create_left, PutRight put_right,
                PutLeft put_left)
      : fns_(std::make_shared<const Functions>(Functions{std::move(create_right),
                                                         std::move(create_left),
                                                         std::move(put_right),
                                                         std::move(put_left)})) {}

  Outcome<Y> create_right(const X& left) const { return fns_->create_right(left); }
  Outcome<X> create_left(const Y& right) const { return fns_->create_left(right); }
  Outcome<Y> put_right(const X& left, const Y& right) const {
    return fns_->put_right(left, right);
  }
  Outcome<X> put_left(const Y& right, const X& left) const {
    return fns_->put_left(right, left);
  }

 private:
  struct Functions {
    CreateRight create_right;
    CreateLeft create_left;
    PutRight put_right;
    PutLeft put_left;
  };
  std::shared_ptr<const Functions> fns_;
};

/// Asymmetric (source/view) lens with get, put and create.
///
/// Laws: PutGet  get (put v s) == v
///       GetPut  put (get s) s == s
///       CreateGet get (create v) == v
///       PutTwice put v (put v s) == put v s
template <class S, class V>
class AsymmetricLens {
 public:
  using source_type = S;
  using view_type = V;
  using Get = std::function<Outcome<V>(const S&)>;
  using Put = std::function<Outcome<S>(const V&, const S&)>;
  using Create = std::function<Outcome<S>(const V&)>;

  AsymmetricLens(Get get, Put put, Create create)
      : fns_(std::make_shared<const Functions>(
            Functions{std::move(get), std::move(put), std::move(create)})) {}

  Outcome<V> get(const S& source) const { return fns_->get(source); }
  Outcome<S> put(const V& view, const S& source) const { return fns_->put(view, source); }
  Outcome<S> create(const V& view) const { return fns_->create(view); }

 private:
  struct Functions {
    Get get;
    Put put;
    Create create;
  };
  std::shared_ptr<const Functions> fns_;
};

/// Embeds an asymmetric lens as a simple symmetric one:
/// createR = get, createL = create, putL = put, putR x _ = get x.
template <class S, class V>
SymmetricLens<S, V> asym_to_sym(AsymmetricLens<S, V> lens) {
  return SymmetricLens<S, V>(
      [lens](const S& x) { return lens.get(x); },
      [lens](const V& y) { return lens.create(y); },
      [lens](const S& x, const V&) { return lens.get(x); },
      [lens](const V& y, const S& x) { return lens.put(y, x); });
}

/// Sequential composition.
///
/// Simple symmetric lenses carry no complement, so the middle value needed
/// by the puts is recovered by creating it from the side that is not being
/// updated: putR recovers it with `second.createL`, putL with
/// `first.createR`.
template <class X, class Y, class Z>
SymmetricLens<X, Z> compose(SymmetricLens<X, Y> first, SymmetricLens<Y, Z> second) {
  return SymmetricLens<X, Z>(
      [first, second](const X& x) {
        return first.create_right(x).bind([&](const Y& y) { return second.create_right(y); });
      },
      [first, second](const Z& z) {
        return second.create_left(z).bind([&](const Y& y) { return first.create_left(y); });
      },
      [first, second](const X& x, const Z& z) {
        return second.create_left(z)
            .bind([&](const Y& middle) { return first.put_right(x, middle); })
            .bind([&](const Y& middle) { return second.put_right(middle, z); });
      },
      [first, second](const Z& z, const X& x) {
        return first.create_right(x)
            .bind([&](const Y& middle) { return second.put_left(z, middle); })
            .bind([&](const Y& middle) { return first.put_left(middle, x); });
      });
}

template <class X, class Y, class Z>
SymmetricLens<X, Z> operator>>(SymmetricLens<X, Y> first, SymmetricLens<Y, Z> second) {
  return compose(std::move(first), std::move(second));
}

/// Swaps the sides of a lens.
template <class X, class Y>
SymmetricLens<Y, X> invert(SymmetricLens<X, Y> lens) {
  return SymmetricLens<Y, X>(
      [lens](const Y& y) { return lens.create_left(y); },
      [lens](const X& x) { return lens.create_right(x); },
      [lens](const Y& y, const X& x) { return lens.put_left(y, x); },
      [lens](const X& x, const Y& y) { return lens.put_right(x, y); });
}

/// Routes left-tagged values through `on_left` and right-tagged values
/// through `on_right`, preserving the tag.  A put whose two arguments carry
/// different tags has no usable target, so it degrades to create on the
/// updated value's branch.
template <class X1, class Y1, class X2, class Y2>
SymmetricLens<Either<X1, X2>, Either<Y1, Y2>> or_lens(SymmetricLens<X1, Y1> on_left,
                                                      SymmetricLens<X2, Y2> on_right) {
  using EX = Either<X1, X2>;
  using EY = Either<Y1, Y2>;
  auto create_right = [on_left, on_right](const EX& x) -> Outcome<EY> {
    if (x.is_left()) return on_left.create_right(x.left_value()).map(&EY::left);
    return on_right.create_right(x.right_value()).map(&EY::right);
  };
  auto create_left = [on_left, on_right](const EY& y) -> Outcome<EX> {
    if (y.is_left()) return on_left.create_left(y.left_value()).map(&EX::left);
    return on_right.create_left(y.right_value()).map(&EX::right);
  };
  auto put_right = [on_left, on_right, create_right](const EX& x, const EY& y) -> Outcome<EY> {
    if (x.is_left() != y.is_left()) return create_right(x);
    if (x.is_left()) return on_left.put_right(x.left_value(), y.left_value()).map(&EY::left);
    return on_right.put_right(x.right_value(), y.right_value()).map(&EY::right);
  };
  auto put_left = [on_left, on_right, create_left](const EY& y, const EX& x) -> Outcome<EX> {
    if (x.is_left() != y.is_left()) return create_left(y);
    if (y.is_left()) return on_left.put_left(y.left_value(), x.left_value()).map(&EX::left);
    return on_right.put_left(y.right_value(), x.right_value()).map(&EX::right);
  };
  return SymmetricLens<EX, EY>(std::move(create_right), std::move(create_left),
                               std::move(put_right), std::move(put_left));
}

/// Identity lens on any equality-comparable type.
template <class T>
SymmetricLens<T, T> identity() {
  return SymmetricLens<T, T>([](const T& x) { return Outcome<T>(x); },
                             [](const T& y) { return Outcome<T>(y); },
                             [](const T& x, const T&) { return Outcome<T>(x); },
                             [](const T& y, const T&) { return Outcome<T>(y); });
}

/// Builds a lens from a bijection given as two partial functions; puts
/// ignore the stale target.
template <class X, class Y, class Forward, class Backward>
SymmetricLens<X, Y> bijection(Forward forward, Backward backward) {
  return SymmetricLens<X, Y>(
      [forward](const X& x) -> Outcome<Y> { return forward(x); },
      [backward](const Y& y) -> Outcome<X> { return backward(y); },
      [forward](const X& x, const Y&) -> Outcome<Y> { return forward(x); },
      [backward](const Y& y, const X&) -> Outcome<X> { return backward(y); });
}

}  // namespace bx
