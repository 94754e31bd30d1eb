// Commutative unital semirings with a zero and a distinguished element of
// infinite multiplicative order.  Two instances are provided: the tropical
// (max-plus) semiring over integers and the natural numbers.  Everything is
// exact; matrix equality is what the representation theorems are about, so
// no floating point is allowed anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <concepts>
#include <cstdint>
#include <string>

namespace plactic {

template <typename S>
concept Semiring = std::regular<S> && requires(const S a, const S b) {
  { S::zero() } -> std::same_as<S>;
  { S::one() } -> std::same_as<S>;
  { S::alpha() } -> std::same_as<S>;
  { a + b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { S::name() } -> std::convertible_to<std::string>;
};

/// Max-plus: addition is max, multiplication is integer +, zero is the
/// explicit bottom element, one is 0 and alpha is 1.
class Tropical {
 public:
  Tropical() = default;  // bottom
  explicit Tropical(std::int64_t v) : bottom_(false), v_(v) {}

  static Tropical bottom() { return {}; }
  static Tropical zero() { return bottom(); }
  static Tropical one() { return Tropical(0); }
  static Tropical alpha() { return Tropical(1); }
  static std::string name() { return "tropical"; }

  bool is_bottom() const { return bottom_; }
  std::int64_t value() const { return v_; }  // meaningless on bottom

  friend Tropical operator+(const Tropical& a, const Tropical& b) {
    if (a.bottom_) return b;
    if (b.bottom_) return a;
    return Tropical(a.v_ > b.v_ ? a.v_ : b.v_);
  }
  friend Tropical operator*(const Tropical& a, const Tropical& b) {
    if (a.bottom_ || b.bottom_) return bottom();
    return Tropical(a.v_ + b.v_);
  }
  friend bool operator==(const Tropical& a, const Tropical& b) {
    return a.bottom_ == b.bottom_ && (a.bottom_ || a.v_ == b.v_);
  }

  std::string str() const { return bottom_ ? "-inf" : std::to_string(v_); }

 private:
  bool bottom_ = true;
  std::int64_t v_ = 0;
};

/// (N, +, *) with alpha = 2.  Arbitrary precision, so alpha^k stays exact
/// for words of any length.
class Natural {
 public:
  using Int = boost::multiprecision::cpp_int;

  Natural() = default;  // 0
  explicit Natural(Int v) : v_(std::move(v)) {}
  explicit Natural(std::uint64_t v) : v_(v) {}

  static Natural zero() { return {}; }
  static Natural one() { return Natural(std::uint64_t{1}); }
  static Natural alpha() { return Natural(std::uint64_t{2}); }
  static std::string name() { return "natural"; }

  const Int& value() const { return v_; }

  friend Natural operator+(const Natural& a, const Natural& b) {
    return Natural(a.v_ + b.v_);
  }
  friend Natural operator*(const Natural& a, const Natural& b) {
    return Natural(a.v_ * b.v_);
  }
  friend bool operator==(const Natural&, const Natural&) = default;

  std::string str() const { return v_.str(); }

 private:
  Int v_;
};

template <Semiring S>
S alpha_pow(std::uint64_t i) {
  S acc = S::one();
  for (std::uint64_t k = 0; k < i; ++k) acc = acc * S::alpha();
  return acc;
}

}  // namespace plactic
