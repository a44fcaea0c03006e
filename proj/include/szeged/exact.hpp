#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace szeged {

// Checked 128-bit integer. Every index value is an exact integer; any
// overflow throws instead of wrapping.
class Exact {
 public:
  using rep = __int128;

  constexpr Exact() = default;
  constexpr Exact(std::int64_t v) : value_(v) {}  // NOLINT(implicit)
  constexpr Exact(std::uint64_t v) : value_(static_cast<rep>(v)) {}  // NOLINT(implicit)
  constexpr Exact(int v) : value_(v) {}  // NOLINT(implicit)
  constexpr Exact(unsigned v) : value_(v) {}  // NOLINT(implicit)

  static constexpr Exact from_raw(rep v) {
    Exact e;
    e.value_ = v;
    return e;
  }
  constexpr rep raw() const { return value_; }

  friend Exact operator+(Exact a, Exact b) {
    rep out;
    if (__builtin_add_overflow(a.value_, b.value_, &out)) {
      throw std::overflow_error("exact integer overflow in addition");
    }
    return from_raw(out);
  }
  friend Exact operator-(Exact a, Exact b) {
    rep out;
    if (__builtin_sub_overflow(a.value_, b.value_, &out)) {
      throw std::overflow_error("exact integer overflow in subtraction");
    }
    return from_raw(out);
  }
  friend Exact operator*(Exact a, Exact b) {
    rep out;
    if (__builtin_mul_overflow(a.value_, b.value_, &out)) {
      throw std::overflow_error("exact integer overflow in multiplication");
    }
    return from_raw(out);
  }
  friend Exact operator/(Exact a, Exact b) {
    if (b.value_ == 0) throw std::domain_error("division by zero");
    return from_raw(a.value_ / b.value_);
  }
  friend Exact operator%(Exact a, Exact b) {
    if (b.value_ == 0) throw std::domain_error("division by zero");
    return from_raw(a.value_ % b.value_);
  }
  Exact& operator+=(Exact o) { return *this = *this + o; }
  Exact& operator-=(Exact o) { return *this = *this - o; }
  Exact& operator*=(Exact o) { return *this = *this * o; }

  friend constexpr bool operator==(Exact a, Exact b) = default;
  friend constexpr std::strong_ordering operator<=>(Exact a, Exact b) {
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    if (value_ == 0) return "0";
    bool negative = value_ < 0;
    // work in the negative range so INT128_MIN is representable
    rep v = negative ? value_ : -value_;
    std::string digits;
    while (v != 0) {
      digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
      v /= 10;
    }
    if (negative) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
  }

  // Parses an optionally signed decimal integer; throws std::invalid_argument
  // on malformed input and std::overflow_error when out of range.
  static Exact parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer");
    bool negative = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
      negative = text[0] == '-';
      i = 1;
    }
    if (i == text.size()) throw std::invalid_argument("malformed integer");
    Exact out;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c < '0' || c > '9') {
        throw std::invalid_argument("malformed integer: " + std::string(text));
      }
      out = out * Exact(10) + Exact(c - '0');
    }
    return negative ? Exact(0) - out : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Exact& e) {
    return os << e.to_string();
  }

 private:
  rep value_ = 0;
};

}  // namespace szeged
