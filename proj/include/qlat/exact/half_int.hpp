#pragma once

#include <compare>
#include <string>

namespace qlat {

// Element of (1/2)Z stored as twice its value, so spin labels stay exact.
class HalfInt {
  public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInt from_int(int v) { return from_twice(2 * v); }
    // Accepts decimals such as "1.5" or "-0.5" and fractions such as "3/2".
    static HalfInt parse(const std::string &text);
    static HalfInt from_double(double v);

    constexpr int twice() const noexcept { return twice_; }
    constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
    constexpr double value() const noexcept { return twice_ / 2.0; }
    // Valid only when is_integer().
    int as_int() const;

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInt &operator+=(HalfInt o) {
        twice_ += o.twice_;
        return *this;
    }
    constexpr auto operator<=>(const HalfInt &) const = default;

    // "3", "-1/2"
    std::string to_string() const;

  private:
    int twice_ = 0;
};

} // namespace qlat
