#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dmcc {

// Fixed-point decimal with four fractional digits, stored as a scaled
// 64-bit integer. All money and quantity arithmetic goes through this type so
// that totals never touch binary floating point.
class Decimal {
 public:
  static constexpr int kFractionDigits = 4;
  static constexpr std::int64_t kScale = 10'000;

  constexpr Decimal() = default;

  static constexpr Decimal from_scaled(std::int64_t scaled) {
    Decimal d;
    d.scaled_ = scaled;
    return d;
  }
  static Decimal from_integer(std::int64_t value);

  // Accepts [+-]?digits[.digits]. Digits beyond the fourth fractional place
  // must be zero; anything that would need rounding is rejected.
  static std::optional<Decimal> parse(std::string_view text);

  constexpr std::int64_t scaled() const { return scaled_; }
  constexpr bool is_zero() const { return scaled_ == 0; }
  constexpr bool is_negative() const { return scaled_ < 0; }

  // Shortest exact form: "25", "99.99", "0.1", "-3.0125".
  std::string to_string() const;
  // Rounded half-even to `digits` fractional places (digits <= 4).
  std::string to_fixed(int digits) const;
  Decimal round_half_even(int digits) const;

  friend Decimal operator+(Decimal a, Decimal b);
  friend Decimal operator-(Decimal a, Decimal b);
  friend Decimal operator-(Decimal a);
  // Product rounded half-even back to four fractional digits.
  friend Decimal operator*(Decimal a, Decimal b);
  // pct percent of this value, a * pct / 100 with a single rounding.
  Decimal percent(Decimal pct) const;
  Decimal& operator+=(Decimal other) { return *this = *this + other; }
  Decimal& operator-=(Decimal other) { return *this = *this - other; }

  friend constexpr auto operator<=>(Decimal, Decimal) = default;
  friend constexpr bool operator==(Decimal, Decimal) = default;

 private:
  std::int64_t scaled_ = 0;
};

// Exact comparison of two xsd:integer / xsd:decimal lexical forms of any
// length. Returns nullopt when either side is not such a form.
std::optional<std::strong_ordering> compare_decimal_lexical(std::string_view a, std::string_view b);

}  // namespace dmcc
