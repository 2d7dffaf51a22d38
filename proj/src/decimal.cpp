#include "dmcc/decimal.hpp"

#include <stdexcept>

namespace dmcc {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("decimal overflow");
  return out;
}

std::int64_t pow10(int n) {
  std::int64_t p = 1;
  for (int i = 0; i < n; ++i) p *= 10;
  return p;
}

// Divides a signed 128-bit value by a positive divisor, rounding half to even.
__int128 div_half_even(__int128 value, __int128 divisor) {
  __int128 q = value / divisor;
  __int128 r = value % divisor;
  if (r < 0) r = -r;
  const __int128 twice = r * 2;
  if (twice > divisor || (twice == divisor && (q % 2 != 0))) q += value < 0 ? -1 : 1;
  return q;
}

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("decimal overflow");
  return static_cast<std::int64_t>(v);
}

bool all_digits(std::string_view s) {
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Decimal Decimal::from_integer(std::int64_t value) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(value, kScale, &out)) throw std::overflow_error("decimal overflow");
  return from_scaled(out);
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) return std::nullopt;
  if (dot != std::string_view::npos && frac.empty() && whole.empty()) return std::nullopt;
  if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
  if (dot != std::string_view::npos && frac.empty()) return std::nullopt;
  while (frac.size() > kFractionDigits) {
    if (frac.back() != '0') return std::nullopt;
    frac.remove_suffix(1);
  }
  __int128 acc = 0;
  for (char c : whole) {
    acc = acc * 10 + (c - '0');
    if (acc > INT64_MAX) return std::nullopt;
  }
  std::int64_t frac_value = 0;
  for (char c : frac) frac_value = frac_value * 10 + (c - '0');
  frac_value *= pow10(kFractionDigits - static_cast<int>(frac.size()));
  acc = acc * kScale + frac_value;
  if (negative) acc = -acc;
  if (acc > INT64_MAX || acc < INT64_MIN) return std::nullopt;
  return from_scaled(static_cast<std::int64_t>(acc));
}

std::string Decimal::to_string() const {
  std::string out = to_fixed(kFractionDigits);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  if (out == "-0") out = "0";
  return out;
}

Decimal Decimal::round_half_even(int digits) const {
  if (digits < 0 || digits > kFractionDigits) throw std::invalid_argument("unsupported precision");
  const std::int64_t step = pow10(kFractionDigits - digits);
  return from_scaled(narrow(div_half_even(scaled_, step) * step));
}

std::string Decimal::to_fixed(int digits) const {
  const Decimal r = round_half_even(digits);
  const bool negative = r.scaled_ < 0;
  const unsigned __int128 mag = negative ? -static_cast<__int128>(r.scaled_) : r.scaled_;
  const auto whole = static_cast<std::uint64_t>(mag / kScale);
  const auto frac = static_cast<std::uint64_t>(mag % kScale);
  std::string out = negative ? "-" : "";
  out += std::to_string(whole);
  if (digits > 0) {
    std::string f = std::to_string(frac);
    f.insert(0, kFractionDigits - f.size(), '0');
    out += '.';
    out += f.substr(0, digits);
  }
  return out;
}

Decimal operator+(Decimal a, Decimal b) { return Decimal::from_scaled(checked_add(a.scaled_, b.scaled_)); }

Decimal operator-(Decimal a, Decimal b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a.scaled_, b.scaled_, &out)) throw std::overflow_error("decimal overflow");
  return Decimal::from_scaled(out);
}

Decimal operator-(Decimal a) { return Decimal::from_scaled(0) - a; }

Decimal operator*(Decimal a, Decimal b) {
  const __int128 product = static_cast<__int128>(a.scaled_) * b.scaled_;
  return Decimal::from_scaled(narrow(div_half_even(product, Decimal::kScale)));
}

Decimal Decimal::percent(Decimal pct) const {
  const __int128 product = static_cast<__int128>(scaled_) * pct.scaled_;
  return from_scaled(narrow(div_half_even(product, kScale * 100)));
}

std::optional<std::strong_ordering> compare_decimal_lexical(std::string_view a, std::string_view b) {
  struct Parts {
    bool negative = false;
    std::string whole;
    std::string frac;
  };
  auto split = [](std::string_view s) -> std::optional<Parts> {
    Parts p;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      p.negative = s.front() == '-';
      s.remove_prefix(1);
    }
    const auto dot = s.find('.');
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    if (dot != std::string_view::npos && frac.empty()) return std::nullopt;
    while (!whole.empty() && whole.front() == '0') whole.remove_prefix(1);
    while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
    p.whole = whole;
    p.frac = frac;
    if (p.whole.empty() && p.frac.empty()) p.negative = false;
    return p;
  };
  auto pa = split(a);
  auto pb = split(b);
  if (!pa || !pb) return std::nullopt;
  auto magnitude = [](const Parts& x, const Parts& y) {
    if (x.whole.size() != y.whole.size()) return x.whole.size() <=> y.whole.size();
    if (auto c = x.whole.compare(y.whole); c != 0) return c <=> 0;
    return x.frac.compare(y.frac) <=> 0;
  };
  if (pa->negative != pb->negative) return pa->negative ? std::strong_ordering::less : std::strong_ordering::greater;
  const auto m = magnitude(*pa, *pb);
  if (!pa->negative) return m;
  return 0 <=> m;
}

}  // namespace dmcc
