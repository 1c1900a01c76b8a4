#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace posslog {

// An exact rational certainty degree in [0,1]. All comparisons are exact;
// no floating point is involved anywhere.
class Level {
 public:
  using Rational = boost::rational<std::int64_t>;

  constexpr Level() = default;  // 0
  static Level zero() { return Level(); }
  static Level one() { return Level(Rational(1)); }

  // Throws std::domain_error outside [0,1].
  static Level ratio(std::int64_t num, std::int64_t den);

  // Accepts "p/q", integers "0"/"1", and finite decimals like "0.25".
  static std::optional<Level> parse(std::string_view text);

  // Exact rendering: "0", "1", or "p/q" in lowest terms.
  std::string str() const;

  Level complement() const { return Level(Rational(1) - value_); }

  const Rational& value() const { return value_; }

  friend bool operator==(const Level& a, const Level& b) { return a.value_ == b.value_; }
  friend bool operator<(const Level& a, const Level& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Level& a, const Level& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Level& a, const Level& b) { return b < a; }
  friend bool operator>=(const Level& a, const Level& b) { return b <= a; }
  friend bool operator!=(const Level& a, const Level& b) { return !(a == b); }

  friend Level min(const Level& a, const Level& b) { return a <= b ? a : b; }
  friend Level max(const Level& a, const Level& b) { return a <= b ? b : a; }

 private:
  explicit Level(Rational v);
  Rational value_{0};
};

}  // namespace posslog
