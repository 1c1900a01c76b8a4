#include "posslog/level.hpp"

#include <charconv>
#include <stdexcept>

namespace posslog {

Level::Level(Rational v) : value_(v) {
  if (v < Rational(0) || v > Rational(1)) throw std::domain_error("level outside [0,1]");
}

Level Level::ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("level with zero denominator");
  return Level(Rational(num, den));
}

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<Level> Level::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty() || text.front() == '-') return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    Rational r(*num, *den);
    if (r < Rational(0) || r > Rational(1)) return std::nullopt;
    Level out;
    out.value_ = r;
    return out;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = parse_int(text.substr(0, dot));
    std::string_view frac = text.substr(dot + 1);
    if (!whole || frac.empty() || frac.size() > 18) return std::nullopt;
    auto digits = parse_int(frac);
    if (!digits || *digits < 0) return std::nullopt;
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational r = Rational(*whole) + Rational(*digits, den);
    if (r < Rational(0) || r > Rational(1)) return std::nullopt;
    Level out;
    out.value_ = r;
    return out;
  }

  auto whole = parse_int(text);
  if (!whole || *whole < 0 || *whole > 1) return std::nullopt;
  Level out;
  out.value_ = Rational(*whole);
  return out;
}

std::string Level::str() const {
  if (value_.denominator() == 1) return std::to_string(value_.numerator());
  return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

}  // namespace posslog
