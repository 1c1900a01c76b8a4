#include <doctest.h>

#include "posslog/level.hpp"

using posslog::Level;

TEST_CASE("level parsing and rendering") {
  CHECK(Level::parse("2/3")->str() == "2/3");
  CHECK(Level::parse("1")->str() == "1");
  CHECK(Level::parse("0")->str() == "0");
  CHECK(Level::parse("0.5")->str() == "1/2");
  CHECK(Level::parse("0.25")->str() == "1/4");
  CHECK(Level::parse(" 4/6 ")->str() == "2/3");  // lowest terms
  CHECK_FALSE(Level::parse("5/3").has_value());
  CHECK_FALSE(Level::parse("-1/2").has_value());
  CHECK_FALSE(Level::parse("2").has_value());
  CHECK_FALSE(Level::parse("").has_value());
  CHECK_FALSE(Level::parse("x").has_value());
  CHECK_FALSE(Level::parse("1/0").has_value());
}

TEST_CASE("exact arithmetic") {
  Level two_thirds = Level::ratio(2, 3);
  CHECK(two_thirds.complement() == Level::ratio(1, 3));
  CHECK(min(two_thirds, Level::one()) == two_thirds);
  CHECK(max(two_thirds, Level::ratio(1, 3)) == two_thirds);
  CHECK(Level::ratio(1, 3) < two_thirds);
  CHECK(Level::ratio(2, 6) == Level::ratio(1, 3));
  CHECK_THROWS_AS(Level::ratio(4, 3), std::domain_error);
  CHECK_THROWS_AS(Level::ratio(-1, 3), std::domain_error);
}
