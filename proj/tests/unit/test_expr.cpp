#include <doctest.h>

#include <cmath>

#include "djcm/error.hpp"
#include "djcm/expr.hpp"

using namespace djcm;

TEST_CASE("arithmetic") {
    CHECK(eval_expr("1+2*3") == 7.0);
    CHECK(eval_expr("(1+2)*3") == 9.0);
    CHECK(eval_expr("-pi/2") == -kPi / 2);
    CHECK(eval_expr("2*pi") == 2 * kPi);
    CHECK(eval_expr(" 1e-3 ") == 1e-3);
    CHECK(eval_expr("atan(1/3)") == std::atan(1.0 / 3.0));
    CHECK(eval_expr("sqrt(4)") == 2.0);
    CHECK(eval_expr("3*pi/10") == doctest::Approx(0.3 * kPi));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(eval_expr(""), InvalidConfig);
    CHECK_THROWS_AS(eval_expr("1+"), InvalidConfig);
    CHECK_THROWS_AS(eval_expr("foo(1)"), InvalidConfig);
    CHECK_THROWS_AS(eval_expr("(1"), InvalidConfig);
    CHECK_THROWS_AS(eval_expr("1/0"), InvalidConfig);
}

TEST_CASE("angle literals carry exact tangents") {
    CHECK(parse_angle("pi/4") == Angle::quarter_pi());
    CHECK(parse_angle("pi / 2") == Angle::half_pi());
    CHECK(parse_angle("0") == Angle::zero());
    CHECK(parse_angle("atan(1/2)") == Angle::from_tan(1, 2));
    CHECK(parse_angle("atan(1/2)").cos2() == 0.6);
    CHECK(parse_angle("atan(2)") == Angle::from_tan(2, 1));
    CHECK_FALSE(parse_angle("pi/6").is_exact());
    CHECK(parse_angle("pi/6").radians() == doctest::Approx(kPi / 6));
}
