#include <doctest.h>

#include <string>

#include "lemni/format.hpp"

using lemni::Complex;

TEST_CASE("format_double shortest round trip") {
    CHECK(lemni::format_double(0.5) == "0.5");
    CHECK(lemni::format_double(-0.05) == "-0.05");
    CHECK(lemni::format_double(1.0) == "1");
    CHECK(lemni::format_double(0.0) == "0");
    // 0.1 has no short exact representation; shortest form must round-trip.
    const std::string s = lemni::format_double(0.1);
    CHECK(s == "0.1");
}

TEST_CASE("format_double with digits") {
    CHECK(lemni::format_double(1.0 / 3.0, 3) == "0.333");
    CHECK(lemni::format_double(1234.5678, 6) == "1234.57");
    CHECK(lemni::format_double(-2.0, 5) == "-2");
}

TEST_CASE("format_complex") {
    CHECK(lemni::format_complex(Complex(1.5, 2.5)) == "1.5+2.5i");
    CHECK(lemni::format_complex(Complex(1.5, -2.5)) == "1.5-2.5i");
    CHECK(lemni::format_complex(Complex(0.0, 0.0)) == "0+0i");
    CHECK(lemni::format_complex(Complex(-1.0, 1.0)) == "-1+1i");
    CHECK(lemni::format_complex(Complex(1.0 / 3.0, 0.0), 4) == "0.3333+0i");
}

TEST_CASE("parse_complex accepted forms") {
    CHECK(lemni::parse_complex("1.5") == Complex(1.5, 0.0));
    CHECK(lemni::parse_complex("-2") == Complex(-2.0, 0.0));
    CHECK(lemni::parse_complex("2i") == Complex(0.0, 2.0));
    CHECK(lemni::parse_complex("-0.5i") == Complex(0.0, -0.5));
    CHECK(lemni::parse_complex("1.5+2.5i") == Complex(1.5, 2.5));
    CHECK(lemni::parse_complex("1.5-2.5i") == Complex(1.5, -2.5));
    CHECK(lemni::parse_complex("-1e-3+2e-4i") == Complex(-1e-3, 2e-4));
    CHECK(lemni::parse_complex("1E2-3E1i") == Complex(100.0, -30.0));
    CHECK(lemni::parse_complex("  0.3+0.2i  ") == Complex(0.3, 0.2));
    CHECK(lemni::parse_complex("0") == Complex(0.0, 0.0));
}

TEST_CASE("parse_complex round trips format_complex") {
    const Complex zs[] = {Complex(0.1, -0.7), Complex(-3.25, 0.0),
                          Complex(0.0, 1e-9), Complex(1e300, -1e-300)};
    for (const Complex z : zs)
        CHECK(lemni::parse_complex(lemni::format_complex(z)) == z);
}

TEST_CASE("parse_complex rejects malformed input") {
    CHECK_THROWS_AS(lemni::parse_complex(""), lemni::usage_error);
    CHECK_THROWS_AS(lemni::parse_complex("abc"), lemni::usage_error);
    CHECK_THROWS_AS(lemni::parse_complex("1+2"), lemni::usage_error);
    CHECK_THROWS_AS(lemni::parse_complex("1+2j"), lemni::usage_error);
    CHECK_THROWS_AS(lemni::parse_complex("1.5i+2"), lemni::usage_error);
    CHECK_THROWS_AS(lemni::parse_complex("1++2i"), lemni::usage_error);
    CHECK_THROWS_AS(lemni::parse_complex("(1,2)"), lemni::usage_error);
    // A digitless imaginary unit is not one of the documented forms.
    CHECK_THROWS_AS(lemni::parse_complex("i"), lemni::usage_error);
    CHECK_THROWS_AS(lemni::parse_complex("0.3 + 0.2i"), lemni::usage_error);
}
