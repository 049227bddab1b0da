#include "lemni/format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace lemni {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string format_double(double v, int digits) {
    if (digits < 1)
        digits = 1;
    if (digits > 40)
        digits = 40;
    char buf[96];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v,
                                   std::chars_format::general, digits);
    return std::string(buf, ptr);
}

namespace {

std::string complex_text(const std::string& re, const std::string& im_abs,
                         bool negative) {
    return re + (negative ? "-" : "+") + im_abs + "i";
}

} // namespace

std::string format_complex(Complex z) {
    const bool neg = std::signbit(z.imag());
    return complex_text(format_double(z.real()),
                        format_double(std::abs(z.imag())), neg);
}

std::string format_complex(Complex z, int digits) {
    const bool neg = std::signbit(z.imag());
    return complex_text(format_double(z.real(), digits),
                        format_double(std::abs(z.imag()), digits), neg);
}

namespace {

double parse_real(std::string_view text) {
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw usage_error("bad real literal: '" + std::string(text) + "'");
    return value;
}

} // namespace

Complex parse_complex(std::string_view text) {
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    if (text.empty())
        throw usage_error("empty complex literal");

    if (text.back() != 'i')
        return {parse_real(text), 0.0};

    std::string_view body = text.substr(0, text.size() - 1);
    if (body.empty())
        throw usage_error("bad complex literal: '" + std::string(text) + "'");
    // Split at the last sign that is not a scientific-notation exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        const char ch = body[i];
        if ((ch == '+' || ch == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos)
        return {0.0, parse_real(body)};
    return {parse_real(body.substr(0, split)), parse_real(body.substr(split))};
}

} // namespace lemni
