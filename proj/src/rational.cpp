#include "hyperspec/rational.hpp"

#include <charconv>
#include <numeric>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole)
{
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw SpecError("not a rational number: '" + std::string(whole) + "'");
    return value;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(std::string_view text)
{
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = parse_int(text.substr(0, slash), text);
        const auto den = parse_int(text.substr(slash + 1), text);
        if (den == 0)
            throw SpecError("rational with zero denominator: '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 12)
            throw SpecError("not a rational number: '" + std::string(text) + "'");
        const bool negative = !whole.empty() && whole.front() == '-';
        const std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_int(whole, text);
        const std::int64_t f = parse_int(frac, text);
        if (frac.front() == '-' || frac.front() == '+')
            throw SpecError("not a rational number: '" + std::string(text) + "'");
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        const std::int64_t magnitude = (w < 0 ? -w : w) * scale + f;
        return Rational(negative ? -magnitude : magnitude, scale);
    }
    return Rational(parse_int(text, text));
}

std::string Rational::to_string() const
{
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace hyperspec
