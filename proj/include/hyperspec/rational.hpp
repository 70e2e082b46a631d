#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hyperspec {

// Wide intermediate for exact cross multiplication of 64-bit values.
__extension__ typedef __int128 int128;

// Exact nonnegative-or-signed rational with positive denominator in lowest terms.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    // Accepts "p", "p/q" and finite decimals such as "0.5".
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        // Denominators are positive, so cross multiplication preserves order.
        return static_cast<int128>(a.num_) * b.den_ <=> static_cast<int128>(b.num_) * a.den_;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace hyperspec
