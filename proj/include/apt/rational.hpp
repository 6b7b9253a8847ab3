#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace apt {

/// Exact rational number used for every threshold, excess and parameter value.
using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational &r);

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::int64_t floor(const Rational &r);
std::int64_t ceil(const Rational &r);

inline bool is_integer(const Rational &r) { return r.denominator() == 1; }

/// Weight λ of a λ-extendible property, kept exactly and restricted to (0, 1).
class Lambda {
public:
    explicit Lambda(Rational value) : value_(value) {
        if (value_ <= 0 || value_ >= 1)
            throw std::invalid_argument("lambda must lie strictly between 0 and 1, got " + to_string(value_));
    }

    const Rational &value() const { return value_; }

    /// (1 - λ) / 2, the per-vertex term of the Poljak-Turzik bound.
    Rational half_complement() const { return (1 - value_) / 2; }

    bool is_half() const { return value_ == Rational(1, 2); }

    friend bool operator==(const Lambda &, const Lambda &) = default;

private:
    Rational value_;
};

} // namespace apt

// Boost 1.74 declares rational == integer both as a member template and as a free template
// that forwards to it. Under C++20 the reversed form of the free template is chosen again
// from inside itself, so the comparison never returns. Exact non-template overloads win
// overload resolution and stop the recursion.
namespace boost {
#define APT_RATIONAL_INT_EQ(T)                                                                   \
    inline bool operator==(const rational<std::int64_t> &a, T b) {                             \
        return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);           \
    }                                                                                           \
    inline bool operator==(T b, const rational<std::int64_t> &a) { return a == b; }             \
    inline bool operator!=(const rational<std::int64_t> &a, T b) { return !(a == b); }          \
    inline bool operator!=(T b, const rational<std::int64_t> &a) { return !(a == b); }
APT_RATIONAL_INT_EQ(int)
APT_RATIONAL_INT_EQ(long)
APT_RATIONAL_INT_EQ(long long)
#undef APT_RATIONAL_INT_EQ
} // namespace boost
