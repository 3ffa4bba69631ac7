#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "sumset/error.hpp"

namespace sumset {

/// Exact rational number, always reduced with a positive denominator.
///
/// Values whose numerator and denominator fit in int64 are stored inline and
/// use 128-bit intermediate arithmetic. Anything larger is promoted to a
/// shared immutable Boost.Multiprecision rational, and results are demoted
/// back whenever they fit, so the representation of a value is unique.
class Rational {
public:
    using BigInt = boost::multiprecision::cpp_int;
    using BigRational = boost::multiprecision::cpp_rational;

    Rational() noexcept = default;

    template <std::integral T>
    Rational(T value) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<T> && sizeof(T) <= sizeof(std::int64_t)) {
            if (static_cast<std::int64_t>(value) != kMin) {
                num_ = static_cast<std::int64_t>(value);
                return;
            }
        }
        else if constexpr (std::is_unsigned_v<T>) {
            if (static_cast<std::uint64_t>(value) <= static_cast<std::uint64_t>(kMax)) {
                num_ = static_cast<std::int64_t>(value);
                return;
            }
        }
        *this = from_big(BigRational(BigInt(value)));
    }

    Rational(std::int64_t num, std::int64_t den) { *this = from_i128(num, den); }

    Rational(const BigInt& num, const BigInt& den)
    {
        if (den == 0)
            throw Error(ErrorCode::ParseError, "zero denominator");
        *this = from_big(BigRational(num, den));
    }

    /// Parses "p", "-p" or "p/q" with q > 0.
    static Rational parse(std::string_view text)
    {
        auto digits_ok = [](std::string_view s, bool allow_sign) {
            if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
                s.remove_prefix(1);
            if (s.empty())
                return false;
            for (char ch : s)
                if (ch < '0' || ch > '9')
                    return false;
            return true;
        };
        auto slash = text.find('/');
        std::string_view num_text = text.substr(0, slash);
        if (!digits_ok(num_text, true))
            throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
        std::string numtxt(num_text);
        if (numtxt.front() == '+')
            numtxt.erase(0, 1);
        BigInt num(numtxt);
        BigInt den(1);
        if (slash != std::string_view::npos) {
            std::string_view den_text = text.substr(slash + 1);
            if (!digits_ok(den_text, false))
                throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
            den = BigInt(std::string(den_text));
            if (den == 0)
                throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
        }
        return Rational(num, den);
    }

    bool is_small() const noexcept { return !big_; }

    BigInt numerator() const { return big_ ? boost::multiprecision::numerator(*big_) : BigInt(num_); }
    BigInt denominator() const { return big_ ? boost::multiprecision::denominator(*big_) : BigInt(den_); }

    bool is_integer() const noexcept { return !big_ ? den_ == 1 : boost::multiprecision::denominator(*big_) == 1; }
    bool is_zero() const noexcept { return !big_ && num_ == 0; }

    int sign() const noexcept
    {
        if (big_)
            return big_->sign();
        return (num_ > 0) - (num_ < 0);
    }

    /// Value as int64 when it is an integer that fits.
    std::optional<std::int64_t> to_int64() const noexcept
    {
        if (!big_ && den_ == 1)
            return num_;
        return std::nullopt;
    }

    BigInt floor() const
    {
        BigInt n = numerator(), d = denominator();
        BigInt q = n / d;
        if (n % d != 0 && n.sign() < 0)
            q -= 1;
        return q;
    }

    BigInt ceil() const { return -(-*this).floor(); }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    double approx() const
    {
        if (!big_)
            return static_cast<double>(num_) / static_cast<double>(den_);
        return big_->convert_to<double>();
    }

    std::string str() const
    {
        if (!big_)
            return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
        auto n = boost::multiprecision::numerator(*big_);
        auto d = boost::multiprecision::denominator(*big_);
        return d == 1 ? n.str() : n.str() + "/" + d.str();
    }

    std::size_t hash() const noexcept
    {
        if (!big_) {
            std::size_t h = std::hash<std::int64_t>{}(num_);
            return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
        }
        return std::hash<std::string>{}(str());
    }

    Rational operator-() const
    {
        if (!big_)
            return Rational(Raw{}, -num_, den_);
        return from_big(-*big_);
    }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) {
                std::int64_t r;
                if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != kMin)
                    return Rational(Raw{}, r, 1);
            }
            std::int64_t g = gcd64(a.den_, b.den_);
            __int128 n = static_cast<__int128>(a.num_) * (b.den_ / g) + static_cast<__int128>(b.num_) * (a.den_ / g);
            __int128 d = static_cast<__int128>(a.den_) * (b.den_ / g);
            return from_i128(n, d);
        }
        return from_big(a.as_big() + b.as_big());
    }

    friend Rational operator-(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) {
                std::int64_t r;
                if (!__builtin_sub_overflow(a.num_, b.num_, &r) && r != kMin)
                    return Rational(Raw{}, r, 1);
            }
            std::int64_t g = gcd64(a.den_, b.den_);
            __int128 n = static_cast<__int128>(a.num_) * (b.den_ / g) - static_cast<__int128>(b.num_) * (a.den_ / g);
            __int128 d = static_cast<__int128>(a.den_) * (b.den_ / g);
            return from_i128(n, d);
        }
        return from_big(a.as_big() - b.as_big());
    }

    friend Rational operator*(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) {
                std::int64_t r;
                if (!__builtin_mul_overflow(a.num_, b.num_, &r) && r != kMin)
                    return Rational(Raw{}, r, 1);
            }
            __int128 n = static_cast<__int128>(a.num_) * b.num_;
            __int128 d = static_cast<__int128>(a.den_) * b.den_;
            return from_i128(n, d);
        }
        return from_big(a.as_big() * b.as_big());
    }

    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.is_zero())
            throw std::domain_error("rational division by zero");
        if (!a.big_ && !b.big_) {
            __int128 n = static_cast<__int128>(a.num_) * b.den_;
            __int128 d = static_cast<__int128>(a.den_) * b.num_;
            return from_i128(n, d);
        }
        return from_big(a.as_big() / b.as_big());
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_)
            return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_)
            return *a.big_ == *b.big_;
        return false; // canonical: a big value never fits in the small form
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            if (a.den_ == b.den_)
                return a.num_ <=> b.num_;
            __int128 l = static_cast<__int128>(a.num_) * b.den_;
            __int128 r = static_cast<__int128>(b.num_) * a.den_;
            return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
        }
        auto x = a.as_big(), y = b.as_big();
        if (x < y)
            return std::strong_ordering::less;
        if (x > y)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    struct Raw {};
    static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
    static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

    Rational(Raw, std::int64_t n, std::int64_t d) noexcept : num_(n), den_(d) {}

    static std::int64_t gcd64(std::int64_t a, std::int64_t b) noexcept
    {
        auto x = static_cast<std::uint64_t>(a < 0 ? -a : a);
        auto y = static_cast<std::uint64_t>(b < 0 ? -b : b);
        while (y) {
            auto t = x % y;
            x = y;
            y = t;
        }
        return static_cast<std::int64_t>(x);
    }

    static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) noexcept
    {
        while (b) {
            auto t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static BigInt to_big(__int128 v)
    {
        bool neg = v < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        BigInt r = static_cast<std::uint64_t>(u >> 64);
        r <<= 64;
        r += static_cast<std::uint64_t>(u);
        return neg ? BigInt(-r) : r;
    }

    static Rational from_i128(__int128 n, __int128 d)
    {
        if (d == 0)
            throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            // |n|, |d| < 2^127 here, so negation is safe.
            n = -n;
            d = -d;
        }
        unsigned __int128 un = n < 0 ? -static_cast<unsigned __int128>(n) : static_cast<unsigned __int128>(n);
        unsigned __int128 g = gcd128(un, static_cast<unsigned __int128>(d));
        if (g > 1) {
            n /= static_cast<__int128>(g);
            d /= static_cast<__int128>(g);
        }
        if (n > kMin && n <= kMax && d <= kMax)
            return Rational(Raw{}, static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
        Rational r;
        r.big_ = std::make_shared<const BigRational>(to_big(n), to_big(d));
        return r;
    }

    static Rational from_big(const BigRational& v)
    {
        const auto& n = boost::multiprecision::numerator(v);
        const auto& d = boost::multiprecision::denominator(v);
        if (n > BigInt(kMin) && n <= BigInt(kMax) && d <= BigInt(kMax))
            return Rational(Raw{}, n.convert_to<std::int64_t>(), d.convert_to<std::int64_t>());
        Rational r;
        r.big_ = std::make_shared<const BigRational>(v);
        return r;
    }

    BigRational as_big() const { return big_ ? *big_ : BigRational(BigInt(num_), BigInt(den_)); }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const BigRational> big_;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace sumset

template <>
struct std::hash<sumset::Rational> {
    std::size_t operator()(const sumset::Rational& r) const noexcept { return r.hash(); }
};
