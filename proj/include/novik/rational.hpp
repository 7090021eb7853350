#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace novik {

/// Thrown for malformed textual input (exit code 2 at the CLI).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation is called outside its domain.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact rational number of arbitrary magnitude, always in lowest terms.
///
/// Textual form is "p/q" with q > 1, or "p" for integers.  Parsing accepts
/// an optional sign, and normalises non-canonical input such as "2/4".
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class v) : q_(std::move(v)) { q_.canonicalize(); }

    static Rational parse(std::string_view text);

    [[nodiscard]] std::string str() const;
    [[nodiscard]] const mpq_class& raw() const { return q_; }
    [[nodiscard]] double to_double() const { return q_.get_d(); }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }

    /// Largest integer n with n <= *this.
    [[nodiscard]] mpz_class floor() const;
    /// Smallest integer n with n >= *this.
    [[nodiscard]] mpz_class ceil() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Exponents of the Novikov variable, actions and levels all live in the same
/// exact rational line.
using Exponent = Rational;

/// A rational extended by the two sentinels -inf and +inf.
///
/// -inf is the level of the zero chain (and the spectral invariant of an
/// exact class); +inf is the valuation of the zero scalar.
class ExtendedRational {
public:
    enum class Kind : std::uint8_t { neg_inf, finite, pos_inf };

    ExtendedRational() : kind_(Kind::neg_inf) {}
    ExtendedRational(Rational v) : kind_(Kind::finite), value_(std::move(v)) {}  // NOLINT
    ExtendedRational(long v) : kind_(Kind::finite), value_(v) {}                // NOLINT

    static ExtendedRational neg_inf() { return ExtendedRational(Kind::neg_inf); }
    static ExtendedRational pos_inf() { return ExtendedRational(Kind::pos_inf); }
    static ExtendedRational parse(std::string_view text);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] bool is_finite() const { return kind_ == Kind::finite; }
    [[nodiscard]] bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
    [[nodiscard]] bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
    /// Throws PreconditionError on a sentinel.
    [[nodiscard]] const Rational& value() const;
    [[nodiscard]] std::string str() const;

    /// Sum with the convention that -inf absorbs finite values; -inf + +inf
    /// is rejected.
    friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
    friend ExtendedRational operator-(const ExtendedRational& a);

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::finite || a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

    friend std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) {
        return os << r.str();
    }

private:
    explicit ExtendedRational(Kind k) : kind_(k) {}
    Kind kind_;
    Rational value_;
};

ExtendedRational max(const ExtendedRational& a, const ExtendedRational& b);
ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b);

}  // namespace novik

template <>
struct std::hash<novik::Rational> {
    std::size_t operator()(const novik::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
