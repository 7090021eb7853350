#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "novik/rational.hpp"

namespace novik {

/// Element of the universal Novikov field over Z/2, at desk scale.
///
/// A scalar is a finite set of exponents a (each standing for the monomial
/// t^a with coefficient 1) plus an optional window w.  When a window is
/// present the value is only known for exponents < w, so every stored term
/// lies strictly below it.  Without a window the sum is exact.
class NovikovScalar {
public:
    NovikovScalar() = default;
    /// Collects `terms` mod 2 (pairs of equal exponents cancel) and drops
    /// anything at or above `window`.
    explicit NovikovScalar(std::vector<Exponent> terms, std::optional<Exponent> window = std::nullopt);

    static NovikovScalar one() { return monomial(Exponent(0)); }
    static NovikovScalar monomial(const Exponent& a);

    /// "0", "1", "t^{1/2}", "1+t^{1/2}+t^{2}".  A window is written as a
    /// trailing "+O(t^{w})" term.
    static NovikovScalar parse(std::string_view text);
    [[nodiscard]] std::string str() const;

    [[nodiscard]] const std::vector<Exponent>& terms() const { return terms_; }
    [[nodiscard]] const std::optional<Exponent>& window() const { return window_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_exact() const { return !window_.has_value(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool contains(const Exponent& a) const;

    /// Minimal exponent, +inf for zero.
    [[nodiscard]] ExtendedRational valuation() const;
    /// Maximal exponent; throws on zero.
    [[nodiscard]] const Exponent& max_exponent() const;

    /// Multiply by t^a.  Windows shift with the terms.
    [[nodiscard]] NovikovScalar shifted(const Exponent& a) const;
    /// Forget everything at or above `w` (keeps the tighter of the two windows).
    [[nodiscard]] NovikovScalar truncated(const Exponent& w) const;
    /// Same terms without a window.  Only meaningful for scalars known exactly.
    [[nodiscard]] NovikovScalar without_window() const;

    NovikovScalar& operator+=(const NovikovScalar& o);
    friend NovikovScalar operator+(const NovikovScalar& a, const NovikovScalar& b);
    friend NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b);

    friend bool operator==(const NovikovScalar& a, const NovikovScalar& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const NovikovScalar& x) { return os << x.str(); }

private:
    std::vector<Exponent> terms_;
    std::optional<Exponent> window_;
};

NovikovScalar add(const NovikovScalar& x, const NovikovScalar& y);
NovikovScalar mul(const NovikovScalar& x, const NovikovScalar& y);
ExtendedRational valuation(const NovikovScalar& x);

/// y with x*y = 1 below the window.  Written x = t^e0 (1 + u), the result is
/// t^-e0 times the geometric series in u, truncated so that it is certified
/// below `window`.  Throws PreconditionError when x = 0.
NovikovScalar inverse(const NovikovScalar& x, const Exponent& window);

/// Exact quotient a / b of two window-free scalars when b divides a inside
/// the polynomial ring Z/2[t^Q]; nullopt otherwise.  Throws when b = 0.
std::optional<NovikovScalar> exact_divide(const NovikovScalar& a, const NovikovScalar& b);

}  // namespace novik
