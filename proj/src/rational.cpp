#include "novik/rational.hpp"

#include <cctype>

namespace novik {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) {
        throw ParseError("malformed rational '" + std::string(text) + "' (expected p/q)");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const { return q_.get_str(10); }

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

mpz_class Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw PreconditionError("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

ExtendedRational ExtendedRational::parse(std::string_view text) {
    if (text == "-inf") return neg_inf();
    if (text == "+inf" || text == "inf") return pos_inf();
    return Rational::parse(text);
}

const Rational& ExtendedRational::value() const {
    if (kind_ != Kind::finite) throw PreconditionError("value() of an infinite sentinel");
    return value_;
}

std::string ExtendedRational::str() const {
    switch (kind_) {
        case Kind::neg_inf: return "-inf";
        case Kind::pos_inf: return "+inf";
        case Kind::finite: break;
    }
    return value_.str();
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
    using K = ExtendedRational::Kind;
    if ((a.kind_ == K::neg_inf && b.kind_ == K::pos_inf) ||
        (a.kind_ == K::pos_inf && b.kind_ == K::neg_inf)) {
        throw PreconditionError("-inf + +inf is undefined");
    }
    if (a.kind_ != K::finite) return a;
    if (b.kind_ != K::finite) return b;
    return ExtendedRational(a.value_ + b.value_);
}

ExtendedRational operator-(const ExtendedRational& a) {
    using K = ExtendedRational::Kind;
    switch (a.kind_) {
        case K::neg_inf: return ExtendedRational::pos_inf();
        case K::pos_inf: return ExtendedRational::neg_inf();
        case K::finite: break;
    }
    return ExtendedRational(-a.value_);
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != ExtendedRational::Kind::finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
}

ExtendedRational max(const ExtendedRational& a, const ExtendedRational& b) { return a < b ? b : a; }
ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b) { return b < a ? b : a; }

}  // namespace novik
