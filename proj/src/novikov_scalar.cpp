#include "novik/novikov_scalar.hpp"

#include <algorithm>
#include <cctype>

namespace novik {

namespace {

// Sort, cancel equal pairs (characteristic 2), drop terms at or above the window.
void canonicalize(std::vector<Exponent>& terms, const std::optional<Exponent>& window) {
    std::sort(terms.begin(), terms.end());
    std::vector<Exponent> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if (((j - i) & 1U) != 0 && (!window || terms[i] < *window)) out.push_back(terms[i]);
        i = j;
    }
    terms = std::move(out);
}

std::optional<Exponent> min_window(const std::optional<Exponent>& a, const std::optional<Exponent>& b) {
    if (!a) return b;
    if (!b) return a;
    return min(*a, *b);
}

// Valuation used when bounding the precision of a product: the lowest
// exponent that could be present.  nullopt stands for +inf (an exact zero).
std::optional<Exponent> effective_valuation(const NovikovScalar& x) {
    if (!x.is_zero()) return x.terms().front();
    return x.window();
}

std::string exponent_token(const Exponent& a) {
    if (a.is_zero()) return "1";
    return "t^{" + a.str() + "}";
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
    return s;
}

// Parses "t^{p/q}", "t^p", "t" or "1".
Exponent parse_monomial(std::string_view tok, std::string_view whole) {
    tok = trim(tok);
    if (tok == "1") return Exponent(0);
    if (tok == "t") return Exponent(1);
    if (tok.size() >= 3 && tok.substr(0, 2) == "t^") {
        std::string_view e = tok.substr(2);
        if (!e.empty() && e.front() == '{') {
            if (e.back() != '}') throw ParseError("unbalanced brace in scalar '" + std::string(whole) + "'");
            e = e.substr(1, e.size() - 2);
        }
        return Rational::parse(e);
    }
    throw ParseError("malformed term '" + std::string(tok) + "' in scalar '" + std::string(whole) + "'");
}

}  // namespace

NovikovScalar::NovikovScalar(std::vector<Exponent> terms, std::optional<Exponent> window)
    : terms_(std::move(terms)), window_(std::move(window)) {
    canonicalize(terms_, window_);
}

NovikovScalar NovikovScalar::monomial(const Exponent& a) {
    NovikovScalar x;
    x.terms_.push_back(a);
    return x;
}

NovikovScalar NovikovScalar::parse(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty scalar");
    if (s == "0") return {};
    std::vector<Exponent> terms;
    std::optional<Exponent> window;
    // Split on '+' outside braces.
    int depth = 0;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        std::string_view tok = trim(s.substr(start, end - start));
        if (tok.empty()) throw ParseError("empty term in scalar '" + std::string(text) + "'");
        if (tok.size() > 3 && tok.substr(0, 2) == "O(" && tok.back() == ')') {
            if (window) throw ParseError("two windows in scalar '" + std::string(text) + "'");
            window = parse_monomial(tok.substr(2, tok.size() - 3), text);
        } else if (tok == "0") {
            // tolerated as an explicit zero summand
        } else {
            terms.push_back(parse_monomial(tok, text));
        }
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '{' || s[i] == '(') ++depth;
        if (s[i] == '}' || s[i] == ')') --depth;
        if (s[i] == '+' && depth == 0) {
            flush(i);
            start = i + 1;
        }
    }
    flush(s.size());
    if (window) {
        for (const auto& t : terms) {
            if (!(t < *window)) throw ParseError("term at or above window in '" + std::string(text) + "'");
        }
    }
    return NovikovScalar(std::move(terms), std::move(window));
}

std::string NovikovScalar::str() const {
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += '+';
        out += exponent_token(t);
    }
    if (window_) {
        if (!out.empty()) out += '+';
        out += "O(t^{" + window_->str() + "})";
    }
    return out.empty() ? "0" : out;
}

bool NovikovScalar::contains(const Exponent& a) const {
    return std::binary_search(terms_.begin(), terms_.end(), a);
}

ExtendedRational NovikovScalar::valuation() const {
    if (terms_.empty()) return ExtendedRational::pos_inf();
    return terms_.front();
}

const Exponent& NovikovScalar::max_exponent() const {
    if (terms_.empty()) throw PreconditionError("max_exponent of zero scalar");
    return terms_.back();
}

NovikovScalar NovikovScalar::shifted(const Exponent& a) const {
    NovikovScalar r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(t + a);
    if (window_) r.window_ = *window_ + a;
    return r;
}

NovikovScalar NovikovScalar::truncated(const Exponent& w) const {
    NovikovScalar r;
    r.window_ = min_window(window_, w);
    for (const auto& t : terms_) {
        if (t < *r.window_) r.terms_.push_back(t);
    }
    return r;
}

NovikovScalar NovikovScalar::without_window() const {
    NovikovScalar r = *this;
    r.window_.reset();
    return r;
}

NovikovScalar& NovikovScalar::operator+=(const NovikovScalar& o) {
    *this = *this + o;
    return *this;
}

NovikovScalar operator+(const NovikovScalar& a, const NovikovScalar& b) {
    NovikovScalar r;
    r.window_ = min_window(a.window_, b.window_);
    // Merge of two sorted lists with mod-2 cancellation.
    std::size_t i = 0;
    std::size_t j = 0;
    auto push = [&](const Exponent& e) {
        if (!r.window_ || e < *r.window_) r.terms_.push_back(e);
    };
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i] < b.terms_[j])) {
            push(a.terms_[i++]);
        } else if (i == a.terms_.size() || b.terms_[j] < a.terms_[i]) {
            push(b.terms_[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    return r;
}

NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b) {
    std::optional<Exponent> window;
    if (a.window_) {
        if (auto v = effective_valuation(b)) window = *a.window_ + *v;
    }
    if (b.window_) {
        if (auto v = effective_valuation(a)) window = min_window(window, *b.window_ + *v);
    }
    std::vector<Exponent> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            Exponent e = x + y;
            if (!window || e < *window) terms.push_back(std::move(e));
        }
    }
    return NovikovScalar(std::move(terms), std::move(window));
}

NovikovScalar add(const NovikovScalar& x, const NovikovScalar& y) { return x + y; }
NovikovScalar mul(const NovikovScalar& x, const NovikovScalar& y) { return x * y; }
ExtendedRational valuation(const NovikovScalar& x) { return x.valuation(); }

NovikovScalar inverse(const NovikovScalar& x, const Exponent& window) {
    if (x.is_zero()) throw PreconditionError("division by zero: inverse of the zero scalar");
    const Exponent e0 = x.terms().front();
    // u = t^-e0 x - 1, every exponent positive.
    std::vector<Exponent> tail;
    for (std::size_t i = 1; i < x.terms().size(); ++i) tail.push_back(x.terms()[i] - e0);
    std::optional<Exponent> rel_window = window;
    if (x.window()) rel_window = min(window, *x.window() - e0);
    const NovikovScalar u(tail);
    NovikovScalar sum = NovikovScalar::one().truncated(*rel_window).without_window();
    NovikovScalar power = sum;
    while (!power.is_zero()) {
        power = (power * u).truncated(*rel_window).without_window();
        sum += power;
    }
    return NovikovScalar(sum.shifted(-e0).terms(), *rel_window - e0);
}

std::optional<NovikovScalar> exact_divide(const NovikovScalar& a, const NovikovScalar& b) {
    if (b.is_zero()) throw PreconditionError("exact_divide by zero");
    if (!a.is_exact() || !b.is_exact()) throw PreconditionError("exact_divide needs window-free scalars");
    if (a.is_zero()) return NovikovScalar{};
    const Exponent& vb = b.terms().front();
    const Exponent limit = a.max_exponent() - b.max_exponent();
    std::vector<Exponent> quotient;
    NovikovScalar rem = a;
    while (!rem.is_zero()) {
        Exponent e = rem.terms().front() - vb;
        if (e > limit) return std::nullopt;
        rem += b.shifted(e);
        quotient.push_back(std::move(e));
    }
    return NovikovScalar(std::move(quotient));
}

}  // namespace novik
