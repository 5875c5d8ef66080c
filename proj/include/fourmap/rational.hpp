#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <optional>

namespace fourmap {

// Thrown when a query lies outside the parameter range the theory covers.
// The message names the violated constraint.
struct unsupported_parameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {
inline std::int64_t checked_cast(__int128 v, const char* ctx) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error(std::string("rational overflow in ") + ctx);
    return static_cast<std::int64_t>(v);
}
}

/// Exact rational number, always stored in lowest terms with positive
/// denominator. Region predicates on the limiting lines are measure-zero,
/// so all comparisons must be exact.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const { return Rational(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from_i128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from_i128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return double(num_) / double(den_); }

    /// Human form: "3", "-2/5".
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    /// Canonical fraction form "a/b" used in serialized output (always a slash).
    std::string frac_str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
    static Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
    static Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

private:
    static Rational from_i128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        __int128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num_ = detail::checked_cast(n, "normalize");
        r.den_ = detail::checked_cast(d, "normalize");
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_;
    std::int64_t den_;
};

/// Integrability-type index: a positive rational or infinity, with 1/inf = 0.
class Index {
public:
    Index() : fin_(Rational(1)) {}
    Index(Rational r) : fin_(r) {}
    Index(std::int64_t n) : fin_(Rational(n)) {}
    static Index infinity() { Index i; i.fin_.reset(); return i; }

    bool is_inf() const { return !fin_.has_value(); }
    const Rational& value() const {
        if (is_inf()) throw std::domain_error("index is infinite");
        return *fin_;
    }
    /// Exact reciprocal; 1/inf = 0.
    Rational recip() const {
        if (is_inf()) return Rational(0);
        if (fin_->is_zero()) throw std::domain_error("reciprocal of zero index");
        return Rational(1) / *fin_;
    }
    double to_double() const {
        return is_inf() ? std::numeric_limits<double>::infinity() : fin_->to_double();
    }

    friend bool operator==(const Index& a, const Index& b) {
        if (a.is_inf() || b.is_inf()) return a.is_inf() && b.is_inf();
        return *a.fin_ == *b.fin_;
    }
    friend bool operator!=(const Index& a, const Index& b) { return !(a == b); }
    friend bool operator<(const Index& a, const Index& b) {
        if (a.is_inf()) return false;
        if (b.is_inf()) return true;
        return *a.fin_ < *b.fin_;
    }
    friend bool operator>(const Index& a, const Index& b) { return b < a; }
    friend bool operator<=(const Index& a, const Index& b) { return !(b < a); }
    friend bool operator>=(const Index& a, const Index& b) { return !(a < b); }

    friend bool operator==(const Index& a, const Rational& r) { return !a.is_inf() && *a.fin_ == r; }
    friend bool operator<(const Index& a, const Rational& r) { return !a.is_inf() && *a.fin_ < r; }
    friend bool operator>(const Index& a, const Rational& r) { return a.is_inf() || *a.fin_ > r; }
    friend bool operator<(const Rational& r, const Index& a) { return a > r; }
    friend bool operator>(const Rational& r, const Index& a) { return a < r; }

    /// Conjugate exponent p' with 1/p + 1/p' = 1; requires p > 1.
    Index conjugate() const {
        if (is_inf()) return Index(Rational(1));
        if (!(*fin_ > Rational(1)))
            throw unsupported_parameters("conjugate exponent requires p > 1 (p = " + fin_->str() + ")");
        return Index(*fin_ / (*fin_ - Rational(1)));
    }

    std::string str() const { return is_inf() ? "inf" : fin_->str(); }

private:
    std::optional<Rational> fin_;
};

/// Parses "a/b", an integer, an exact finite decimal ("0.25" -> 1/4), or
/// "inf". Decimal strings are converted digit-exactly (denominator a power
/// of ten), never through floating point.
inline Rational parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string a = s.substr(0, slash), b = s.substr(slash + 1);
        if (a.empty() || b.empty()) throw std::invalid_argument("malformed rational '" + text + "'");
        std::size_t pa = 0, pb = 0;
        std::int64_t n = std::stoll(a, &pa), d = std::stoll(b, &pb);
        if (pa != a.size() || pb != b.size())
            throw std::invalid_argument("malformed rational '" + text + "'");
        if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rational(n, d);
    }
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') { neg = s[0] == '-'; i = 1; }
    std::int64_t ip = 0;
    bool any = false;
    for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
        ip = detail::checked_cast((__int128)ip * 10 + (s[i] - '0'), "parse");
        any = true;
    }
    if (i == s.size()) {
        if (!any) throw std::invalid_argument("malformed rational '" + text + "'");
        return Rational(neg ? -ip : ip);
    }
    if (s[i] != '.') throw std::invalid_argument("malformed rational '" + text + "'");
    ++i;
    std::int64_t num = ip, den = 1;
    bool frac = false;
    for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
        num = detail::checked_cast((__int128)num * 10 + (s[i] - '0'), "parse");
        den = detail::checked_cast((__int128)den * 10, "parse");
        frac = true;
    }
    if (i != s.size() || (!any && !frac))
        throw std::invalid_argument("malformed rational '" + text + "'");
    return Rational(neg ? -num : num, den);
}

inline Index parse_index(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity" || text == "oo")
        return Index::infinity();
    return Index(parse_rational(text));
}

} // namespace fourmap
