#pragma once

#include "fourmap/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fourmap {

/// Shape of an entropy-number envelope as a function of k.
enum class RateForm {
    pure_power,                  // k^a
    power_times_log,             // k^a (log k)^b
    k_over_logk_power,           // (k/log k)^a
    k_over_logk_power_times_log, // (k/log k)^a (log k)^b
};

enum class BoundType { equivalence, upper_bound, conjecture, open };

inline const char* form_name(RateForm f) {
    switch (f) {
        case RateForm::pure_power: return "pure_power";
        case RateForm::power_times_log: return "power_times_log";
        case RateForm::k_over_logk_power: return "k_over_logk_power";
        case RateForm::k_over_logk_power_times_log: return "k_over_logk_power_times_log";
    }
    return "?";
}

inline const char* bound_name(BoundType b) {
    switch (b) {
        case BoundType::equivalence: return "equivalence";
        case BoundType::upper_bound: return "upper_bound";
        case BoundType::conjecture: return "conjecture";
        case BoundType::open: return "open";
    }
    return "?";
}

/// Predicted entropy-number envelope e_k ~ (law of k), exact exponents.
struct RateLaw {
    Rational power_exponent{0};
    Rational log_exponent{0};
    RateForm form = RateForm::pure_power;
    BoundType bound_type = BoundType::open;

    static RateLaw power(Rational a, BoundType b) {
        RateLaw r{a, Rational(0), RateForm::pure_power, b};
        r.validate();
        return r;
    }
    static RateLaw power_log(Rational a, Rational blog, BoundType b) {
        RateLaw r{a, blog, RateForm::power_times_log, b};
        r.validate();
        return r;
    }
    static RateLaw k_over_logk(Rational a, BoundType b) {
        RateLaw r{a, Rational(0), RateForm::k_over_logk_power, b};
        r.validate();
        return r;
    }
    static RateLaw k_over_logk_log(Rational a, Rational blog, BoundType b) {
        RateLaw r{a, blog, RateForm::k_over_logk_power_times_log, b};
        r.validate();
        return r;
    }
    /// Marker for cases the theory leaves open: no asserted envelope.
    static RateLaw open_case() {
        return RateLaw{Rational(0), Rational(0), RateForm::pure_power, BoundType::open};
    }

    void validate() const {
        bool logless = form == RateForm::pure_power || form == RateForm::k_over_logk_power;
        if (logless != log_exponent.is_zero())
            throw std::logic_error("rate-law form inconsistent with log exponent");
        if (bound_type != BoundType::open && !(power_exponent < Rational(0)))
            throw std::logic_error("compact mapping must have negative power exponent");
    }

    /// Evaluate the envelope at integer k >= 2 (for fits and reports).
    double eval(double k) const {
        double lk = std::log(k);
        double a = power_exponent.to_double(), b = log_exponent.to_double();
        switch (form) {
            case RateForm::pure_power: return std::pow(k, a);
            case RateForm::power_times_log: return std::pow(k, a) * std::pow(lk, b);
            case RateForm::k_over_logk_power: return std::pow(k / lk, a);
            case RateForm::k_over_logk_power_times_log: return std::pow(k / lk, a) * std::pow(lk, b);
        }
        return 0.0;
    }

    std::string str() const {
        std::string a = power_exponent.str(), b = log_exponent.str();
        switch (form) {
            case RateForm::pure_power: return "k^{" + a + "}";
            case RateForm::power_times_log: return "k^{" + a + "} (log k)^{" + b + "}";
            case RateForm::k_over_logk_power: return "(k/log k)^{" + a + "}";
            case RateForm::k_over_logk_power_times_log:
                return "(k/log k)^{" + a + "} (log k)^{" + b + "}";
        }
        return "?";
    }

    friend bool operator==(const RateLaw& x, const RateLaw& y) {
        return x.form == y.form && x.bound_type == y.bound_type &&
               x.power_exponent == y.power_exponent && x.log_exponent == y.log_exponent;
    }
};

} // namespace fourmap
