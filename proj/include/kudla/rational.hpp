#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kudla {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    ExactRational(long num, long den);
    explicit ExactRational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Parses "p", "-p", "p/q" or a terminating decimal such as "1.25".
    static ExactRational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Numerator as a machine integer; throws if it does not fit or the value
    /// is not an integer.
    long to_long() const;
    double to_double() const { return value_.get_d(); }
    /// Canonical "p/q" text ("p" when the denominator is 1).
    std::string str() const { return value_.get_str(); }

    const mpq_class& raw() const { return value_; }

    ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { value_ *= o.value_; return *this; }
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    friend ExactRational operator-(const ExactRational& a) { return ExactRational(mpq_class(-a.value_)); }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

ExactRational abs(const ExactRational& r);
ExactRational pow(const ExactRational& base, int exponent);

}  // namespace kudla
