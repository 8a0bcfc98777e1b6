#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pbwdeform {

using Rational = boost::multiprecision::cpp_rational;

/// Which field a value lives in: p == 0 means the rationals, otherwise F_p.
struct Field {
    std::uint32_t p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;
    std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

struct FieldMismatch : std::invalid_argument {
    FieldMismatch() : std::invalid_argument("mixed-field arithmetic is rejected") {}
};

struct DivisionByZero : std::invalid_argument {
    DivisionByZero() : std::invalid_argument("division by zero") {}
};

/// Exact scalar in F_p (p prime, p < 2^31) or in Q.  Prime-field values are
/// kept reduced to [0, p); rationals in lowest terms (cpp_rational invariant).
class FieldScalar {
public:
    FieldScalar() = default;  // rational zero

    static FieldScalar zero(Field f) { return from_int(0, f); }
    static FieldScalar one(Field f) { return from_int(1, f); }

    static FieldScalar from_int(long long n, Field f) {
        FieldScalar s;
        s.field_ = f;
        if (f.is_rational()) {
            s.rat_ = n;
        } else {
            long long r = n % static_cast<long long>(f.p);
            if (r < 0) r += f.p;
            s.fp_ = r;
        }
        return s;
    }

    static FieldScalar from_rational(Rational r) {
        FieldScalar s;
        s.rat_ = std::move(r);
        return s;
    }

    Field field() const { return field_; }

    bool is_zero() const { return field_.is_rational() ? rat_.is_zero() : fp_ == 0; }
    bool is_one() const { return field_.is_rational() ? rat_ == 1 : fp_ == 1; }

    friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
        a.require_same(b);
        if (a.field_.is_rational()) return from_rational(a.rat_ + b.rat_);
        return from_int(a.fp_ + b.fp_, a.field_);
    }
    friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
        a.require_same(b);
        if (a.field_.is_rational()) return from_rational(a.rat_ - b.rat_);
        return from_int(a.fp_ - b.fp_, a.field_);
    }
    friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
        a.require_same(b);
        if (a.field_.is_rational()) return from_rational(a.rat_ * b.rat_);
        return from_int(a.fp_ * b.fp_, a.field_);
    }
    friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
        a.require_same(b);
        if (b.is_zero()) throw DivisionByZero{};
        if (a.field_.is_rational()) return from_rational(a.rat_ / b.rat_);
        return a * b.inverse();
    }
    FieldScalar operator-() const {
        if (field_.is_rational()) return from_rational(-rat_);
        return from_int(-fp_, field_);
    }
    FieldScalar& operator+=(const FieldScalar& b) { return *this = *this + b; }
    FieldScalar& operator-=(const FieldScalar& b) { return *this = *this - b; }
    FieldScalar& operator*=(const FieldScalar& b) { return *this = *this * b; }

    FieldScalar inverse() const {
        if (is_zero()) throw DivisionByZero{};
        if (field_.is_rational()) return from_rational(1 / rat_);
        // extended Euclid mod p
        long long a = fp_, m = field_.p, x0 = 0, x1 = 1;
        long long b = m;
        while (a > 1) {
            long long q = a / b;
            long long t = b; b = a % b; a = t;
            t = x0; x0 = x1 - q * x0; x1 = t;
        }
        return from_int(x1, field_);
    }

    bool operator==(const FieldScalar& a) const {
        return field_ == a.field_ && fp_ == a.fp_ && rat_ == a.rat_;
    }
    bool operator<(const FieldScalar& a) const {
        if (field_.p != a.field_.p) return field_.p < a.field_.p;
        if (field_.is_rational()) return rat_ < a.rat_;
        return fp_ < a.fp_;
    }

    /// Canonical text form: "a/b" for non-integral rationals, plain integer
    /// otherwise (prime-field values print their reduced representative).
    std::string str() const {
        if (!field_.is_rational()) return std::to_string(fp_);
        if (boost::multiprecision::denominator(rat_) == 1)
            return boost::multiprecision::numerator(rat_).str();
        return rat_.str();
    }

    long long fp_value() const { return fp_; }
    const Rational& rational_value() const { return rat_; }

private:
    void require_same(const FieldScalar& b) const {
        if (!(field_ == b.field_)) throw FieldMismatch{};
    }

    Field field_{};
    long long fp_ = 0;
    Rational rat_{0};
};

/// Parse a scalar token ("7", "-3", "5/6") in the declared field.
FieldScalar parse_scalar(const std::string& tok, Field f);

bool is_prime(std::uint32_t n);

}  // namespace pbwdeform
