#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace singedge {

// Reduced fraction over int64. den > 0, gcd(|num|, den) == 1.
// Construction from wider intermediates reports overflow instead of wrapping.
class Rat {
public:
    Rat() = default;
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) {
        auto r = make(static_cast<__int128>(n), static_cast<__int128>(d));
        if (!r) throw std::overflow_error("rational: value does not fit");
        *this = *r;
    }

    static std::optional<Rat> make(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational: division by zero");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        const __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) return std::nullopt;
        Rat r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    static std::optional<Rat> add(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    static std::optional<Rat> sub(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    static std::optional<Rat> mul(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    static std::optional<Rat> div(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("rational: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    // Exact comparison; products of a 64-bit numerator and denominator fit in 128 bits.
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }

    Rat negated() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }
    Rat abs() const { return num_ < 0 ? negated() : *this; }
    bool is_integer() const { return den_ == 1; }

    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    long long ceil() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    static __int128 i128(long long v) { return static_cast<__int128>(v); }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    long long num_ = 0;
    long long den_ = 1;
};

// Number that stays an exact rational as long as every operand is rational and
// no intermediate overflows; otherwise it carries a double. The double mirror
// is maintained in both states so mixed arithmetic and comparisons stay cheap.
class Scalar {
public:
    Scalar() : exact_(true), rat_(0), val_(0.0) {}
    Scalar(long long n) : exact_(true), rat_(n), val_(static_cast<double>(n)) {}
    Scalar(int n) : Scalar(static_cast<long long>(n)) {}
    Scalar(const Rat& r) : exact_(true), rat_(r), val_(r.to_double()) {}
    Scalar(double v) : exact_(false), rat_(0), val_(v) {}

    static Scalar ratio(long long n, long long d) { return Scalar(Rat(n, d)); }

    bool exact() const { return exact_; }
    const Rat& rat() const {
        if (!exact_) throw std::logic_error("scalar: no exact value");
        return rat_;
    }
    double value() const { return val_; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_)
            if (auto r = Rat::add(a.rat_, b.rat_)) return Scalar(*r);
        return Scalar(a.val_ + b.val_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_)
            if (auto r = Rat::sub(a.rat_, b.rat_)) return Scalar(*r);
        return Scalar(a.val_ - b.val_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_)
            if (auto r = Rat::mul(a.rat_, b.rat_)) return Scalar(*r);
        return Scalar(a.val_ * b.val_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.exact_ ? b.rat_.num() == 0 : b.val_ == 0.0)
            throw std::domain_error("scalar: division by zero");
        if (a.exact_ && b.exact_)
            if (auto r = Rat::div(a.rat_, b.rat_)) return Scalar(*r);
        return Scalar(a.val_ / b.val_);
    }
    Scalar operator-() const {
        if (exact_) return Scalar(rat_.negated());
        return Scalar(-val_);
    }
    Scalar abs() const {
        if (exact_) return Scalar(rat_.abs());
        return Scalar(std::abs(val_));
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return a.rat_ == b.rat_;
        return a.val_ == b.val_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return a.rat_ < b.rat_;
        return a.val_ < b.val_;
    }
    friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

    // Accepts "p/q", integer, or decimal text. Decimal input yields an inexact value.
    static std::optional<Scalar> parse(const std::string& text);

    std::string str() const;

private:
    bool exact_;
    Rat rat_;
    double val_;
};

std::string format_double(double v);

inline Scalar min(const Scalar& a, const Scalar& b) { return a < b ? a : b; }
inline Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace singedge
