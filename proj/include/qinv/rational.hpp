#ifndef QINV_RATIONAL_HPP
#define QINV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace qinv {

using BigInt = boost::multiprecision::cpp_int;

// Rational number in canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(BigInt num, BigInt den) { normalize(std::move(num), std::move(den)); }
    BigRat(long long n) : num_(n), den_(1) {} // NOLINT: implicit by design
    explicit BigRat(BigInt n) : num_(std::move(n)), den_(1) {}

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend BigRat operator+(const BigRat& a, const BigRat& b) {
        return BigRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRat operator-(const BigRat& a, const BigRat& b) {
        return BigRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRat operator*(const BigRat& a, const BigRat& b) {
        return BigRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BigRat operator/(const BigRat& a, const BigRat& b) {
        if (b.num_ == 0) throw std::domain_error("BigRat: division by zero");
        return BigRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    BigRat operator-() const {
        BigRat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    BigRat inverse() const {
        if (num_ == 0) throw std::domain_error("BigRat: division by zero");
        return BigRat(den_, num_);
    }

    friend bool operator==(const BigRat& a, const BigRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return !(a == b); }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

private:
    void normalize(BigInt num, BigInt den) {
        if (den == 0) throw std::domain_error("BigRat: zero denominator");
        if (num == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
        num_ = num / g;
        den_ = den / g;
    }

    BigInt num_;
    BigInt den_;
};

// Canonical reduced form with positive denominator.
inline BigRat rat_normalize(const BigInt& num, const BigInt& den) { return BigRat(num, den); }

// gcd of absolute values; 0 for an empty or all-zero list. Dividing the list
// through by a nonzero content yields coprime coefficients.
inline BigInt integer_content(const std::vector<BigInt>& coeffs) {
    BigInt g = 0;
    for (const BigInt& c : coeffs) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
        if (g == 1) break;
    }
    return g;
}

} // namespace qinv

#endif
