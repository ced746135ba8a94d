#ifndef QINV_FP_HPP
#define QINV_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qinv {

// Element of a prime field F_p. The modulus is a runtime value so F_2 and F_3
// (and larger test primes) share one code path. Values are kept fully reduced:
// 0 <= value < p.
class Fp {
public:
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {
        if (p < 2) throw std::domain_error("Fp: modulus must be at least 2");
    }

    static Fp from_int(long long value, std::uint64_t p) {
        long long r = value % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        check_moduli(a, b);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp(s, a.p_, raw_tag{});
    }

    friend Fp operator-(const Fp& a, const Fp& b) {
        check_moduli(a, b);
        std::uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_;
        return Fp(s, a.p_, raw_tag{});
    }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, raw_tag{}); }

    friend Fp operator*(const Fp& a, const Fp& b) {
        check_moduli(a, b);
        return Fp(static_cast<std::uint64_t>(
                      (static_cast<unsigned __int128>(a.v_) * b.v_) % a.p_),
                  a.p_, raw_tag{});
    }

    // Inverse by extended Euclid; requires a nonzero element.
    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        long long t = 0, new_t = 1;
        long long r = static_cast<long long>(p_), new_r = static_cast<long long>(v_);
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (r != 1)
            throw std::domain_error("Fp: modulus " + std::to_string(p_) + " is not prime");
        if (t < 0) t += static_cast<long long>(p_);
        return Fp(static_cast<std::uint64_t>(t), p_, raw_tag{});
    }

    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    friend bool operator==(const Fp& a, const Fp& b) {
        check_moduli(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    struct raw_tag {};
    Fp(std::uint64_t value, std::uint64_t p, raw_tag) : v_(value), p_(p) {}

    static void check_moduli(const Fp& a, const Fp& b) {
        if (a.p_ != b.p_)
            throw std::domain_error("Fp: mixed moduli " + std::to_string(a.p_) + " and " +
                                    std::to_string(b.p_));
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

inline Fp ff_inv(const Fp& x) { return x.inverse(); }

} // namespace qinv

#endif
