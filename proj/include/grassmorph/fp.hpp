#ifndef GRASSMORPH_FP_HPP
#define GRASSMORPH_FP_HPP

#include <array>
#include <cstdint>

#include "grassmorph/errors.hpp"
#include "grassmorph/rational.hpp"

namespace grassmorph {

/// Fixed list of reduction primes. The large entries sit just below 2^62 so
/// products fit in unsigned 128-bit intermediates; the small ones serve the
/// exhaustive P^2(F_p) scans.
inline constexpr std::array<std::uint64_t, 8> kReductionPrimes = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
    4611686018427387761ULL, 4611686018427387751ULL, 4611686018427387737ULL,
    4611686018427387733ULL, 4611686018427387709ULL,
};

inline constexpr std::array<std::uint64_t, 6> kScanPrimes = {31, 101, 257, 1009, 10007, 100003};

/// Element of a prime field F_p, p < 2^62. Each value carries its modulus;
/// mixing moduli is a programming error.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    static Fp from_int(long long value, std::uint64_t p) {
        long long m = value % static_cast<long long>(p);
        if (m < 0) m += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(m), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp(s, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_;
        return Fp(s, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        unsigned __int128 w = static_cast<unsigned __int128>(a.v_) * b.v_;
        return Fp(static_cast<std::uint64_t>(w % a.p_), a.p_);
    }
    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp inverse() const {
        if (v_ == 0) throw Error("division by zero in F_p");
        // extended Euclid on signed 128-bit
        __int128 t0 = 0, t1 = 1;
        __int128 r0 = static_cast<__int128>(p_), r1 = static_cast<__int128>(v_);
        while (r1 != 0) {
            __int128 q = r0 / r1;
            __int128 tr = r0 - q * r1; r0 = r1; r1 = tr;
            __int128 tt = t0 - q * t1; t0 = t1; t1 = tt;
        }
        if (t0 < 0) t0 += static_cast<__int128>(p_);
        return Fp(static_cast<std::uint64_t>(t0), p_);
    }

    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp pow(std::uint64_t e) const {
        Fp acc(1 % p_, p_);
        Fp b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

private:
    std::uint64_t v_;
    std::uint64_t p_;
};

/// Image of a rational under the reduction map Q -> F_p.
/// Throws BadPrime when p divides the denominator.
inline Fp reduce_mod_p(const Rational& r, std::uint64_t p) {
    const BigInt bp(p);
    BigInt den = denominator(r) % bp;
    if (den == 0) throw BadPrime("denominator of " + to_string(r) + " vanishes mod " + std::to_string(p));
    BigInt num = numerator(r) % bp;
    if (num < 0) num += bp;
    Fp n(static_cast<std::uint64_t>(num), p);
    Fp d(static_cast<std::uint64_t>(den), p);
    return n / d;
}

} // namespace grassmorph

#endif
