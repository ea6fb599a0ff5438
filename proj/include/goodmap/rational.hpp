#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace goodmap {

// Exact arbitrary-precision rationals; no floating point anywhere in the
// algebra layer.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Small prime field, used to keep fuzz tests cheap. All production
// computations run over the rationals.
template <std::uint64_t P>
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long long v) : v_(normalize(v)) {}

    std::uint64_t value() const { return v_; }

    Fp operator+(Fp o) const { return from_raw((v_ + o.v_) % P); }
    Fp operator-(Fp o) const { return from_raw((v_ + P - o.v_) % P); }
    Fp operator-() const { return from_raw(v_ == 0 ? 0 : P - v_); }
    Fp operator*(Fp o) const { return from_raw((v_ * o.v_) % P); }
    Fp operator/(Fp o) const { return *this * o.inverse(); }

    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }

    bool operator==(Fp o) const { return v_ == o.v_; }
    bool operator!=(Fp o) const { return v_ != o.v_; }

    Fp inverse() const {
        // Fermat: P is prime.
        Fp r(1), b = *this;
        std::uint64_t e = P - 2;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string str() const { return std::to_string(v_); }

private:
    static std::uint64_t normalize(long long v) {
        long long m = v % static_cast<long long>(P);
        if (m < 0) m += static_cast<long long>(P);
        return static_cast<std::uint64_t>(m);
    }
    static Fp from_raw(std::uint64_t v) {
        Fp r;
        r.v_ = v;
        return r;
    }

    std::uint64_t v_;
};

template <class K>
struct FieldOps {
    static K zero() { return K(0); }
    static K one() { return K(1); }
    static bool is_zero(const K& a) { return a == K(0); }
    static std::string str(const K& a) { return a.str(); }
};

template <>
struct FieldOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static std::string str(const Rational& a) { return a.get_str(); }
};

}  // namespace goodmap
