#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <stdexcept>
#include <string>

namespace nres {

using Rat = boost::multiprecision::cpp_rational;

/// Exact complex rational a + b*i; the coefficient field of the whole engine.
struct GaussianRational {
    Rat re{0};
    Rat im{0};

    GaussianRational() = default;
    GaussianRational(long r) : re(r) {}
    GaussianRational(Rat r) : re(std::move(r)) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rat(0), Rat(1)}; }
    static GaussianRational of(long num, long den) { return {Rat(num) / Rat(den)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }
    bool operator<(const GaussianRational& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }

    GaussianRational conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }
};

/// z^{-1}; throws on z = 0.
inline GaussianRational gq_inverse(const GaussianRational& z) {
    if (z.is_zero()) throw std::domain_error("gq_inverse: division by zero");
    Rat n = z.norm();
    return {z.re / n, -z.im / n};
}

inline GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * gq_inverse(b);
}

/// i^k for any integer k.
inline GaussianRational i_power(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational::i();
        case 2: return GaussianRational(-1);
        default: return -GaussianRational::i();
    }
}

inline std::string to_string(const Rat& r) { return r.str(); }

inline std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return to_string(z.re);
    std::string s;
    if (z.re != 0) s = to_string(z.re);
    std::string im = to_string(z.im);
    if (z.im == 1)
        im = "i";
    else if (z.im == -1)
        im = "-i";
    else
        im += "i";
    if (!s.empty() && im[0] != '-') s += "+";
    return s + im;
}

/// Parses "p/q" or "p" (optionally signed). Used by the fixture loader.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
    return Rat(s);
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << to_string(z);
}

}  // namespace nres
