#pragma once

#include <stdexcept>

#include "nres/poly.hpp"

namespace nres {

/// First-order normal jet: value + slope * x_n, truncated at x_n^2 = 0.
/// One x_n-derivative per symbol factor is all the boundary formulas ever take,
/// so the truncation is lossless here.
struct Jet {
    ScalarPoly value;
    ScalarPoly slope;

    Jet() = default;
    explicit Jet(ScalarPoly v) : value(std::move(v)) {}
    Jet(ScalarPoly v, ScalarPoly s) : value(std::move(v)), slope(std::move(s)) {}
    explicit Jet(long c) : value(ScalarPoly(c)) {}
    explicit Jet(GaussianRational c) : value(ScalarPoly(std::move(c))) {}

    static Jet variable(VarId v) { return Jet(ScalarPoly::variable(v)); }

    bool is_zero() const { return value.is_zero() && slope.is_zero(); }

    Jet operator-() const { return {-value, -slope}; }
    Jet operator+(const Jet& o) const { return {value + o.value, slope + o.slope}; }
    Jet operator-(const Jet& o) const { return {value - o.value, slope - o.slope}; }
    Jet operator*(const Jet& o) const {
        return {value * o.value, value * o.slope + slope * o.value};
    }
    Jet operator*(const GaussianRational& c) const { return {value * c, slope * c}; }
    Jet operator*(const ScalarPoly& p) const { return {value * p, slope * p}; }
    Jet& operator+=(const Jet& o) {
        value += o.value;
        slope += o.slope;
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        value -= o.value;
        slope -= o.slope;
        return *this;
    }

    bool operator==(const Jet& o) const { return value == o.value && slope == o.slope; }
    bool operator!=(const Jet& o) const { return !(*this == o); }

    /// d/dx_n as a jet: the slope moves down, second-order data is gone.
    Jet dxn() const { return Jet(slope); }
};

inline Jet operator*(const GaussianRational& c, const Jet& j) { return j * c; }

namespace detail {

/// Inverse of a single monomial whose variables are all invertible (F <-> FINV).
inline bool invert_monomial(const Monomial& m, const GaussianRational& c, Jet& out) {
    Monomial inv;
    for (auto& [v, k] : m.e) {
        if (v.kind == Sym::FF)
            inv = inv.times(var(Sym::Finv), k);
        else if (v.kind == Sym::Finv)
            inv = inv.times(var(Sym::FF), k);
        else
            return false;
    }
    ScalarPoly p;
    p.add_term(inv, gq_inverse(c));
    out = Jet(p);
    return true;
}

}  // namespace detail

/// Inverse in the truncated ring: inv(a + b x_n) = a^{-1} - a^{-2} b x_n.
/// The value part must be a unit: a nonzero constant or a single monomial in
/// declared-invertible symbols.
inline Jet jet_invert(const Jet& j) {
    if (j.value.is_zero() || j.value.terms.size() != 1)
        throw std::domain_error("jet_invert: value part is not a unit");
    auto& [m, c] = *j.value.terms.begin();
    Jet ainv;
    if (!detail::invert_monomial(m, c, ainv))
        throw std::domain_error("jet_invert: value part is not invertible");
    ScalarPoly a2 = ainv.value * ainv.value;
    return {ainv.value, -(a2 * j.slope)};
}

inline Jet apply_relations(const Jet& j, int n, bool sphere = false) {
    return {apply_relations(j.value, n, sphere), apply_relations(j.slope, n, sphere)};
}

}  // namespace nres
