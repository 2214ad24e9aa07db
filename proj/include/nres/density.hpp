#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include "nres/poly.hpp"

namespace nres {

/// Exact boundary density: a linear combination of monomials in
/// {PI, OMEGA, H1, f-derivative symbols, GTHPN}, degree 1 in PI and OMEGA.
struct BoundaryDensity {
    ScalarPoly poly;

    bool operator==(const BoundaryDensity& o) const { return poly == o.poly; }
    bool is_zero() const { return poly.is_zero(); }

    BoundaryDensity operator+(const BoundaryDensity& o) const { return {poly + o.poly}; }
    BoundaryDensity operator-(const BoundaryDensity& o) const { return {poly - o.poly}; }

    /// Every monomial must carry exactly one PI and one OMEGA (or be zero).
    bool shape_ok() const {
        for (auto& [m, c] : poly.terms)
            if (m.deg(var(Sym::Pi)) != 1 || m.deg(var(Sym::Omega)) != 1) return false;
        return true;
    }

    std::string str() const { return poly.str(); }
};

/// Final cleanup of a computed density: ring relations, then the frame
/// component theta'_n reported as g(theta', dx_n).
inline BoundaryDensity finalize_density(const ScalarPoly& p, int n) {
    ScalarPoly q = apply_relations(p, n);
    q = q.subst(var(Sym::Thp, n), ScalarPoly::variable(var(Sym::Gthpn)));
    return {q};
}

/// Optional output substitution f d_n f^{-1} -> -f^{-1} d_n f (and likewise for
/// tangential indices), realized by d(f^{-1}) = -f^{-2} df.
inline BoundaryDensity simplify_f(const BoundaryDensity& d, int n) {
    ScalarPoly finv2 = ScalarPoly::variable(var(Sym::Finv)) * ScalarPoly::variable(var(Sym::Finv));
    ScalarPoly q = d.poly.subst(var(Sym::Dnfinv), -(finv2 * ScalarPoly::variable(var(Sym::Dnf))));
    for (int j = 1; j < n; ++j)
        q = q.subst(var(Sym::Djfinv, j), -(finv2 * ScalarPoly::variable(var(Sym::Djf, j))));
    return {apply_relations(q, n)};
}

}  // namespace nres
