#pragma once

#include <random>

#include "nres/providers.hpp"

namespace nres::testing {

inline ScalarPoly H1() { return ScalarPoly::variable(var(Sym::H1)); }
inline ScalarPoly SQ() { return ScalarPoly::variable(var(Sym::Sq)); }
inline GaussianRational gi() { return GaussianRational::i(); }
inline GaussianRational frac(long n, long d) { return GaussianRational(Rat(n) / Rat(d)); }

/// c(xi')(x0), c(dxn), d_xn c(xi')(x0) as value-only matrices.
struct Frame {
    BoundaryGeometry geo;
    CliffordElement cxi0, cdn, dcxi0, id;

    explicit Frame(int n) : geo(derive_geometry(n)) {
        cxi0 = c_xi_prime(geo.gen).value_part();
        cdn = c_dxn(geo.gen);
        dcxi0 = c_xi_prime(geo.gen).dxn().value_part();
        id = CliffordElement::identity(n);
    }
};

/// N(xi_n)/((xi_n-i)^a (xi_n+i)^b), value-only coefficients.
inline BoundarySymbol pole_sym(int ring_n, CliffPoly num, int a, int b) {
    return BoundarySymbol::of(ring_n, std::move(num), DenKey{a, b, 0});
}

/// Scale (xi', xi_n) -> (t xi', t xi_n) on a pre-sphere symbol; the SQ symbol
/// scales as t^2. Returns the scaled symbol for homogeneity checks.
inline BoundarySymbol scale_xi(const BoundarySymbol& s, long t) {
    ScalarPoly tsq = ScalarPoly(GaussianRational(t * t)) * SQ();
    BoundarySymbol r(s.ring_n, s.mat_n);
    r.jet_ok = s.jet_ok;
    for (auto& [k, p] : s.terms) {
        CliffPoly q;
        GaussianRational tk(1);
        for (size_t d = 0; d < p.size(); ++d) {
            CliffordElement c = p[d].map_entries([&](const Jet& j) {
                ScalarPoly v = j.value, sl = j.slope;
                for (int i = 1; i < s.ring_n; ++i) {
                    ScalarPoly tx = ScalarPoly(GaussianRational(t)) * ScalarPoly::variable(xi(i));
                    v = v.subst(xi(i), tx);
                    sl = sl.subst(xi(i), tx);
                }
                v = v.subst(var(Sym::Sq), tsq);
                sl = sl.subst(var(Sym::Sq), tsq);
                return Jet(v * tk, sl * tk);
            });
            q.push_back(std::move(c));
            tk *= GaussianRational(t);
        }
        cp::trim(q);
        if (!q.empty()) r.terms[k] = std::move(q);
    }
    return r;
}

/// t^k scaling of a whole symbol (for comparing with scale_xi).
inline BoundarySymbol scale_const(const BoundarySymbol& s, long t, int k) {
    GaussianRational c(1);
    for (int i = 0; i < k; ++i) c *= GaussianRational(t);
    for (int i = 0; i > k; --i) c = c * gq_inverse(GaussianRational(t));
    return s.scaled(c);
}

/// Random decaying scalar rational symbols with poles at +-i (for pi+ props).
inline BoundarySymbol random_decaying(std::mt19937& rng, int ring_n) {
    std::uniform_int_distribution<int> ab(0, 3), cnum(-6, 6), terms(1, 3);
    BoundarySymbol s(ring_n, 0);
    int nt = terms(rng);
    for (int t = 0; t < nt; ++t) {
        int a = ab(rng), b = ab(rng);
        if (a + b < 2) b = 2 - a;
        int maxdeg = a + b - 2;
        std::uniform_int_distribution<int> degd(0, maxdeg);
        int deg = degd(rng);
        CliffPoly p;
        for (int d = 0; d <= deg; ++d) {
            CliffordElement c(0);
            c.set(0, 0, Jet(GaussianRational(Rat(cnum(rng)), Rat(cnum(rng)))));
            p.push_back(std::move(c));
        }
        cp::trim(p);
        if (p.empty()) continue;
        s = s + BoundarySymbol::of(ring_n, p, DenKey{a, b, 0});
    }
    return s;
}

}  // namespace nres::testing
