#pragma once

#include <map>

#include "nres/metric.hpp"
#include "nres/symbol.hpp"

namespace nres {

/// Leading orders of a total symbol: order -> part. Only the two top orders of
/// any operator (and the two top orders of its inverse) are ever needed here.
using GradedSymbol = std::map<int, BoundarySymbol>;

enum class NovikovVariant { N, NStar };

inline BoundarySymbol symbol_of(const BoundaryGeometry& geo, CliffPoly num, DenKey k = {}) {
    return BoundarySymbol::of(geo.n, std::move(num), k);
}

/// c(xi) = c(xi') + xi_n c(dx_n) as a numerator polynomial in xi_n.
inline CliffPoly c_xi_poly(const BoundaryGeometry& geo) {
    return {c_xi_prime(geo.gen), c_dxn(geo.gen)};
}

inline BoundarySymbol identity_symbol(const BoundaryGeometry& geo) {
    return symbol_of(geo, {CliffordElement::identity(geo.n)});
}

/// sigma_0 of the modified Novikov operator (variant picks the c(theta') sign).
inline CliffordElement sigma0_novikov(const BoundaryGeometry& geo, NovikovVariant v) {
    CliffordElement s = geo.b01 + geo.b02 + cbar_theta(geo.gen);
    CliffordElement cth = c_theta_prime(geo.gen);
    return v == NovikovVariant::N ? s + cth : s - cth;
}

/// Total symbol i c(xi) + sigma_0 of D_N or D_N^*.
inline GradedSymbol provider_novikov(const BoundaryGeometry& geo, NovikovVariant v) {
    GradedSymbol g;
    g[1] = symbol_of(geo, cp::scaled(c_xi_poly(geo), GaussianRational::i()));
    g[0] = symbol_of(geo, {sigma0_novikov(geo, v)});
    return g;
}

/// Order-zero multiplication operator by f (or f^{-1}).
inline GradedSymbol provider_factor(const BoundaryGeometry& geo, bool inverse) {
    ScalarPoly s = ScalarPoly::variable(var(inverse ? Sym::Finv : Sym::FF));
    GradedSymbol g;
    g[0] = symbol_of(geo, {CliffordElement::identity(geo.n, Jet(s))});
    return g;
}

/// Symbol composition keeping the two leading orders:
///   (A o B)_top   = A_ta B_tb
///   (A o B)_top-1 = A_{ta-1} B_tb + A_ta B_{tb-1}
///                   + sum_j d_{xi_j} A_ta . D_{x_j} B_tb,   D_x = -i d_x.
inline GradedSymbol compose(const GradedSymbol& A, const GradedSymbol& B) {
    int ta = A.rbegin()->first;
    int tb = B.rbegin()->first;
    const BoundarySymbol& At = A.at(ta);
    const BoundarySymbol& Bt = B.at(tb);
    int n = At.ring_n;

    GradedSymbol out;
    out[ta + tb] = (At * Bt).normalized();

    BoundarySymbol second(At.ring_n, At.mat_n);
    if (A.count(ta - 1)) second = second + A.at(ta - 1) * Bt;
    if (B.count(tb - 1)) second = second + At * B.at(tb - 1);
    for (int j = 1; j <= n; ++j) {
        BoundarySymbol dA = j == n ? At.derive_xin() : At.derive_xi(j);
        if (dA.structurally_zero()) continue;
        BoundarySymbol dB = Bt.derive_x(j);
        if (dB.structurally_zero()) continue;
        second = second + (dA * dB).scaled(-GaussianRational::i());
    }
    out[ta + tb - 1] = second.normalized();
    return out;
}

inline GradedSymbol compose_chain(const std::vector<GradedSymbol>& factors) {
    GradedSymbol acc = factors.front();
    for (size_t k = 1; k < factors.size(); ++k) acc = compose(acc, factors[k]);
    return acc;
}

/// Inverts a graded symbol with the two leading orders, given the pointwise
/// inverse of the leading part:
///   q_{-m}   = lead_inv,
///   q_{-m-1} = -q_{-m} [ P_{m-1} q_{-m} + sum_j d_{xi_j} P_m . D_{x_j} q_{-m} ].
inline GradedSymbol provider_inverse(const GradedSymbol& P, const BoundarySymbol& lead_inv) {
    int m = P.rbegin()->first;
    const BoundarySymbol& Pm = P.at(m);
    int n = Pm.ring_n;
    BoundarySymbol idm = BoundarySymbol::of(n, {CliffordElement::identity(Pm.mat_n)}, {});
    if (!symbols_equal((Pm * lead_inv).normalized(), idm))
        throw std::domain_error("provider_inverse: leading symbol inverse check failed");

    BoundarySymbol inner = P.at(m - 1) * lead_inv;
    for (int j = 1; j <= n; ++j) {
        BoundarySymbol dP = j == n ? Pm.derive_xin() : Pm.derive_xi(j);
        if (dP.structurally_zero()) continue;
        BoundarySymbol dq = lead_inv.derive_x(j);
        if (dq.structurally_zero()) continue;
        inner = inner + (dP * dq).scaled(-GaussianRational::i());
    }
    GradedSymbol out;
    out[-m] = lead_inv;
    out[-m - 1] = (-(lead_inv * inner)).normalized();
    return out;
}

/// q_{-1} = i c(xi)/|xi|^2, the pointwise inverse of i c(xi).
inline BoundarySymbol first_order_lead_inverse(const BoundaryGeometry& geo) {
    return symbol_of(geo, cp::scaled(c_xi_poly(geo), GaussianRational::i()), {0, 0, 1});
}

/// sigma(D^{-1}) down to order -2.
inline GradedSymbol provider_first_order_inverse(const BoundaryGeometry& geo, NovikovVariant v) {
    return provider_inverse(provider_novikov(geo, v), first_order_lead_inverse(geo));
}

/// Multiply a graded symbol by the zeroth-order factor f or f^{-1} on the left.
inline GradedSymbol conformal_wrap(const GradedSymbol& g, bool inverse) {
    ScalarPoly s = ScalarPoly::variable(var(inverse ? Sym::Finv : Sym::FF));
    GradedSymbol out;
    for (auto& [o, part] : g) out[o] = part.scaled(s);
    return out;
}

/// The sixth-order conformal product D* f D f^{-1} D* f, composed to its two
/// leading orders 3 and 2.
inline GradedSymbol provider_triple(const BoundaryGeometry& geo) {
    GradedSymbol Ds = provider_novikov(geo, NovikovVariant::NStar);
    GradedSymbol D = provider_novikov(geo, NovikovVariant::N);
    GradedSymbol f = provider_factor(geo, false);
    GradedSymbol finv = provider_factor(geo, true);
    return compose_chain({Ds, f, D, finv, Ds, f});
}

/// The bare triple D* D D* (conformal factors stripped), orders 3 and 2.
inline GradedSymbol provider_triple_plain(const BoundaryGeometry& geo) {
    GradedSymbol Ds = provider_novikov(geo, NovikovVariant::NStar);
    GradedSymbol D = provider_novikov(geo, NovikovVariant::N);
    return compose_chain({Ds, D, Ds});
}

/// q_{-3} = i c(xi) f^{-1} / |xi|^4 for the conformal triple (f^{-1} optional).
inline BoundarySymbol third_order_lead_inverse(const BoundaryGeometry& geo, bool conformal) {
    BoundarySymbol s = symbol_of(geo, cp::scaled(c_xi_poly(geo), GaussianRational::i()), {0, 0, 2});
    if (conformal) s = s.scaled(ScalarPoly::variable(var(Sym::Finv)));
    return s;
}

/// sigma((D* f D f^{-1} D* f)^{-1}) down to order -4.
inline GradedSymbol provider_triple_inverse(const BoundaryGeometry& geo) {
    return provider_inverse(provider_triple(geo), third_order_lead_inverse(geo, true));
}

/// c(df) with formal derivative components (DJF_j, DNF).
inline CliffordElement c_df(const BoundaryGeometry& geo) {
    CliffordElement m(geo.n);
    ScalarPoly half_h1 = ScalarPoly::variable(var(Sym::H1)) * GaussianRational(Rat(1) / 2);
    for (int j = 1; j < geo.n; ++j) {
        ScalarPoly dj = ScalarPoly::variable(var(Sym::Djf, j));
        m += geo.gen.c[j].scaled(Jet(dj, dj * half_h1));  // c(dx^j) carries the frame jet
    }
    m += c_dxn(geo.gen).scaled(Jet(ScalarPoly::variable(var(Sym::Dnf))));
    return m;
}

}  // namespace nres
