#pragma once

#include <array>
#include <vector>

#include "nres/clifford.hpp"

namespace nres {

/// Everything the collar metric g = h(x_n)^{-1} g_dM + dx_n^2 determines at a
/// boundary point in normal coordinates: the orthonormal-frame connection
/// matrix, the sigma_0 building blocks b_0^1, b_0^2, and the contracted
/// Christoffel Gamma^n. All of it is derived from the metric jets; the only
/// input datum is the formal slope h'(0).
struct BoundaryGeometry {
    int n = 0;
    GeneratorSet gen;
    CliffordElement b01;        // 1/4 sum omega_{s,t}(e_i) c_i cbar_s cbar_t at x0
    CliffordElement b02;        // -1/4 sum omega_{s,t}(e_i) c_i c_s c_t at x0
    ScalarPoly gamma_n;         // Gamma^n(x0) = g^{ij} Gamma^n_{ij}
    std::vector<std::vector<std::vector<ScalarPoly>>> omega;  // omega[s][t][i] at x0
};

inline BoundaryGeometry derive_geometry(int n) {
    BoundaryGeometry geo;
    geo.n = n;
    geo.gen = build_generators(n);

    ScalarPoly h1 = ScalarPoly::variable(var(Sym::H1));
    ScalarPoly zero, one(1);
    ScalarPoly half_h1 = h1 * GaussianRational(Rat(1) / 2);

    // Metric jets along the normal direction: g_ij = delta/h, g_nn = 1.
    auto g_dn = [&](int i, int j) -> Jet {
        if (i != j) return Jet();
        if (i == n) return Jet(1);
        return Jet(one, -h1);  // 1/h = 1 - h'(0) x_n + ...
    };
    auto g_up = [&](int i, int j) -> Jet {
        if (i != j) return Jet();
        if (i == n) return Jet(1);
        return Jet(one, h1);
    };
    // Tangential metric derivatives vanish at x0 (normal coordinates on dM).
    auto dmet = [&](int l, int i, int j) -> ScalarPoly {
        return l == n ? g_dn(i, j).slope : zero;
    };

    // Christoffel values at x0 (the metric is diagonal, so g^{kl} sums collapse).
    auto gamma = [&](int k, int i, int j) -> ScalarPoly {
        ScalarPoly s = dmet(i, j, k) + dmet(j, i, k) - dmet(k, i, j);
        return g_up(k, k).value * s * GaussianRational(Rat(1) / 2);
    };

    geo.gamma_n = zero;
    for (int i = 1; i <= n; ++i) geo.gamma_n += g_up(i, i).value * gamma(n, i, i);

    // Frame e_a = lambda_a d/dx_a with lambda_i = sqrt(h) (i < n), lambda_n = 1.
    auto lam_slope = [&](int b) -> ScalarPoly { return b == n ? zero : half_h1; };

    // nabla_{e_a} e_b = lambda_a (d_a lambda_b) d_b + lambda_a lambda_b Gamma^k_{ab} d_k
    // and omega_{s,b}(e_a) is the e_s coefficient (all lambdas are 1 at x0).
    geo.omega.assign(n + 1, std::vector<std::vector<ScalarPoly>>(
                                n + 1, std::vector<ScalarPoly>(n + 1, zero)));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int s = 1; s <= n; ++s) {
                ScalarPoly w = gamma(s, a, b);
                if (s == b && a == n) w += lam_slope(b);
                geo.omega[s][b][a] = w;
            }

    geo.b01 = CliffordElement(n);
    geo.b02 = CliffordElement(n);
    GaussianRational quarter(Rat(1) / 4);
    for (int i = 1; i <= n; ++i)
        for (int s = 1; s <= n; ++s)
            for (int t = 1; t <= n; ++t) {
                const ScalarPoly& w = geo.omega[s][t][i];
                if (w.is_zero()) continue;
                auto& g = geo.gen;
                geo.b01 += (g.c[i] * g.cbar[s] * g.cbar[t]).scaled(Jet(w * quarter));
                geo.b02 += (g.c[i] * g.c[s] * g.c[t]).scaled(Jet(-(w * quarter)));
            }
    return geo;
}

}  // namespace nres
