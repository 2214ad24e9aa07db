#pragma once

#include <stdexcept>

#include "nres/symbol.hpp"

namespace nres {

/// Exact integral of a monomial in xi_1..xi_{n-1} over the unit sphere,
/// divided by the total volume symbol: 0 when any exponent is odd, else
/// prod (e_i - 1)!! / prod_{t=0}^{E-1} (m + 2t) with m = n-1, E = sum e_i / 2.
/// Omega itself stays formal.
inline ScalarPoly sphere_integrate(const ScalarPoly& p, int n) {
    ScalarPoly out;
    for (auto& [mono, c] : p.terms) {
        Monomial rest;
        long E2 = 0;  // sum of exponents
        Rat num(1);
        bool odd = false;
        for (auto& [v, k] : mono.e) {
            if (v.kind != Sym::Xi) {
                rest.e.emplace_back(v, k);
                continue;
            }
            if (k % 2) {
                odd = true;
                break;
            }
            E2 += k;
            for (int t = k - 1; t >= 1; t -= 2) num *= t;  // (k-1)!!
        }
        if (odd) continue;
        Rat den(1);
        long m = n - 1;
        for (long t = 0; t < E2 / 2; ++t) den *= (m + 2 * t);
        Monomial mo = rest.times(var(Sym::Omega));
        out.add_term(mo, c * GaussianRational(num / den));
    }
    return out;
}

/// Integral over the real xi_n line of a decaying scalar rational symbol,
/// evaluated as 2 pi i times the residues at xi_n = +i. The factor pi stays
/// formal. Input must be sphere-evaluated (no |xi|^2 keys) and scalar-valued.
inline ScalarPoly integrate_xi_n(const BoundarySymbol& s) {
    if (s.mat_n != 0) throw std::invalid_argument("integrate_xi_n: scalar symbol expected");
    ScalarPoly total;
    GaussianRational two_i = GaussianRational(Rat(2)) * GaussianRational::i();
    for (auto& [k, p] : s.terms) {
        if (k.m != 0) throw std::domain_error("integrate_xi_n: sphere evaluation required first");
        if (static_cast<int>(p.size()) > k.a + k.b - 1)
            throw std::domain_error("integrate_xi_n: insufficient decay");
        if (k.a == 0) continue;  // no pole in the upper half-plane
        CliffPoly shifted = detail::taylor_shift_i(p, 0);
        shifted.resize(k.a, CliffordElement(0));
        std::vector<GaussianRational> ser = detail::inv_pole_series(k.b, k.a);
        // residue = coefficient of u^{a-1} in N(i+u) (u+2i)^{-b}
        CliffordElement res(0);
        for (int j2 = 0; j2 < k.a; ++j2) {
            if (static_cast<size_t>(j2) >= shifted.size()) break;
            res += shifted[j2].scaled(ser[k.a - 1 - j2]);
        }
        Jet r = res.trace();  // 1x1 entry
        total += r.value * two_i;
    }
    return total * ScalarPoly::variable(var(Sym::Pi));
}

/// Lower-half-plane counterpart (used by the residue-sum property test):
/// -2 pi i times the residues at xi_n = -i.
inline ScalarPoly integrate_xi_n_lower(const BoundarySymbol& s) {
    if (s.mat_n != 0) throw std::invalid_argument("integrate_xi_n_lower: scalar symbol expected");
    ScalarPoly total;
    GaussianRational two_i = GaussianRational(Rat(2)) * GaussianRational::i();
    for (auto& [k, p] : s.terms) {
        if (k.m != 0) throw std::domain_error("integrate_xi_n_lower: sphere evaluation required");
        if (static_cast<int>(p.size()) > k.a + k.b - 1)
            throw std::domain_error("integrate_xi_n_lower: insufficient decay");
        if (k.b == 0) continue;
        // Flip xi_n -> -xi_n: the pole at -i moves to +i and
        //   N/((x-i)^a (x+i)^b)  becomes  (-1)^{a+b} N(-y)/((y-i)^b (y+i)^a),
        // with Res_{-i} f = -Res_{+i} f(-y). Altogether
        //   -2 pi i Res_{-i} = 2 pi i (-1)^{a+b} * (+i residue of the flip).
        CliffPoly flipped(p.size(), CliffordElement(0));
        for (size_t j = 0; j < p.size(); ++j)
            flipped[j] = (j % 2) ? p[j].scaled(GaussianRational(-1)) : p[j];
        CliffPoly shifted = detail::taylor_shift_i(flipped, 0);
        shifted.resize(k.b, CliffordElement(0));
        std::vector<GaussianRational> ser = detail::inv_pole_series(k.a, k.b);
        CliffordElement res(0);
        for (int j2 = 0; j2 < k.b; ++j2) res += shifted[j2].scaled(ser[k.b - 1 - j2]);
        Jet r = res.trace();
        GaussianRational sign((k.a + k.b) % 2 ? Rat(-1) : Rat(1));
        total += r.value * two_i * sign;
    }
    return total * ScalarPoly::variable(var(Sym::Pi));
}

}  // namespace nres
