#pragma once

#include <chrono>
#include <cstdlib>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "nres/density.hpp"
#include "nres/integrate.hpp"
#include "nres/providers.hpp"

namespace nres {

/// One (r, l, k, j, alpha) slot of the boundary sum with its printed prefactor.
struct CaseSpec {
    std::string id;     // "a1", "a2", "a3", "b", "c"
    int r = -1;         // left symbol order
    int l = -1;         // right symbol order
    int k = 0;          // xi_n derivatives (left), x_n derivatives (right)
    int j = 0;          // x_n derivatives (left); right gets d_{xi_n}^{j+1}
    int alpha = 0;      // |alpha| in {0,1}; tangential pair summed over 1..n-1
    GaussianRational prefactor;

    bool constraint_ok(int n) const { return r - k + alpha + l - j - 1 == -n; }
};

/// The five cases of the boundary integrand. The per-case prefactors
/// (-1, -1/2, -1/2, -i, -i) follow the worked cases; the compact exponent
/// formula printed next to the sum does not reproduce them.
inline std::vector<CaseSpec> enumerate_cases(int n) {
    if (n != 4 && n != 6) throw std::invalid_argument("enumerate_cases: dimension must be 4 or 6");
    GaussianRational mi = -GaussianRational::i();
    GaussianRational mhalf(Rat(-1) / 2);
    int l1 = n == 4 ? -1 : -3;  // shallow right order
    int l2 = n == 4 ? -2 : -4;  // deep right order
    std::vector<CaseSpec> cs;
    if (n == 4) {
        cs = {{"a1", -1, l1, 0, 0, 1, GaussianRational(-1)},
              {"a2", -1, l1, 0, 1, 0, mhalf},
              {"a3", -1, l1, 1, 0, 0, mhalf},
              {"b", -2, l1, 0, 0, 0, mi},
              {"c", -1, l2, 0, 0, 0, mi}};
    } else {
        cs = {{"a1", -1, l1, 0, 0, 1, GaussianRational(-1)},
              {"a2", -1, l1, 0, 1, 0, mhalf},
              {"a3", -1, l1, 1, 0, 0, mhalf},
              {"b", -1, l2, 0, 0, 0, mi},
              {"c", -2, l1, 0, 0, 0, mi}};
    }
    for (auto& c : cs)
        if (!c.constraint_ok(n)) throw std::logic_error("enumerate_cases: order bookkeeping broken");
    return cs;
}

/// The cached symbol providers for one dimension: the wrapped left factor
/// f D^{-1} and the right factor (f^{-1} (D*)^{-1} for n = 4, the conformal
/// triple inverse for n = 6).
struct SymbolTable {
    int n = 0;
    BoundaryGeometry geo;
    GradedSymbol left;   // orders -1, -2
    GradedSymbol right;  // orders -1,-2 (n=4) or -3,-4 (n=6)
};

inline SymbolTable build_symbol_table(int n) {
    SymbolTable t;
    t.n = n;
    t.geo = derive_geometry(n);
    t.left = conformal_wrap(provider_first_order_inverse(t.geo, NovikovVariant::N), false);
    if (n == 4) {
        t.right = conformal_wrap(provider_first_order_inverse(t.geo, NovikovVariant::NStar), true);
    } else {
        t.right = provider_triple_inverse(t.geo);
    }
    return t;
}

/// The exact pre-integration trace of one case (one alpha index when
/// spec.alpha = 1): a scalar rational function of xi_n.
inline BoundarySymbol case_trace(const SymbolTable& tab, const CaseSpec& spec, int alpha_index) {
    BoundarySymbol left = tab.left.at(spec.r);
    BoundarySymbol right = tab.right.at(spec.l);
    if (spec.alpha == 1) {
        left = left.derive_xi(alpha_index);
        right = right.derive_x(alpha_index);
    }
    for (int t = 0; t < spec.j; ++t) left = left.derive_x(tab.n);
    for (int t = 0; t < spec.k; ++t) right = right.derive_x(tab.n);
    BoundarySymbol pleft = pi_plus(left.sphere_eval());
    for (int t = 0; t < spec.k; ++t) pleft = pleft.derive_xin();
    for (int t = 0; t < spec.j + 1; ++t) right = right.derive_xin();
    BoundarySymbol pright = right.sphere_eval();
    return (pleft * pright).traced().normalized(true);
}

/// prefactor x int_{|xi'|=1} int_R trace, as an exact density.
inline BoundaryDensity compute_case(const SymbolTable& tab, const CaseSpec& spec) {
    ScalarPoly total;
    int amax = spec.alpha == 1 ? tab.n - 1 : 1;
    for (int a = 1; a <= amax; ++a) {
        BoundarySymbol tr = case_trace(tab, spec, a);
        // sphere moments on each xi_n coefficient, then the xi_n contour
        BoundarySymbol reduced(tr.ring_n, 0);
        for (auto& [k, p] : tr.terms) {
            CliffPoly q;
            q.reserve(p.size());
            for (auto& c : p) {
                Jet e = c.trace();  // 1x1 payload
                CliffordElement s(0);
                s.set(0, 0, Jet(sphere_integrate(e.value, tab.n)));
                q.push_back(std::move(s));
            }
            cp::trim(q);
            if (!q.empty()) reduced.terms[k] = std::move(q);
        }
        total += integrate_xi_n(reduced);
    }
    return finalize_density(total * spec.prefactor, tab.n);
}

struct CaseResult {
    CaseSpec spec;
    BoundaryDensity density;
    double wall_ms = 0.0;
};

/// NRES_THREADS caps the case fan-out (0 or unset: hardware concurrency).
inline unsigned worker_cap() {
    if (const char* s = std::getenv("NRES_THREADS")) {
        long v = std::atol(s);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Evaluate all cases, optionally fanning out one task per case. Exact
/// arithmetic makes the parallel reduction bit-identical to sequential.
inline std::vector<CaseResult> compute_all_cases(const SymbolTable& tab, bool parallel) {
    std::vector<CaseSpec> specs = enumerate_cases(tab.n);
    std::vector<CaseResult> out(specs.size());
    auto run_one = [&](size_t idx) {
        auto t0 = std::chrono::steady_clock::now();
        BoundaryDensity d = compute_case(tab, specs[idx]);
        auto t1 = std::chrono::steady_clock::now();
        out[idx] = {specs[idx], d, std::chrono::duration<double, std::milli>(t1 - t0).count()};
    };
    if (!parallel || worker_cap() <= 1) {
        for (size_t i = 0; i < specs.size(); ++i) run_one(i);
        return out;
    }
    std::vector<std::future<void>> futs;
    futs.reserve(specs.size());
    for (size_t i = 0; i < specs.size(); ++i)
        futs.push_back(std::async(std::launch::async, run_one, i));
    for (auto& f : futs) f.get();
    return out;
}

/// Phi (n = 4) / Psi (n = 6): the sum over all cases.
inline BoundaryDensity assemble_boundary_term(const std::vector<CaseResult>& results) {
    BoundaryDensity d;
    for (auto& r : results) d = d + r.density;
    return d;
}

}  // namespace nres
