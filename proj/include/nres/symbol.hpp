#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "nres/clifford.hpp"

namespace nres {

/// Denominator exponents: (xi_n - i)^a (xi_n + i)^b |xi|^{2m}.
/// Before sphere evaluation only |xi|^2 powers occur (a = b = 0); afterwards
/// SQ = 1 turns each |xi|^2 into (xi_n - i)(xi_n + i) and m folds into a, b.
struct DenKey {
    int a = 0, b = 0, m = 0;
    bool operator<(const DenKey& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return m < o.m;
    }
    bool operator==(const DenKey& o) const { return a == o.a && b == o.b && m == o.m; }
};

/// Polynomial in xi_n with CliffordElement coefficients (index = power).
using CliffPoly = std::vector<CliffordElement>;

namespace cp {

inline void trim(CliffPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline CliffPoly add(const CliffPoly& x, const CliffPoly& y) {
    CliffPoly r = x;
    if (r.size() < y.size()) r.resize(y.size(), CliffordElement(y.empty() ? 0 : y[0].n));
    for (size_t k = 0; k < y.size(); ++k) r[k] += y[k];
    trim(r);
    return r;
}

inline CliffPoly mul(const CliffPoly& x, const CliffPoly& y) {
    if (x.empty() || y.empty()) return {};
    CliffPoly r(x.size() + y.size() - 1, CliffordElement(x[0].n));
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero()) continue;
            r[i + j] += x[i] * y[j];
        }
    }
    trim(r);
    return r;
}

template <class S>
inline CliffPoly scaled(const CliffPoly& x, const S& s) {
    CliffPoly r;
    r.reserve(x.size());
    for (auto& c : x) r.push_back(c.scaled(s));
    trim(r);
    return r;
}

inline CliffPoly shift_up(const CliffPoly& x) {  // multiply by xi_n
    if (x.empty()) return {};
    CliffPoly r;
    r.reserve(x.size() + 1);
    r.emplace_back(x[0].n);
    for (auto& c : x) r.push_back(c);
    return r;
}

inline CliffPoly d_xin(const CliffPoly& x) {
    if (x.size() <= 1) return {};
    CliffPoly r;
    r.reserve(x.size() - 1);
    for (size_t k = 1; k < x.size(); ++k) r.push_back(x[k].scaled(GaussianRational(long(k))));
    trim(r);
    return r;
}

/// Evaluate at xi_n = z (Gaussian rational), Horner.
inline CliffordElement eval(const CliffPoly& x, const GaussianRational& z, int n) {
    CliffordElement acc(n);
    for (size_t k = x.size(); k-- > 0;) {
        acc = acc.scaled(Jet(z));
        acc += x[k];
    }
    return acc;
}

}  // namespace cp

/// A finite sum of terms  N(xi_n) / ((xi_n-i)^a (xi_n+i)^b |xi|^{2m})  with
/// CliffordElement-over-Jet numerator coefficients. The unit of the boundary
/// symbol calculus at x0.
class BoundarySymbol {
  public:
    int ring_n = 0;   // dimension of the scalar ring (tangential indices 1..ring_n-1)
    int mat_n = 0;    // log2 of the matrix size (0 for scalar-valued symbols)
    bool jet_ok = true;  // false once an x_n-derivative consumed the slope data
    std::map<DenKey, CliffPoly> terms;

    BoundarySymbol() = default;
    BoundarySymbol(int ring, int mat) : ring_n(ring), mat_n(mat) {}

    static BoundarySymbol of(int ring, CliffPoly num, DenKey k) {
        BoundarySymbol s(ring, num.empty() ? 0 : num[0].n);
        cp::trim(num);
        if (!num.empty()) s.terms[k] = std::move(num);
        return s;
    }

    bool structurally_zero() const { return terms.empty(); }

    BoundarySymbol operator+(const BoundarySymbol& o) const {
        BoundarySymbol r = *this;
        r.jet_ok = jet_ok && o.jet_ok;
        for (auto& [k, p] : o.terms) {
            auto it = r.terms.find(k);
            if (it == r.terms.end())
                r.terms[k] = p;
            else {
                it->second = cp::add(it->second, p);
                if (it->second.empty()) r.terms.erase(it);
            }
        }
        return r;
    }
    BoundarySymbol operator-() const {
        BoundarySymbol r = *this;
        for (auto& [k, p] : r.terms) p = cp::scaled(p, GaussianRational(-1));
        return r;
    }
    BoundarySymbol operator-(const BoundarySymbol& o) const { return *this + (-o); }

    BoundarySymbol operator*(const BoundarySymbol& o) const {
        BoundarySymbol r(ring_n, std::max(mat_n, o.mat_n));
        r.jet_ok = jet_ok && o.jet_ok;
        for (auto& [k1, p1] : terms)
            for (auto& [k2, p2] : o.terms) {
                DenKey k{k1.a + k2.a, k1.b + k2.b, k1.m + k2.m};
                CliffPoly prod = cp::mul(p1, p2);
                auto it = r.terms.find(k);
                if (it == r.terms.end())
                    r.terms[k] = std::move(prod);
                else {
                    it->second = cp::add(it->second, prod);
                    if (it->second.empty()) r.terms.erase(it);
                }
            }
        return r;
    }

    template <class S>
    BoundarySymbol scaled(const S& s) const {
        BoundarySymbol r = *this;
        for (auto& [k, p] : r.terms) p = cp::scaled(p, s);
        return r;
    }

    /// Normalize every numerator entry through the ring relations.
    BoundarySymbol normalized(bool sphere = false) const {
        BoundarySymbol r(ring_n, mat_n);
        r.jet_ok = jet_ok;
        int n = ring_n;
        for (auto& [k, p] : terms) {
            CliffPoly q;
            q.reserve(p.size());
            for (auto& c : p)
                q.push_back(c.map_entries([&](const Jet& j) { return apply_relations(j, n, sphere); }));
            cp::trim(q);
            if (!q.empty()) r.terms[k] = std::move(q);
        }
        return r;
    }

    /// The jet of |xi|^2 = SQ + xi_n^2 + h'(0) SQ x_n as a numerator polynomial.
    CliffPoly xisq_poly() const {
        ScalarPoly sq = ScalarPoly::variable(var(Sym::Sq));
        ScalarPoly h1 = ScalarPoly::variable(var(Sym::H1));
        CliffPoly q(3, CliffordElement(mat_n));
        q[0] = CliffordElement::identity(mat_n, Jet(sq, h1 * sq));
        q[2] = CliffordElement::identity(mat_n, Jet(1));
        return q;
    }

    /// d/dxi_n (quotient rule over all three denominator factors).
    BoundarySymbol derive_xin() const {
        BoundarySymbol r(ring_n, mat_n);
        r.jet_ok = jet_ok;
        auto acc = [&](DenKey k, CliffPoly p) {
            cp::trim(p);
            if (p.empty()) return;
            auto it = r.terms.find(k);
            if (it == r.terms.end())
                r.terms[k] = std::move(p);
            else {
                it->second = cp::add(it->second, p);
                if (it->second.empty()) r.terms.erase(it);
            }
        };
        for (auto& [k, p] : terms) {
            acc(k, cp::d_xin(p));
            if (k.a) acc({k.a + 1, k.b, k.m}, cp::scaled(p, GaussianRational(-k.a)));
            if (k.b) acc({k.a, k.b + 1, k.m}, cp::scaled(p, GaussianRational(-k.b)));
            if (k.m) acc({k.a, k.b, k.m + 1}, cp::shift_up(cp::scaled(p, GaussianRational(-2 * k.m))));
        }
        return r;
    }

    /// d/dxi_t for a tangential index t (1..ring_n-1).
    BoundarySymbol derive_xi(int t) const {
        BoundarySymbol r(ring_n, mat_n);
        r.jet_ok = jet_ok;
        VarId v = xi(t);
        ScalarPoly xit = ScalarPoly::variable(v);
        ScalarPoly h1 = ScalarPoly::variable(var(Sym::H1));
        Jet dq(xit * GaussianRational(2), xit * h1 * GaussianRational(2));  // d|xi|^2/dxi_t
        for (auto& [k, p] : terms) {
            CliffPoly dp;
            dp.reserve(p.size());
            for (auto& c : p) dp.push_back(c.derive(v));
            cp::trim(dp);
            if (!dp.empty()) {
                auto it = r.terms.find(k);
                if (it == r.terms.end())
                    r.terms[k] = std::move(dp);
                else
                    it->second = cp::add(it->second, dp);
            }
            if (k.m) {
                CliffPoly t2 = cp::scaled(cp::scaled(p, dq), GaussianRational(-k.m));
                DenKey k2{k.a, k.b, k.m + 1};
                auto it = r.terms.find(k2);
                if (it == r.terms.end())
                    r.terms[k2] = std::move(t2);
                else
                    it->second = cp::add(it->second, t2);
            }
        }
        for (auto it = r.terms.begin(); it != r.terms.end();) {
            cp::trim(it->second);
            it = it->second.empty() ? r.terms.erase(it) : std::next(it);
        }
        return r;
    }

    /// d/dx_n on the metric jets (f-symbols are handled by derive_x_tangent /
    /// the providers' Leibniz bookkeeping). Output carries value data only.
    BoundarySymbol derive_xn_metric() const {
        if (!jet_ok) throw std::logic_error("derive_xn_metric: slope data already consumed");
        BoundarySymbol r(ring_n, mat_n);
        r.jet_ok = false;
        ScalarPoly h1sq = ScalarPoly::variable(var(Sym::H1)) * ScalarPoly::variable(var(Sym::Sq));
        for (auto& [k, p] : terms) {
            CliffPoly dp;
            dp.reserve(p.size());
            for (auto& c : p) dp.push_back(c.dxn());
            cp::trim(dp);
            if (!dp.empty()) {
                auto it = r.terms.find(k);
                if (it == r.terms.end())
                    r.terms[k] = std::move(dp);
                else
                    it->second = cp::add(it->second, dp);
            }
            if (k.m) {
                CliffPoly t2;
                t2.reserve(p.size());
                for (auto& c : p) t2.push_back(c.value_part().scaled(-(h1sq * GaussianRational(k.m))));
                cp::trim(t2);
                if (!t2.empty()) {
                    DenKey k2{k.a, k.b, k.m + 1};
                    auto it = r.terms.find(k2);
                    if (it == r.terms.end())
                        r.terms[k2] = std::move(t2);
                    else
                        it->second = cp::add(it->second, t2);
                }
            }
        }
        for (auto it = r.terms.begin(); it != r.terms.end();) {
            cp::trim(it->second);
            it = it->second.empty() ? r.terms.erase(it) : std::next(it);
        }
        return r;
    }

    /// Multiply every monomial's f-symbols by their x_j-derivative replacement:
    /// F -> DJF_j (DNF at j = n), FINV -> DJFINV_j (DNFINV). Metric data is
    /// x'-flat at x0, so for j < n this IS d/dx_j.
    BoundarySymbol derive_f_symbols(int j) const {
        VarId vF = var(Sym::FF), vG = var(Sym::Finv);
        VarId dF = j == ring_n ? var(Sym::Dnf) : var(Sym::Djf, j);
        VarId dG = j == ring_n ? var(Sym::Dnfinv) : var(Sym::Djfinv, j);
        auto d_poly = [&](const ScalarPoly& p) {
            ScalarPoly out;
            for (auto& [mo, c] : p.terms) {
                int kf = mo.deg(vF);
                if (kf) {
                    Monomial m2 = mo.without(vF).times(dF);
                    if (kf > 1) m2 = m2.times(vF, kf - 1);
                    out.add_term(m2, c * GaussianRational(kf));
                }
                int kg = mo.deg(vG);
                if (kg) {
                    Monomial m2 = mo.without(vG).times(dG);
                    if (kg > 1) m2 = m2.times(vG, kg - 1);
                    out.add_term(m2, c * GaussianRational(kg));
                }
            }
            return out;
        };
        BoundarySymbol r(ring_n, mat_n);
        r.jet_ok = jet_ok;
        for (auto& [k, p] : terms) {
            CliffPoly dp;
            dp.reserve(p.size());
            for (auto& c : p)
                dp.push_back(c.map_entries([&](const Jet& jj) { return Jet(d_poly(jj.value), d_poly(jj.slope)); }));
            cp::trim(dp);
            if (!dp.empty()) r.terms[k] = std::move(dp);
        }
        return r;
    }

    /// Full d/dx_j: metric part (j = n only) plus f-symbol part.
    BoundarySymbol derive_x(int j) const {
        BoundarySymbol f_part = derive_f_symbols(j);
        if (j != ring_n) return f_part;
        return derive_xn_metric() + f_part;
    }

    /// |xi'| = 1: SQ -> 1 everywhere, slopes dropped, |xi|^2 factors become
    /// (xi_n - i)(xi_n + i).
    BoundarySymbol sphere_eval() const {
        BoundarySymbol r(ring_n, mat_n);
        r.jet_ok = false;
        int n = ring_n;
        for (auto& [k, p] : terms) {
            CliffPoly q;
            q.reserve(p.size());
            for (auto& c : p)
                q.push_back(c.map_entries(
                    [&](const Jet& j) { return Jet(apply_relations(j.value, n, true)); }));
            cp::trim(q);
            if (q.empty()) continue;
            DenKey k2{k.a + k.m, k.b + k.m, 0};
            auto it = r.terms.find(k2);
            if (it == r.terms.end())
                r.terms[k2] = std::move(q);
            else
                it->second = cp::add(it->second, q);
        }
        for (auto it = r.terms.begin(); it != r.terms.end();) {
            cp::trim(it->second);
            it = it->second.empty() ? r.terms.erase(it) : std::next(it);
        }
        return r;
    }

    /// Keep only jet values (x_n = 0).
    BoundarySymbol value_part() const {
        BoundarySymbol r(ring_n, mat_n);
        r.jet_ok = false;
        for (auto& [k, p] : terms) {
            CliffPoly q;
            q.reserve(p.size());
            for (auto& c : p) q.push_back(c.value_part());
            cp::trim(q);
            if (!q.empty()) r.terms[k] = std::move(q);
        }
        return r;
    }

    /// Trace into a scalar-valued (1x1) symbol over the same ring.
    BoundarySymbol traced() const {
        BoundarySymbol r(ring_n, 0);
        r.jet_ok = jet_ok;
        for (auto& [k, p] : terms) {
            CliffPoly q;
            q.reserve(p.size());
            for (auto& c : p) {
                CliffordElement s(0);
                s.set(0, 0, c.trace());
                q.push_back(std::move(s));
            }
            cp::trim(q);
            if (!q.empty()) r.terms[k] = std::move(q);
        }
        return r;
    }
};

namespace detail {

/// Series of (u + 2i)^{-b} up to u^{len-1}: coefficient k is
/// (2i)^{-b} * (-1)^k * C(b+k-1, k) * (2i)^{-k}.
inline std::vector<GaussianRational> inv_pole_series(int b, int len) {
    std::vector<GaussianRational> out(len);
    GaussianRational two_i = GaussianRational(Rat(0)) + GaussianRational(Rat(2)) * GaussianRational::i();
    GaussianRational inv2i = gq_inverse(two_i);
    GaussianRational base(1);
    for (int t = 0; t < b; ++t) base *= inv2i;
    Rat binom(1);
    for (int k = 0; k < len; ++k) {
        GaussianRational c = base * GaussianRational(binom);
        if (k % 2) c = -c;
        out[k] = c;
        base *= inv2i;
        binom = binom * Rat(b + k) / Rat(k + 1);
    }
    // base kept multiplying: fold the (2i)^{-k} into the loop instead
    // (done above: base accumulates inv2i each round).
    return out;
}

/// Taylor shift: N(i + u) coefficients from N(xi_n).
inline CliffPoly taylor_shift_i(const CliffPoly& p, int mat_n) {
    size_t len = p.size();
    CliffPoly out(len, CliffordElement(mat_n));
    // out[k] = sum_{j>=k} C(j,k) i^{j-k} p[j]
    for (size_t j = 0; j < len; ++j) {
        if (p[j].is_zero()) continue;
        Rat binom(1);
        GaussianRational ipow(1);
        for (size_t k = j + 1; k-- > 0;) {
            // iterate k = j down to 0; C(j,k) built incrementally
            out[k] += p[j].scaled(GaussianRational(binom) * ipow);
            if (k == 0) break;
            binom = binom * Rat(long(k)) / Rat(long(j - k + 1));
            ipow = ipow * GaussianRational::i();
        }
    }
    cp::trim(out);
    return out;
}

}  // namespace detail

/// Projection onto the part with poles only at xi_n = +i (principal parts at +i).
/// Requires sphere-evaluated input and decaying terms.
inline BoundarySymbol pi_plus(const BoundarySymbol& s) {
    BoundarySymbol r(s.ring_n, s.mat_n);
    r.jet_ok = false;
    for (auto& [k, p] : s.terms) {
        if (k.m != 0) throw std::domain_error("pi_plus: sphere evaluation required first");
        if (static_cast<int>(p.size()) > k.a + k.b)
            throw std::domain_error("pi_plus: non-decaying term");
        if (k.a == 0) continue;  // poles only at -i project to zero
        CliffPoly shifted = detail::taylor_shift_i(p, s.mat_n);
        shifted.resize(k.a, CliffordElement(s.mat_n));
        std::vector<GaussianRational> ser = detail::inv_pole_series(k.b, k.a);
        for (int kk = 0; kk < k.a; ++kk) {
            CliffordElement c(s.mat_n);
            for (int j2 = 0; j2 <= kk; ++j2) {
                if (static_cast<size_t>(j2) >= shifted.size()) break;
                c += shifted[j2].scaled(ser[kk - j2]);
            }
            c = c.normalized(true);
            if (c.is_zero()) continue;
            DenKey key{k.a - kk, 0, 0};
            CliffPoly one{c};
            auto it = r.terms.find(key);
            if (it == r.terms.end())
                r.terms[key] = std::move(one);
            else
                it->second = cp::add(it->second, one);
        }
    }
    return r;
}

/// The complement pi^- = id - pi^+.
inline BoundarySymbol pi_minus(const BoundarySymbol& s) { return s - pi_plus(s); }

/// Exact equality test: cross-multiply to the maximal denominator and compare
/// relation-normalized numerators.
inline bool symbols_equal(const BoundarySymbol& x, const BoundarySymbol& y) {
    BoundarySymbol d = x - y;
    if (d.terms.empty()) return true;
    int A = 0, B = 0, M = 0;
    for (auto& [k, p] : d.terms) {
        A = std::max(A, k.a);
        B = std::max(B, k.b);
        M = std::max(M, k.m);
    }
    int mat = d.mat_n;
    CliffPoly tot;
    CliffPoly xisq = d.xisq_poly();
    for (auto& [k, p] : d.terms) {
        CliffPoly q = p;
        for (int t = 0; t < A - k.a; ++t) {
            // multiply by (xi_n - i)
            CliffPoly up = cp::shift_up(q);
            q = cp::add(up, cp::scaled(q, -GaussianRational::i()));
        }
        for (int t = 0; t < B - k.b; ++t) {
            CliffPoly up = cp::shift_up(q);
            q = cp::add(up, cp::scaled(q, GaussianRational::i()));
        }
        for (int t = 0; t < M - k.m; ++t) q = cp::mul(q, xisq);
        tot = cp::add(tot, q);
    }
    for (auto& c : tot)
        if (!c.normalized().is_zero()) return false;
    return true;
}

}  // namespace nres
