#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nres/rational.hpp"

namespace nres {

/// The formal symbols of the scalar ring. Xi carries a tangential index 1..n-1;
/// Djf/Djfinv likewise; Thp/Th run over the full frame 1..n.
enum class Sym : std::uint8_t {
    Xi,      // tangential cotangent coordinate xi_i
    Sq,      // |xi'|^2 on the boundary (set to 1 on the unit sphere)
    H1,      // h'(0)
    Pi,      // pi (kept formal)
    Omega,   // canonical sphere volume (Omega_3 for n=4, Omega_4 for n=6)
    FF,      // conformal factor f at x0
    Finv,    // f^{-1} at x0
    Dnf,     // d_{x_n} f
    Dnfinv,  // d_{x_n} f^{-1}
    Djf,     // d_{x_j} f, j < n
    Djfinv,  // d_{x_j} f^{-1}, j < n
    Gthpn,   // g(theta', dx_n)
    Thp,     // theta'_k frame component
    Th,      // theta_k frame component
};

struct VarId {
    Sym kind;
    std::uint8_t idx;  // 0 unless the symbol family is indexed

    bool operator<(const VarId& o) const {
        if (kind != o.kind) return kind < o.kind;
        return idx < o.idx;
    }
    bool operator==(const VarId& o) const { return kind == o.kind && idx == o.idx; }
};

inline VarId xi(int i) { return {Sym::Xi, static_cast<std::uint8_t>(i)}; }
inline VarId var(Sym s, int i = 0) { return {s, static_cast<std::uint8_t>(i)}; }

inline std::string var_name(VarId v) {
    switch (v.kind) {
        case Sym::Xi: return "xi" + std::to_string(v.idx);
        case Sym::Sq: return "SQ";
        case Sym::H1: return "H1";
        case Sym::Pi: return "PI";
        case Sym::Omega: return "OMEGA";
        case Sym::FF: return "F";
        case Sym::Finv: return "FINV";
        case Sym::Dnf: return "DNF";
        case Sym::Dnfinv: return "DNFINV";
        case Sym::Djf: return "DJF" + std::to_string(v.idx);
        case Sym::Djfinv: return "DJFINV" + std::to_string(v.idx);
        case Sym::Gthpn: return "GTHPN";
        case Sym::Thp: return "THP" + std::to_string(v.idx);
        case Sym::Th: return "TH" + std::to_string(v.idx);
    }
    return "?";
}

/// Sorted exponent vector. Kept tiny: degrees here never exceed single digits.
struct Monomial {
    std::vector<std::pair<VarId, std::uint8_t>> e;

    bool operator<(const Monomial& o) const { return e < o.e; }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool empty() const { return e.empty(); }

    int deg(VarId v) const {
        for (auto& [w, k] : e)
            if (w == v) return k;
        return 0;
    }

    Monomial times(VarId v, int k = 1) const {
        Monomial m = *this;
        for (auto& p : m.e)
            if (p.first == v) {
                p.second = static_cast<std::uint8_t>(p.second + k);
                return m;
            }
        m.e.emplace_back(v, static_cast<std::uint8_t>(k));
        std::sort(m.e.begin(), m.e.end());
        return m;
    }

    Monomial without(VarId v) const {
        Monomial m;
        for (auto& p : e)
            if (!(p.first == v)) m.e.push_back(p);
        return m;
    }

    Monomial merged(const Monomial& o) const {
        Monomial m;
        auto a = e.begin(), b = o.e.begin();
        while (a != e.end() || b != o.e.end()) {
            if (b == o.e.end() || (a != e.end() && a->first < b->first))
                m.e.push_back(*a++);
            else if (a == e.end() || b->first < a->first)
                m.e.push_back(*b++);
            else {
                m.e.emplace_back(a->first, static_cast<std::uint8_t>(a->second + b->second));
                ++a;
                ++b;
            }
        }
        return m;
    }
};

/// Sparse multivariate polynomial over GaussianRational.
class ScalarPoly {
  public:
    std::map<Monomial, GaussianRational> terms;

    ScalarPoly() = default;
    explicit ScalarPoly(GaussianRational c) {
        if (!c.is_zero()) terms[Monomial{}] = std::move(c);
    }
    explicit ScalarPoly(long c) : ScalarPoly(GaussianRational(c)) {}

    static ScalarPoly variable(VarId v, GaussianRational c = GaussianRational(1)) {
        ScalarPoly p;
        if (!c.is_zero()) p.terms[Monomial{}.times(v)] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
    }
    GaussianRational constant_part() const {
        auto it = terms.find(Monomial{});
        return it == terms.end() ? GaussianRational() : it->second;
    }

    void add_term(const Monomial& m, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    ScalarPoly operator-() const {
        ScalarPoly r;
        for (auto& [m, c] : terms) r.terms[m] = -c;
        return r;
    }
    ScalarPoly operator+(const ScalarPoly& o) const {
        ScalarPoly r = *this;
        for (auto& [m, c] : o.terms) r.add_term(m, c);
        return r;
    }
    ScalarPoly operator-(const ScalarPoly& o) const {
        ScalarPoly r = *this;
        for (auto& [m, c] : o.terms) r.add_term(m, -c);
        return r;
    }
    ScalarPoly operator*(const ScalarPoly& o) const {
        ScalarPoly r;
        for (auto& [m1, c1] : terms)
            for (auto& [m2, c2] : o.terms) r.add_term(m1.merged(m2), c1 * c2);
        return r;
    }
    ScalarPoly operator*(const GaussianRational& c) const {
        ScalarPoly r;
        if (c.is_zero()) return r;
        for (auto& [m, v] : terms) r.terms[m] = v * c;
        return r;
    }
    ScalarPoly& operator+=(const ScalarPoly& o) {
        for (auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    ScalarPoly& operator-=(const ScalarPoly& o) {
        for (auto& [m, c] : o.terms) add_term(m, -c);
        return *this;
    }

    bool operator==(const ScalarPoly& o) const { return terms == o.terms; }
    bool operator!=(const ScalarPoly& o) const { return !(*this == o); }

    ScalarPoly pow(int k) const {
        ScalarPoly r(1);
        for (int t = 0; t < k; ++t) r = r * (*this);
        return r;
    }

    /// Substitute v -> p (eliminating every power of v).
    ScalarPoly subst(VarId v, const ScalarPoly& p) const {
        ScalarPoly r;
        for (auto& [m, c] : terms) {
            int k = m.deg(v);
            if (k == 0) {
                r.add_term(m, c);
                continue;
            }
            ScalarPoly rest;
            rest.terms[m.without(v)] = c;
            r += rest * p.pow(k);
        }
        return r;
    }

    /// d/dv with the chain rule d(SQ)/d(xi_i) = 2 xi_i applied where v is a Xi.
    ScalarPoly derive(VarId v) const {
        ScalarPoly r;
        for (auto& [m, c] : terms) {
            int k = m.deg(v);
            if (k > 0) {
                Monomial m2 = m.without(v);
                if (k > 1) m2 = m2.times(v, k - 1);
                r.add_term(m2, c * GaussianRational(k));
            }
            if (v.kind == Sym::Xi) {
                int ks = m.deg(var(Sym::Sq));
                if (ks > 0) {
                    Monomial m2 = m.without(var(Sym::Sq)).times(v);
                    if (ks > 1) m2 = m2.times(var(Sym::Sq), ks - 1);
                    r.add_term(m2, c * GaussianRational(2 * ks));
                }
            }
        }
        return r;
    }

    int max_deg(VarId v) const {
        int d = 0;
        for (auto& [m, c] : terms) d = std::max(d, m.deg(v));
        return d;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : terms) {
            std::string cs = to_string(c);
            if (!first) os << " + ";
            first = false;
            if (m.empty()) {
                os << "(" << cs << ")";
                continue;
            }
            os << "(" << cs << ")";
            for (auto& [v, k] : m.e) {
                os << "*" << var_name(v);
                if (k > 1) os << "^" << int(k);
            }
        }
        return os.str();
    }
};

inline ScalarPoly operator*(const GaussianRational& c, const ScalarPoly& p) { return p * c; }

/// Relation normalization of the scalar ring:
///  - every F*FINV pair inside a monomial cancels (f f^{-1} = 1),
///  - xi_1^2 is eliminated through xi_1^2 = SQ - xi_2^2 - ... - xi_{n-1}^2,
///    the canonical form of the quotient by (sum xi_i^2 - SQ),
///  - in sphere mode every SQ becomes 1.
inline ScalarPoly apply_relations(const ScalarPoly& p, int n, bool sphere = false) {
    ScalarPoly r;
    for (auto& [m, c] : p.terms) {
        int kf = m.deg(var(Sym::FF));
        int kg = m.deg(var(Sym::Finv));
        int k = std::min(kf, kg);
        Monomial m2 = m;
        if (k > 0) {
            m2 = m2.without(var(Sym::FF)).without(var(Sym::Finv));
            if (kf - k > 0) m2 = m2.times(var(Sym::FF), kf - k);
            if (kg - k > 0) m2 = m2.times(var(Sym::Finv), kg - k);
        }
        r.add_term(m2, c);
    }
    if (r.max_deg(xi(1)) >= 2) {
        ScalarPoly sub = ScalarPoly::variable(var(Sym::Sq));
        for (int i = 2; i < n; ++i) sub -= ScalarPoly::variable(xi(i)) * ScalarPoly::variable(xi(i));
        ScalarPoly out;
        for (auto& [m, c] : r.terms) {
            int k = m.deg(xi(1));
            if (k < 2) {
                out.add_term(m, c);
                continue;
            }
            Monomial m2 = m.without(xi(1));
            if (k % 2) m2 = m2.times(xi(1));
            ScalarPoly rest;
            rest.terms[m2] = c;
            out += rest * sub.pow(k / 2);
        }
        r = std::move(out);
    }
    if (sphere) r = r.subst(var(Sym::Sq), ScalarPoly(1));
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const ScalarPoly& p) { return os << p.str(); }

}  // namespace nres
