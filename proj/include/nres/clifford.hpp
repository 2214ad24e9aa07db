#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "nres/jet.hpp"

namespace nres {

/// Sparse 2^n x 2^n matrix with Jet entries, indexed by subsets of {1..n}
/// (the exterior-algebra basis). Generator matrices are signed subset toggles,
/// so words of generators stay one-entry-per-row.
class CliffordElement {
  public:
    int n = 0;
    std::map<int, std::map<int, Jet>> rows;

    CliffordElement() = default;
    explicit CliffordElement(int n_) : n(n_) {}

    static CliffordElement identity(int n, Jet s = Jet(1)) {
        CliffordElement m(n);
        for (int r = 0; r < (1 << n); ++r) m.rows[r][r] = s;
        return m;
    }

    int dim() const { return 1 << n; }
    bool is_zero() const {
        for (auto& [r, row] : rows)
            for (auto& [c, v] : row)
                if (!v.is_zero()) return false;
        return true;
    }

    void set(int r, int c, Jet v) {
        if (!v.is_zero()) rows[r][c] = std::move(v);
    }

    void add_entry(int r, int c, const Jet& v) {
        if (v.is_zero()) return;
        auto& cell = rows[r][c];
        cell += v;
        if (cell.is_zero()) {
            rows[r].erase(c);
            if (rows[r].empty()) rows.erase(r);
        }
    }

    CliffordElement operator+(const CliffordElement& o) const {
        CliffordElement m = *this;
        for (auto& [r, row] : o.rows)
            for (auto& [c, v] : row) m.add_entry(r, c, v);
        return m;
    }
    CliffordElement operator-(const CliffordElement& o) const {
        CliffordElement m = *this;
        for (auto& [r, row] : o.rows)
            for (auto& [c, v] : row) m.add_entry(r, c, -v);
        return m;
    }
    CliffordElement operator-() const {
        CliffordElement m(n);
        for (auto& [r, row] : rows)
            for (auto& [c, v] : row) m.rows[r][c] = -v;
        return m;
    }
    CliffordElement& operator+=(const CliffordElement& o) {
        for (auto& [r, row] : o.rows)
            for (auto& [c, v] : row) add_entry(r, c, v);
        return *this;
    }

    template <class S>
    CliffordElement scaled(const S& s) const {
        CliffordElement m(n);
        for (auto& [r, row] : rows)
            for (auto& [c, v] : row) m.set(r, c, v * s);
        return m;
    }

    CliffordElement operator*(const CliffordElement& o) const {
        CliffordElement m(n);
        for (auto& [r, row] : rows) {
            std::map<int, Jet> acc;
            for (auto& [k, v] : row) {
                auto it = o.rows.find(k);
                if (it == o.rows.end()) continue;
                for (auto& [c2, w] : it->second) {
                    auto [slot, fresh] = acc.emplace(c2, Jet());
                    slot->second += v * w;
                }
            }
            for (auto& [c2, v] : acc)
                if (!v.is_zero()) m.rows[r][c2] = v;
        }
        return m;
    }

    bool operator==(const CliffordElement& o) const { return (*this - o).is_zero(); }
    bool operator!=(const CliffordElement& o) const { return !(*this == o); }

    Jet trace() const {
        Jet t;
        for (auto& [r, row] : rows) {
            auto it = row.find(r);
            if (it != row.end()) t += it->second;
        }
        return t;
    }

    template <class F>
    CliffordElement map_entries(F&& f) const {
        CliffordElement m(n);
        for (auto& [r, row] : rows)
            for (auto& [c, v] : row) m.set(r, c, f(v));
        return m;
    }

    /// Entrywise d/dx_n (jet shift).
    CliffordElement dxn() const {
        return map_entries([](const Jet& j) { return j.dxn(); });
    }
    /// Entrywise polynomial derivative.
    CliffordElement derive(VarId v) const {
        return map_entries([&](const Jet& j) { return Jet(j.value.derive(v), j.slope.derive(v)); });
    }
    CliffordElement value_part() const {
        return map_entries([](const Jet& j) { return Jet(j.value); });
    }
    CliffordElement normalized(bool sphere = false) const {
        int nn = n;
        return map_entries([nn, sphere](const Jet& j) { return apply_relations(j, nn, sphere); });
    }
};

/// The two anticommuting Clifford actions c(e_j) = eps - iota, cbar(e_j) = eps + iota
/// on the exterior algebra, for the fixed orthonormal frame at x0.
struct GeneratorSet {
    int n = 0;
    std::vector<CliffordElement> c;     // 1-based
    std::vector<CliffordElement> cbar;  // 1-based
};

namespace detail {
inline int toggle_sign(int subset, int j) {
    int below = subset & ((1 << (j - 1)) - 1);
    return (__builtin_popcount(below) & 1) ? -1 : 1;
}
}  // namespace detail

inline GeneratorSet build_generators(int n) {
    if (n < 1) throw std::invalid_argument("build_generators: dimension must be positive");
    GeneratorSet g;
    g.n = n;
    g.c.resize(n + 1, CliffordElement(n));
    g.cbar.resize(n + 1, CliffordElement(n));
    for (int j = 1; j <= n; ++j) {
        CliffordElement cj(n), cbj(n);
        int bit = 1 << (j - 1);
        for (int S = 0; S < (1 << n); ++S) {
            int sgn = detail::toggle_sign(S, j);
            if (S & bit) {
                cj.rows[S ^ bit][S] = Jet(GaussianRational(-sgn));
                cbj.rows[S ^ bit][S] = Jet(GaussianRational(sgn));
            } else {
                cj.rows[S ^ bit][S] = Jet(GaussianRational(sgn));
                cbj.rows[S ^ bit][S] = Jet(GaussianRational(sgn));
            }
        }
        g.c[j] = std::move(cj);
        g.cbar[j] = std::move(cbj);
    }
    return g;
}

/// c(xi') with its normal jet: sum_i xi_i (1 + h'(0)/2 x_n) c(e_i).
inline CliffordElement c_xi_prime(const GeneratorSet& g) {
    CliffordElement m(g.n);
    ScalarPoly half_h1 = ScalarPoly::variable(var(Sym::H1)) * GaussianRational(Rat(1) / 2);
    for (int i = 1; i < g.n; ++i) {
        ScalarPoly xi_i = ScalarPoly::variable(xi(i));
        m += g.c[i].scaled(Jet(xi_i, xi_i * half_h1));
    }
    return m;
}

/// c(dx_n) = c(e_n).
inline CliffordElement c_dxn(const GeneratorSet& g) { return g.c[g.n]; }

/// sum_k coeffs[k] c(e_k) (or cbar); coeffs is 1-based of length n.
inline CliffordElement c_covector(const GeneratorSet& g, const std::vector<ScalarPoly>& coeffs,
                                  bool barred = false) {
    if (static_cast<int>(coeffs.size()) != g.n + 1)
        throw std::invalid_argument("c_covector: need one coefficient per frame index");
    CliffordElement m(g.n);
    for (int k = 1; k <= g.n; ++k)
        m += (barred ? g.cbar[k] : g.c[k]).scaled(Jet(coeffs[k]));
    return m;
}

/// c(theta') from formal components THP_k.
inline CliffordElement c_theta_prime(const GeneratorSet& g) {
    std::vector<ScalarPoly> v(g.n + 1);
    for (int k = 1; k <= g.n; ++k) v[k] = ScalarPoly::variable(var(Sym::Thp, k));
    return c_covector(g, v, false);
}

/// cbar(theta) from formal components TH_k.
inline CliffordElement cbar_theta(const GeneratorSet& g) {
    std::vector<ScalarPoly> v(g.n + 1);
    for (int k = 1; k <= g.n; ++k) v[k] = ScalarPoly::variable(var(Sym::Th, k));
    return c_covector(g, v, true);
}

inline Jet trace(const CliffordElement& a) { return a.trace(); }

}  // namespace nres
