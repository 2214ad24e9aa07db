#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nres/clifford.hpp"
#include "nres/metric.hpp"

using namespace nres;

namespace {

Jet tr_rel(const CliffordElement& a, bool sphere = false) {
    return apply_relations(a.trace(), a.n, sphere);
}

ScalarPoly h1poly() { return ScalarPoly::variable(var(Sym::H1)); }

}  // namespace

TEST_CASE("generator relations, exhaustive at n=4 and n=6") {
    for (int n : {4, 6}) {
        GeneratorSet g = build_generators(n);
        CliffordElement id = CliffordElement::identity(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                CliffordElement acc_c = g.c[i] * g.c[j] + g.c[j] * g.c[i];
                CliffordElement acc_cb = g.cbar[i] * g.cbar[j] + g.cbar[j] * g.cbar[i];
                CliffordElement acc_mix = g.c[i] * g.cbar[j] + g.cbar[j] * g.c[i];
                if (i == j) {
                    CHECK(acc_c == id.scaled(GaussianRational(-2)));
                    CHECK(acc_cb == id.scaled(GaussianRational(2)));
                } else {
                    CHECK(acc_c.is_zero());
                    CHECK(acc_cb.is_zero());
                }
                CHECK(acc_mix.is_zero());
            }
        CHECK(tr_rel(id).value == ScalarPoly(1 << n));
    }
    CHECK_THROWS_AS(build_generators(0), std::invalid_argument);
}

TEST_CASE("trace table at n=4") {
    int n = 4;
    GeneratorSet g = build_generators(n);
    CliffordElement cxi = c_xi_prime(g);
    CliffordElement cdn = c_dxn(g);
    CliffordElement dcxi = cxi.dxn();

    CHECK(tr_rel(cxi * cdn).is_zero());
    CHECK(tr_rel(cdn * cdn).value == ScalarPoly(-16));
    CHECK(tr_rel(cxi * cxi, true).value == ScalarPoly(-16));
    CHECK(tr_rel(dcxi * cdn).is_zero());
    CHECK(tr_rel(dcxi * cxi, true).value == ScalarPoly(-8) * h1poly());
    CHECK((cdn * cdn + CliffordElement::identity(n)).is_zero());

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) CHECK(tr_rel(g.cbar[i] * g.cbar[j] * g.c[i] * g.c[j]).is_zero());
    for (int i = 1; i < n; ++i)
        CHECK(tr_rel(g.c[i] * g.cbar[i] * g.c[n] * g.cbar[n]).is_zero());

    CliffordElement cth = c_theta_prime(g);
    CliffordElement cbth = cbar_theta(g);
    CHECK(tr_rel(cth * cdn).value ==
          ScalarPoly::variable(var(Sym::Thp, n)) * GaussianRational(-16));
    CHECK(tr_rel(cbth * cdn).is_zero());

    std::vector<ScalarPoly> xi_comps(n + 1);
    for (int i = 1; i < n; ++i) xi_comps[i] = ScalarPoly::variable(xi(i));
    CliffordElement cbxi = c_covector(g, xi_comps, true);
    CHECK(tr_rel(cbxi * g.cbar[n]).is_zero());
}

TEST_CASE("trace table at n=6") {
    int n = 6;
    GeneratorSet g = build_generators(n);
    CliffordElement cxi = c_xi_prime(g);
    CliffordElement cdn = c_dxn(g);
    CHECK(tr_rel(CliffordElement::identity(n)).value == ScalarPoly(64));
    CHECK(tr_rel(cdn * cdn).value == ScalarPoly(-64));
    CHECK(tr_rel(cxi * cxi, true).value == ScalarPoly(-64));
    CHECK(tr_rel(cxi.dxn() * cxi, true).value == ScalarPoly(-32) * h1poly());
    CHECK(tr_rel(cxi.dxn() * cdn).is_zero());

    CliffordElement cth = c_theta_prime(g);
    CHECK(tr_rel(cth * cdn).value ==
          ScalarPoly::variable(var(Sym::Thp, n)) * GaussianRational(-64));
    ScalarPoly g_thp_xi;
    for (int i = 1; i < n; ++i)
        g_thp_xi += ScalarPoly::variable(var(Sym::Thp, i)) * ScalarPoly::variable(xi(i));
    CHECK(tr_rel(cth * cxi).value == g_thp_xi * GaussianRational(-64));
    for (int i = 1; i < n; ++i)
        CHECK(tr_rel(g.c[i] * g.cbar[i] * g.c[n] * g.cbar[n]).is_zero());
}

TEST_CASE("c(xi') squares to -SQ with the metric slope") {
    for (int n : {4, 6}) {
        GeneratorSet g = build_generators(n);
        CliffordElement sq = (c_xi_prime(g) * c_xi_prime(g)).normalized();
        ScalarPoly SQ = ScalarPoly::variable(var(Sym::Sq));
        CliffordElement want = CliffordElement::identity(n, Jet(-SQ, -(h1poly() * SQ)));
        CHECK(sq == want.normalized());
    }
}

TEST_CASE("trace cyclicity on random generator words") {
    std::mt19937 rng(77u);
    for (int n : {4, 6}) {
        GeneratorSet g = build_generators(n);
        std::uniform_int_distribution<int> len(1, 6), pick(1, n), bar(0, 1);
        auto rand_word = [&]() {
            CliffordElement w = CliffordElement::identity(n);
            int L = len(rng);
            for (int t = 0; t < L; ++t) w = w * (bar(rng) ? g.cbar[pick(rng)] : g.c[pick(rng)]);
            return w;
        };
        for (int t = 0; t < 25; ++t) {
            CliffordElement A = rand_word(), B = rand_word();
            CHECK(tr_rel(A * B) == tr_rel(B * A));
        }
    }
}

TEST_CASE("odd generator words are traceless") {
    std::mt19937 rng(78u);
    for (int n : {4, 6}) {
        GeneratorSet g = build_generators(n);
        std::uniform_int_distribution<int> pick(1, n), bar(0, 1), halflen(0, 2);
        for (int t = 0; t < 20; ++t) {
            CliffordElement w = CliffordElement::identity(n);
            int L = 2 * halflen(rng) + 1;
            for (int s = 0; s < L; ++s) w = w * (bar(rng) ? g.cbar[pick(rng)] : g.c[pick(rng)]);
            CHECK(w.trace().is_zero());
        }
    }
}

TEST_CASE("c_covector argument validation") {
    GeneratorSet g = build_generators(4);
    CHECK_THROWS_AS(c_covector(g, std::vector<ScalarPoly>(3)), std::invalid_argument);
}

TEST_CASE("derived connection anchors") {
    BoundaryGeometry geo4 = derive_geometry(4);
    CliffordElement want4 = c_dxn(geo4.gen).scaled(h1poly() * GaussianRational(Rat(-3) / 4));
    CHECK(geo4.b02.value_part() == want4);
    CHECK(apply_relations(geo4.gamma_n, 4) == h1poly() * GaussianRational(Rat(3) / 2));

    BoundaryGeometry geo6 = derive_geometry(6);
    CliffordElement want6 = c_dxn(geo6.gen).scaled(h1poly() * GaussianRational(Rat(-5) / 4));
    CHECK(geo6.b02.value_part() == want6);
    CHECK(apply_relations(geo6.gamma_n, 6) == h1poly() * GaussianRational(Rat(5) / 2));

    CHECK(tr_rel(geo4.b01 * c_dxn(geo4.gen)).is_zero());
    // sigma_i(x0) = 1/4 h'(0) c(e_i) c(e_n), i < n
    for (int i = 1; i < 4; ++i) {
        CliffordElement sig(4);
        for (int s = 1; s <= 4; ++s)
            for (int t = 1; t <= 4; ++t) {
                const ScalarPoly& w = geo4.omega[s][t][i];
                if (!w.is_zero())
                    sig += (geo4.gen.c[s] * geo4.gen.c[t])
                               .scaled(Jet(-(w * GaussianRational(Rat(1) / 4))));
            }
        CliffordElement want =
            (geo4.gen.c[i] * geo4.gen.c[4]).scaled(h1poly() * GaussianRational(Rat(1) / 4));
        CHECK(sig.value_part() == want);
    }
}
