#include <doctest.h>

#include <cmath>
#include <vector>

#include "ellw/modes.hpp"

using namespace ellw;

namespace {

constexpr double kTight = 1e-13;

const cplx kX0 = 1.1 * std::exp(cplx(0.0, -0.3));

ModularParams base_params(int N = 2) {
    ModularParams mp;
    mp.N = N;
    mp.q = 0.5;
    mp.p = 0.3;
    return mp;
}

}  // namespace

TEST_CASE("pole exponent ladder") {
    CHECK(pole_ladder(2, 7) == std::vector<long>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(pole_ladder(5, 11) == std::vector<long>{0, 1, 4, 5, 6, 9, 10, 11});
    CHECK(pole_ladder(3, 4) == std::vector<long>{0, 1, 2, 3, 4});
}

TEST_CASE("critical table frozen rows") {
    ModeCoeffTable t2 = critical_k0_table(2, 0.5, 5);
    const double want2[] = {-0.8317766166719343, -1.2232009068704917,
                            -1.3436391500085092, -1.375506078153977,
                            -1.3835893965128272};
    for (long r = 1; r <= 5; ++r)
        CHECK(std::abs(t2.at(r) - want2[r - 1]) < kTight);

    ModeCoeffTable t3 = critical_k0_table(3, 0.5, 5);
    const double want3[] = {-0.990210257942779, -1.2948903373097878,
                            -1.364305553661608, -1.380858160533674,
                            -1.3849392385404447};
    for (long r = 1; r <= 5; ++r)
        CHECK(std::abs(t3.at(r) - want3[r - 1]) < kTight);
}

TEST_CASE("tables are exactly odd with a vanishing zero mode") {
    std::vector<ModeCoeffTable> tabs;
    tabs.push_back(critical_k0_table(2, cplx(0.62, 0.11), 6));
    tabs.push_back(sl2_sector_table(2, cplx(0.62, 0.11), 6));
    tabs.push_back(higher_spin_k0_table(1, 2, 3, cplx(0.62, 0.11), 6));
    tabs.push_back(h_limit_table(3, 1, 1, cplx(0.62, 0.11), 6));
    tabs.push_back(h_limit_table(3, 2, 2, cplx(0.62, 0.11), 6));
    for (const auto& t : tabs) {
        CHECK(std::abs(t.at(0)) == 0.0);
        for (long r = 1; r <= t.r_max; ++r) {
            // bit-exact by construction of the q-integer helper
            CHECK(t.at(r).real() == -t.at(-r).real());
            CHECK(t.at(r).imag() == -t.at(-r).imag());
        }
    }
    CHECK_THROWS_AS(tabs[0].at(7), DomainError);
}

TEST_CASE("sl2 sector frozen rows and the k=0 collapse") {
    ModeCoeffTable k1 = sl2_sector_table(1, 0.5, 3);
    const double want1[] = {4.366827237527655, 20.870865473477764,
                            87.35753911227198};
    for (long s = 1; s <= 3; ++s)
        CHECK(std::abs(k1.at(s) - want1[s - 1]) < 1e-12);

    ModeCoeffTable k2 = sl2_sector_table(2, 0.5, 3);
    const double want2[] = {-17.7272391428206, -334.01507576086607,
                            -5590.903825584028};
    for (long s = 1; s <= 3; ++s)
        CHECK(std::abs(k2.at(s) - want2[s - 1]) / std::abs(want2[s - 1]) <
              1e-13);

    // sector 0 coincides with the N=2 critical table
    ModeCoeffTable k0 = sl2_sector_table(0, 0.5, 5);
    ModeCoeffTable cr = critical_k0_table(2, 0.5, 5);
    for (long r = -5; r <= 5; ++r) CHECK(std::abs(k0.at(r) - cr.at(r)) < kTight);
}

TEST_CASE("higher-spin table frozen rows, symmetry, centrality") {
    ModeCoeffTable hs = higher_spin_k0_table(1, 2, 3, 0.5, 3);
    const double want[] = {-0.39608410317711157, -0.3046800793670089,
                           -0.1679145296814287};
    for (long r = 1; r <= 3; ++r)
        CHECK(std::abs(hs.at(r) - want[r - 1]) < kTight);

    // symmetric in (i, j)
    ModeCoeffTable sw = higher_spin_k0_table(2, 1, 3, 0.5, 3);
    for (long r = -3; r <= 3; ++r)
        CHECK(std::abs(hs.at(r) - sw.at(r)) == 0.0);

    // (1,1) at N reproduces the critical table
    ModeCoeffTable d11 = higher_spin_k0_table(1, 1, 3, 0.5, 4);
    ModeCoeffTable cr = critical_k0_table(3, 0.5, 4);
    for (long r = -4; r <= 4; ++r)
        CHECK(std::abs(d11.at(r) - cr.at(r)) < kTight);

    // anything braided with spin N is central: the whole row vanishes
    for (int i = 1; i <= 3; ++i) {
        ModeCoeffTable cen = higher_spin_k0_table(i, 3, 3, 0.5, 4);
        for (long r = -4; r <= 4; ++r) CHECK(std::abs(cen.at(r)) < 1e-15);
    }

    CHECK_THROWS_AS(higher_spin_k0_table(0, 1, 3, 0.5, 3), DomainError);
    CHECK_THROWS_AS(higher_spin_k0_table(1, 4, 3, 0.5, 3), DomainError);
}

TEST_CASE("h-limit table frozen rows for both parities") {
    // odd parity, N=3: the two integer-part weights are (A, B) = (2, 4)
    ModeCoeffTable o1 = h_limit_table(3, 1, 1, 0.5, 3);
    const double want1[] = {-0.39608410317711157, -1.37106035715154,
                            -2.0569529885975015};
    for (long r = 1; r <= 3; ++r)
        CHECK(std::abs(o1.at(r) - want1[r - 1]) < 1e-12);

    // odd parity, N=3, M=2: (A, B) = (12, 9)
    ModeCoeffTable o2 = h_limit_table(3, 2, -1, 0.5, 3);
    const double want2[] = {-8.317766166719343, -12.796563333414374,
                            -14.86043587680644};
    for (long r = 1; r <= 3; ++r)
        CHECK(std::abs(o2.at(r) - want2[r - 1]) < 1e-12);

    // odd parity at N=2, M=1 collapses onto the critical table
    ModeCoeffTable oc = h_limit_table(2, 1, 1, 0.5, 5);
    ModeCoeffTable cr2 = critical_k0_table(2, 0.5, 5);
    for (long r = -5; r <= 5; ++r)
        CHECK(std::abs(oc.at(r) - cr2.at(r)) < kTight);

    // even parity is the critical table, bit for bit
    ModeCoeffTable ev = h_limit_table(3, 2, 2, 0.5, 5);
    ModeCoeffTable cr3 = critical_k0_table(3, 0.5, 5);
    CHECK(ev.kind == "h-limit");
    for (long r = -5; r <= 5; ++r) {
        CHECK(ev.at(r).real() == cr3.at(r).real());
        CHECK(ev.at(r).imag() == cr3.at(r).imag());
    }

    // sign flip of M changes nothing (only |M| enters)
    ModeCoeffTable om = h_limit_table(3, -1, 1, 0.5, 3);
    for (long r = -3; r <= 3; ++r)
        CHECK(std::abs(om.at(r) - o1.at(r)) == 0.0);
}

TEST_CASE("formal bracket expansion and antisymmetry") {
    ModeCoeffTable t = critical_k0_table(2, 0.5, 3);
    FormalBracket b = bracket(t, 3, -1);
    CHECK(b.n == 3);
    CHECK(b.m == -1);
    CHECK(b.terms.size() == 6);  // r = +-1, +-2, +-3; r = 0 drops out
    for (const auto& term : b.terms) {
        CHECK(term.left_index == 3 - 2 * term.r);
        CHECK(term.right_index == -1 + 2 * term.r);
        CHECK(std::abs(term.coeff - t.at(term.r)) == 0.0);
    }
    CHECK(b.display.substr(0, 15) == "{t_3, t_-1} = (");

    // swapping the arguments negates the coefficients term by term
    FormalBracket c = bracket(t, -1, 3);
    CHECK(c.terms.size() == b.terms.size());
    for (const auto& term : b.terms) {
        bool found = false;
        for (const auto& other : c.terms) {
            if (other.r == -term.r) {
                found = true;
                CHECK(std::abs(other.coeff + term.coeff) == 0.0);
                CHECK(other.left_index == term.right_index);
                CHECK(other.right_index == term.left_index);
            }
        }
        CHECK(found);
    }

    // zero table prints a zero bracket
    ModeCoeffTable cen = higher_spin_k0_table(3, 3, 3, 0.5, 2);
    FormalBracket z = bracket(cen, 0, 0);
    CHECK(z.terms.empty());
    CHECK(z.display == "{t_0, t_0} = 0");
}

TEST_CASE("classical higher-spin kernel frozen values") {
    ModularParams mp = base_params(3);
    cplx g12 = classical_higher_spin_f(1, 2, kX0, mp);
    CHECK(std::abs(g12 - cplx(-0.08345950660368384, -1.5121656196889506)) <
          kTight);
    cplx g22 = classical_higher_spin_f(2, 2, kX0, mp);
    CHECK(std::abs(g22 - cplx(-1.5128859724473376, -3.3605255336338233)) <
          kTight);
}

TEST_CASE("quadrature recovers the critical tables") {
    for (int N : {2, 3}) {
        ModularParams mp = base_params(N);
        TruncationConfig tc;
        auto kern = [&](cplx x) { return f_function(x, mp, tc); };
        double rho = std::sqrt(0.5);
        std::vector<cplx> modes = quadrature_mode_table(kern, rho, 5);
        ModeCoeffTable t = critical_k0_table(N, 0.5, 5);
        for (long r = -5; r <= 5; ++r)
            CHECK(std::abs(modes[size_t(r + 5)] - t.at(r)) < 1e-10);
    }
}

TEST_CASE("quadrature on an inner contour recovers the sl2 sector") {
    ModularParams mp = base_params(2);
    TruncationConfig tc;
    auto kern = [&](cplx x) { return f_function(x, mp, tc); };
    int k = 1;
    double rho = std::pow(0.5, k + 0.5);
    std::vector<cplx> modes = quadrature_mode_table(kern, rho, 3);
    ModeCoeffTable t = sl2_sector_table(k, 0.5, 3);
    for (long s = 1; s <= 3; ++s) {
        double rel = std::abs(modes[size_t(s + 3)] - t.at(s)) /
                     std::abs(t.at(s));
        CHECK(rel < 1e-10);
    }
}

TEST_CASE("quadrature on the unit contour recovers the higher-spin table") {
    ModularParams mp = base_params(3);
    TruncationConfig tc;
    auto kern = [&](cplx x) {
        return classical_higher_spin_f(1, 2, x, mp, tc);
    };
    std::vector<cplx> modes = quadrature_mode_table(kern, 1.0, 3);
    ModeCoeffTable t = higher_spin_k0_table(1, 2, 3, 0.5, 3);
    for (long r = 1; r <= 3; ++r)
        CHECK(std::abs(modes[size_t(r + 3)] - t.at(r)) < 1e-10);
}

TEST_CASE("single-mode quadrature agrees with the table pass") {
    ModularParams mp = base_params(2);
    TruncationConfig tc;
    auto kern = [&](cplx x) { return f_function(x, mp, tc); };
    double rho = std::sqrt(0.5);
    std::vector<cplx> modes = quadrature_mode_table(kern, rho, 2);
    for (long s = -2; s <= 2; ++s)
        CHECK(std::abs(quadrature_mode(kern, rho, s) - modes[size_t(s + 2)]) <
              1e-12);
}

TEST_CASE("quantum exchange collapses on the surface and squares to one") {
    SurfacePoint sp = solve_surface(3, 1, 0.5, 0.3);
    // braiding t_n with the top current: product over the full grid is
    // central, so the double exchange must cancel exactly
    for (int i : {1, 2}) {
        cplx y1 = quantum_higher_spin_y(i, 3, kX0, sp);
        CHECK(std::abs(y1 - 1.0) < 1e-8);
        cplx d = quantum_higher_spin_y(i, 2, kX0, sp) *
                 quantum_higher_spin_y(i, 2, 1.0 / kX0, sp);
        CHECK(std::abs(d - 1.0) < 1e-8);
    }
}
