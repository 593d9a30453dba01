#include <doctest.h>

#include <cmath>

#include "ellw/structure.hpp"

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

TEST_CASE("T frozen value away from the critical level") {
    ModularParams mp = base_params(2);
    mp.c = cplx(-1.7, 0.0);
    cplx got = t_function(kX0, mp);
    CHECK(std::abs(got - cplx(0.5103564863294556, -0.48202932357616307)) <
          kTight);
}

TEST_CASE("T collapses to 1 at the critical level") {
    for (int N : {2, 3}) {
        ModularParams mp = base_params(N);
        mp.c = cplx(-double(N), 0.0);
        for (cplx x : {kX0, cplx(0.8, -0.4), cplx(1.3, 0.2)}) {
            CHECK(std::abs(t_function(x, mp) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("T requires a level and validates parameters") {
    ModularParams mp = base_params(2);
    CHECK_THROWS_AS(t_function(kX0, mp), DomainError);
}

TEST_CASE("matrix witness reduces to the identity at the critical level") {
    for (int N : {2, 3}) {
        ModularParams mp = base_params(N);
        mp.c = cplx(-double(N), 0.0);
        cplx x = 0.9 * std::exp(cplx(0.0, -1.1));
        CMatrix m = m_function(x, mp);
        CHECK(max_abs_diff(m, CMatrix::identity(N * N)) < 1e-12);
    }
}

TEST_CASE("matrix witness is stationary in the level at criticality") {
    // the scalar factor T carries the first-order level dependence; the
    // matrix part must show a vanishing central difference
    ModularParams mp = base_params(2);
    cplx x = 0.9 * std::exp(cplx(0.0, -1.1));

    auto fd_norm = [&](double d) {
        mp.c = cplx(-2.0 + d, 0.0);
        CMatrix plus = m_function(x, mp);
        mp.c = cplx(-2.0 - d, 0.0);
        CMatrix minus = m_function(x, mp);
        plus -= minus;
        return max_abs(plus) / (2.0 * d);
    };
    double d1 = fd_norm(1e-3);
    double d2 = fd_norm(5e-4);
    CHECK(d1 < 1e-6);
    CHECK(d2 < d1);
}

TEST_CASE("f frozen values") {
    ModularParams mp2 = base_params(2);
    CHECK(std::abs(f_function(kX0, mp2) -
                   cplx(-1.5671284863359214, -2.978808093267273)) < kTight);
    ModularParams mp3 = base_params(3);
    CHECK(std::abs(f_function(kX0, mp3) -
                   cplx(-1.5128859724473376, -3.360525533633822)) < kTight);
}

TEST_CASE("f is the level derivative of T at the critical point") {
    ModularParams mp = base_params(2);
    const double d = 1e-4;
    for (cplx x : {kX0, cplx(0.85, -0.55)}) {
        mp.c = cplx(-2.0 + d, 0.0);
        cplx tp = t_function(x, mp);
        mp.c = cplx(-2.0 - d, 0.0);
        cplx tm = t_function(x, mp);
        cplx fd = (tp - tm) / (2.0 * d);
        cplx f = f_function(x, mp);
        CHECK(std::abs(fd - f) / std::abs(f) < 1e-5);

        // halving the step shrinks the defect ~4x (second-order stencil)
        mp.c = cplx(-2.0 + d / 2.0, 0.0);
        cplx tp2 = t_function(x, mp);
        mp.c = cplx(-2.0 - d / 2.0, 0.0);
        cplx tm2 = t_function(x, mp);
        cplx fd2 = (tp2 - tm2) / d;
        double e1 = std::abs(fd - f), e2 = std::abs(fd2 - f);
        CHECK(e2 < e1);
        CHECK(std::abs(e1 / e2 - 4.0) < 0.7);
    }
}

TEST_CASE("f is odd and does not depend on p") {
    for (int N : {2, 3}) {
        ModularParams mp = base_params(N);
        for (cplx x : {kX0, cplx(0.75, -0.35), cplx(1.2, 0.4)}) {
            CHECK(std::abs(f_function(x, mp) + f_function(1.0 / x, mp)) <
                  1e-12);
        }
        ModularParams mp2 = mp;
        mp2.p = cplx(0.7, 0.1);
        CHECK(std::abs(f_function(kX0, mp) - f_function(kX0, mp2)) == 0.0);
    }
}

TEST_CASE("f satisfies the cyclic bracket identity on triples") {
    // J = f(y/x)(f(z/y)+f(z/x)) + f(z/y)(f(x/z)+f(x/y))
    //   + f(x/z)(f(y/x)+f(y/z)) vanishes identically
    ModularParams mp = base_params(2);
    cplx x(1.05, -0.2), y(0.9, 0.3), z(1.3, -0.4);
    auto f = [&](cplx u) { return f_function(u, mp); };
    cplx J = f(y / x) * (f(z / y) + f(z / x)) +
             f(z / y) * (f(x / z) + f(x / y)) +
             f(x / z) * (f(y / x) + f(y / z));
    CHECK(std::abs(J) < 1e-11);
}

TEST_CASE("exchange kernel F frozen values") {
    ModularParams mp = base_params(2);
    CHECK(std::abs(f_exchange(1, kX0, mp) -
                   cplx(0.7186660792423961, -0.24444873030213046)) < kTight);
    CHECK(std::abs(f_exchange(-1, kX0, mp) -
                   cplx(0.8247785653088588, 0.385241895675634)) < kTight);
    CHECK_THROWS_AS(f_exchange(0, kX0, mp), DomainError);
}

TEST_CASE("Y frozen values") {
    CHECK(std::abs(y_exchange(2, 1, kX0, 0.5, 0.3) -
                   cplx(0.6208867037901263, -0.4437998059296688)) < kTight);
    CHECK(std::abs(y_exchange(3, 2, kX0, 0.5, 0.3) -
                   cplx(0.8732642945633557, -0.2265470262286367)) < kTight);
    CHECK(std::abs(y_exchange(2, -1, kX0, 0.5, 0.3) -
                   cplx(1.068461940367939, 1.0147068966349055)) < kTight);
}

TEST_CASE("Y structural identities") {
    struct Case {
        int N, M;
    };
    for (Case cs : {Case{2, 1}, Case{3, 1}, Case{2, -1}, Case{3, 2}}) {
        cplx q(0.5, 0.0), p(0.3, 0.0);
        auto Y = [&](cplx x) { return y_exchange(cs.N, cs.M, x, q, p); };

        // period q^N
        cplx qN = ipow(q, cs.N);
        CHECK(std::abs(Y(kX0 * qN) - Y(kX0)) < 1e-12);

        // cyclic product over j = 0..N-1 collapses to 1
        cplx prod = 1.0;
        for (int j = 0; j < cs.N; ++j) prod *= Y(kX0 * ipow(q, j));
        CHECK(std::abs(prod - 1.0) < 1e-12);

        // inversion
        CHECK(std::abs(Y(kX0) * Y(1.0 / kX0) - 1.0) < 1e-12);

        // N = 2 refinement: Y(x) Y(q x) = 1
        if (cs.N == 2)
            CHECK(std::abs(Y(kX0) * Y(q * kX0) - 1.0) < 1e-12);
    }
}

TEST_CASE("Y collapses to 1 on the classical surfaces p = q^{Nh}") {
    cplx q(0.5, 0.0);
    for (int N : {2, 3}) {
        for (int h : {1, 2, -1}) {
            cplx p = cpow(q, cplx(double(N) * h, 0.0));
            for (cplx x : {kX0, cplx(0.9, -0.2)}) {
                CHECK(std::abs(y_exchange(N, 1, x, q, p) - 1.0) < 1e-10);
            }
        }
    }
}

TEST_CASE("f_h frozen values, oddness, parity prefactors") {
    CHECK(std::abs(f_h_function(kX0, 2, 1, 1, 0.5) -
                   cplx(3.134256972671843, 5.957616186534549)) < 1e-12);
    CHECK(std::abs(f_h_function(kX0, 2, 1, 2, 0.5) -
                   cplx(18.805541836031058, 35.74569711920727)) < 1e-12);
    CHECK(std::abs(f_h_function(kX0, 3, 2, -1, 0.5) -
                   cplx(-52.210488329804704, -80.15044747921594)) < 1e-12);

    for (int h : {1, 2, -1, -2, 3}) {
        cplx s = f_h_function(kX0, 2, 1, h, 0.5) +
                 f_h_function(1.0 / kX0, 2, 1, h, 0.5);
        CHECK(std::abs(s) < 1e-11);
    }
    CHECK_THROWS_AS(f_h_function(kX0, 2, 0, 1, 0.5), DomainError);
    CHECK_THROWS_AS(f_h_function(kX0, 2, 1, 0, 0.5), DomainError);
}

TEST_CASE("even-parity f_h is a constant multiple of f") {
    ModularParams mp = base_params(2);
    int N = 2, M = 1, h = 2;
    long m = std::labs(long(M));
    double want = -double(N) * N * double(m) * (N * m + 1) * h / 2.0;
    for (cplx x : {kX0, cplx(0.8, -0.45), cplx(1.15, 0.25)}) {
        cplx ratio = f_h_function(x, N, M, h, mp.q) / f_function(x, mp);
        CHECK(std::abs(ratio - want) < 1e-9);
    }
}

TEST_CASE("surface level frozen values and defining residual") {
    SurfacePoint s21 = solve_surface(2, 1, 0.5, 0.3);
    CHECK(std::abs(s21.c - cplx(-3.7369655941662066, -9.064720283654388)) <
          1e-12);
    SurfacePoint s32 = solve_surface(3, 2, 0.5, 0.3);
    CHECK(std::abs(s32.c - cplx(-8.210896782498619, -27.19416085096316)) <
          1e-11);

    // (-sqrt(p))^{NM} = q^{-c-N}
    for (const SurfacePoint& sp : {s21, s32}) {
        cplx lhs = cpow(-std::sqrt(sp.p), cplx(double(sp.N) * sp.M, 0.0));
        cplx rhs = cpow(sp.q, -sp.c - double(sp.N));
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }

    CHECK_THROWS_AS(solve_surface(2, 1, 0.5, cplx(1.5, 0.0)), DomainError);
}
