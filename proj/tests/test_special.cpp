#include <doctest.h>

#include <cmath>
#include <complex>

#include "ellw/special.hpp"

using namespace ellw;

namespace {

constexpr double kTight = 1e-13;

// Straightforward bilateral sum, written independently of the library
// implementation: fixed symmetric window, no tail logic.
cplx theta_oracle(double g1, double g2, cplx xi, cplx tau, int T = 200) {
    const cplx ipi(0.0, M_PI);
    cplx s = 0.0;
    for (int m = -T; m <= T; ++m) {
        cplx mm = double(m) + g1;
        s += std::exp(ipi * mm * mm * tau + 2.0 * ipi * mm * (xi + g2));
    }
    return s;
}

cplx qpoch_oracle(cplx x, cplx b, int K = 200) {
    cplx prod = 1.0;
    cplx bk = 1.0;
    for (int k = 0; k < K; ++k) {
        prod *= (1.0 - x * bk);
        bk *= b;
    }
    return prod;
}

cplx qpoch2_oracle(cplx x, cplx b1, cplx b2, int K = 120) {
    cplx prod = 1.0;
    for (int m = 0; m < K; ++m)
        for (int n = 0; n < K; ++n) {
            cplx term = 1.0 - x * std::pow(b1, m) * std::pow(b2, n);
            prod *= term;
            if (std::abs(term - 1.0) < 1e-18) break;
        }
    return prod;
}

cplx big_theta_oracle(cplx z, cplx nome, int K = 200) {
    return qpoch_oracle(z, nome, K) * qpoch_oracle(nome / z, nome, K) *
           qpoch_oracle(nome, nome, K);
}

double rel_err(cplx a, cplx b) {
    double scale = std::max(1.0, std::abs(b));
    return std::abs(a - b) / scale;
}

}  // namespace

TEST_CASE("theta with characteristics matches a direct bilateral sum") {
    TruncationConfig tc;
    const cplx I(0.0, 1.0);
    struct Pt {
        double g1, g2;
        cplx xi, tau;
    };
    const Pt pts[] = {
        {0.0, 0.0, 0.3, I},
        {0.5, 0.5, cplx(0.25, 0.1), cplx(0.5, 0.8)},
        {1.0 / 3.0, -0.5, cplx(-0.4, 0.2), cplx(0.1, 1.3)},
        {1.0 / 6.0, 1.0 / 3.0, cplx(0.7, -0.3), cplx(-0.2, 0.9)},
    };
    for (const auto& pt : pts) {
        cplx got = theta_char({pt.g1, pt.g2}, pt.xi, pt.tau, tc);
        cplx want = theta_oracle(pt.g1, pt.g2, pt.xi, pt.tau);
        CHECK(rel_err(got, want) < kTight);
    }
}

TEST_CASE("theta frozen values") {
    TruncationConfig tc;
    const cplx I(0.0, 1.0);
    cplx a = theta_char({0.0, 0.0}, 0.3, I, tc);
    CHECK(std::abs(a - cplx(0.9732866870883166, 0.0)) < kTight);

    cplx b = theta_char({0.5, 0.5}, cplx(0.25, 0.1), cplx(0.5, 0.8), tc);
    CHECK(std::abs(b - cplx(-0.6483347178698792, -0.5235102943799812)) <
          kTight);
}

TEST_CASE("theta [1/2,1/2] is odd and vanishes at the origin") {
    TruncationConfig tc;
    const cplx I(0.0, 1.0);
    CHECK(std::abs(theta_char({0.5, 0.5}, 0.0, I, tc)) < 1e-14);
    for (cplx xi : {cplx(0.37, -0.11), cplx(-0.6, 0.4), cplx(0.05, 0.9)}) {
        cplx tau(0.3, 1.1);
        cplx s = theta_char({0.5, 0.5}, xi, tau, tc) +
                 theta_char({0.5, 0.5}, -xi, tau, tc);
        CHECK(std::abs(s) < 1e-12);
    }
}

TEST_CASE("theta quasi-periodicity in xi and tau") {
    TruncationConfig tc;
    const cplx ipi(0.0, M_PI);
    double g1 = 1.0 / 3.0, g2 = 0.25;
    cplx xi(0.21, -0.33), tau(0.4, 1.2);
    cplx base = theta_char({g1, g2}, xi, tau, tc);

    cplx shift1 = theta_char({g1, g2}, xi + 1.0, tau, tc);
    CHECK(rel_err(shift1, std::exp(2.0 * ipi * g1) * base) < kTight);

    cplx shiftt = theta_char({g1, g2}, xi + tau, tau, tc);
    cplx fac = std::exp(-ipi * tau - 2.0 * ipi * (xi + g2));
    CHECK(rel_err(shiftt, fac * base) < kTight);
}

TEST_CASE("theta rejects tau in the closed lower half-plane") {
    TruncationConfig tc;
    CHECK_THROWS_AS(theta_char({0.0, 0.0}, 0.1, cplx(0.5, 0.0), tc),
                    DomainError);
    CHECK_THROWS_AS(theta_char({0.0, 0.0}, 0.1, cplx(0.5, -1.0), tc),
                    DomainError);
}

TEST_CASE("theta reports unconverged truncation") {
    TruncationConfig tc;
    tc.theta_terms = 2;
    tc.tail_bound = 1e-14;
    // tiny Im tau: two terms cannot reach the bound
    CHECK_THROWS_AS(theta_char({0.0, 0.0}, 0.3, cplx(0.0, 0.01), tc),
                    TruncationError);
}

TEST_CASE("q-Pochhammer against direct products") {
    TruncationConfig tc;
    cplx x(0.3, 0.2), b(0.5, 0.0);
    CHECK(rel_err(q_pochhammer(x, b, tc), qpoch_oracle(x, b)) < kTight);
    CHECK(std::abs(q_pochhammer(x, b, tc) -
                   cplx(0.469510146422488, -0.25691836873461943)) < kTight);

    cplx x2(0.25, 0.0);
    CHECK(rel_err(q_pochhammer2(x2, 0.5, 0.3, tc),
                  qpoch2_oracle(x2, 0.5, 0.3)) < kTight);
    CHECK(std::abs(q_pochhammer2(x2, 0.5, 0.3, tc) -
                   cplx(0.46417403977089716, 0.0)) < kTight);
}

TEST_CASE("q-Pochhammer shift identities") {
    TruncationConfig tc;
    cplx x(0.35, -0.2), b(0.45, 0.1);
    // (x;b) = (1-x)(xb;b)
    cplx lhs = q_pochhammer(x, b, tc);
    cplx rhs = (1.0 - x) * q_pochhammer(x * b, b, tc);
    CHECK(rel_err(lhs, rhs) < kTight);

    // (x;b1,b2) = (x;b2) * (x b1;b1,b2)
    cplx b1(0.5, 0.0), b2(0.3, 0.0);
    cplx l2 = q_pochhammer2(x, b1, b2, tc);
    cplx r2 = q_pochhammer(x, b2, tc) * q_pochhammer2(x * b1, b1, b2, tc);
    CHECK(rel_err(l2, r2) < kTight);
}

TEST_CASE("q-Pochhammer rejects |base| >= 1") {
    TruncationConfig tc;
    CHECK_THROWS_AS(q_pochhammer(0.3, cplx(1.0, 0.0), tc), DomainError);
    CHECK_THROWS_AS(q_pochhammer2(0.3, 0.5, cplx(0.0, 1.2), tc), DomainError);
}

TEST_CASE("triple product function matches its definition") {
    TruncationConfig tc;
    cplx z(0.7, 0.1), nome(0.4, 0.0);
    CHECK(rel_err(big_theta(z, nome, tc), big_theta_oracle(z, nome)) < kTight);
    CHECK(std::abs(big_theta(z, nome, tc) -
                   cplx(0.024919244053841206, -0.004082899681736647)) <
          kTight);
}

TEST_CASE("triple product shift and inversion") {
    TruncationConfig tc;
    cplx nome(0.35, 0.0);
    for (cplx z : {cplx(0.8, 0.3), cplx(1.4, -0.2), cplx(-0.6, 0.5)}) {
        cplx t = big_theta(z, nome, tc);
        CHECK(rel_err(big_theta(nome * z, nome, tc), -t / z) < kTight);
        CHECK(rel_err(big_theta(nome / z, nome, tc), t) < kTight);
    }
}

TEST_CASE("tau_n frozen value and basic identities") {
    TruncationConfig tc;
    ModularParams mp;
    mp.N = 2;
    mp.q = 0.5;
    mp.p = 0.3;
    cplx z = 0.9 * std::exp(cplx(0.0, -0.7));
    cplx got = tau_n(z, mp, tc);
    CHECK(std::abs(got - cplx(0.07722334358003714, 1.0363488505648537)) <
          kTight);
    CHECK(rel_err(tau_n(z, mp, tc) * tau_n(1.0 / z, mp, tc), 1.0) < kTight);
    CHECK(std::abs(tau_n(cplx(1.0, 0.0), mp, tc) - 1.0) < kTight);

    ModularParams mp3 = mp;
    mp3.N = 3;
    CHECK(std::abs(tau_n(cplx(1.0, 0.0), mp3, tc) - 1.0) < kTight);
    // period q^N
    cplx qN = cpow(mp3.q, 3);
    CHECK(rel_err(tau_n(qN * z, mp3, tc), tau_n(z, mp3, tc)) < 1e-12);
}

TEST_CASE("kappa_inv frozen value and vanishing point") {
    TruncationConfig tc;
    ModularParams mp;
    mp.N = 2;
    mp.q = 0.5;
    mp.p = 0.3;
    cplx got = kappa_inv(cplx(0.6, 0.3), mp, tc);
    CHECK(std::abs(got - cplx(0.9412252487985996, 0.10031682461628813)) <
          kTight);
    // numerator carries the factor (q^{2N}/y; p, q^{2N}): zero at y = q^{2N}
    cplx q2N = cpow(mp.q, 2 * mp.N);
    CHECK(std::abs(kappa_inv(q2N, mp, tc)) < 1e-14);
}

TEST_CASE("q_number values and exact oddness") {
    CHECK(q_number(2, cplx(2.0, 0.0)).real() == doctest::Approx(2.5));
    CHECK(std::abs(q_number(3, cplx(0.5, 0.0)) - 5.25) < 1e-15);
    CHECK(std::abs(q_number(5, cplx(0.5, 0.0)) - 21.3125) < 1e-15);
    CHECK(std::abs(q_number(0, cplx(0.5, 0.0))) == 0.0);

    cplx q(0.73, 0.21);
    for (long r = 1; r <= 25; ++r) {
        cplx a = q_number(r, q);
        cplx b = q_number(-r, q);
        // bit-exact antisymmetry by construction
        CHECK(a.real() == -b.real());
        CHECK(a.imag() == -b.imag());
    }
    CHECK_THROWS_AS(q_number(3, cplx(1.0, 0.0)), DomainError);
}

TEST_CASE("q_number addition rule [a+b] = [a] q^b + [b] q^-a") {
    cplx q(0.6, -0.1);
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            cplx lhs = q_number(a + b, q);
            cplx rhs = q_number(a, q) * cpow(q, b) +
                       q_number(b, q) * cpow(q, -a);
            CHECK(std::abs(lhs - rhs) < 1e-13);
        }
}

TEST_CASE("format_complex layout") {
    CHECK(format_complex(cplx(2.5, 0.0), 15) == "2.5+0i");
    CHECK(format_complex(cplx(-1.25, -3.5), 15) == "-1.25-3.5i");
    CHECK(format_complex(cplx(0.0, 1.0), 15) == "0+1i");
}
