#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "depthlab/certificates.hpp"
#include "depthlab/errors.hpp"

using namespace depthlab;

namespace {

long long pow3(int e) {
    long long r = 1;
    while (e--) r *= 3;
    return r;
}

}  // namespace

TEST_CASE("b1 bound transcription and validity") {
    for (int n = 0; n <= 6; ++n) {
        long long m = pow3(n), q = 3 * m * m;
        BoundCheck c = check_b1_bound(q);
        CHECK(c.q == q);
        CHECK(c.m == m);
        BigInt Q = q, M = m;
        BigInt lhs = Q * Q * Q * (Q * Q * Q + 1) * (Q - 1) -
                     (Q + 1 + 3 * M) * (Q + 1 + 3 * M) * (Q - 1) * (Q + 1) * Q -
                     2 * (Q + 1 + 3 * M) * (Q + 1 + 3 * M) * Q * Q;
        CHECK(c.lhs == lhs);
        CHECK(c.rhs == 0);
        CHECK(c.holds == (lhs > 0));
        CHECK(c.in_domain == (q >= 27));
        if (q >= 27) CHECK(c.holds);
    }
}

TEST_CASE("ngm bound transcription and validity") {
    for (int n = 0; n <= 6; ++n) {
        long long q = 3 * pow3(n) * pow3(n);
        BoundCheck c = check_ngm_bound(q);
        BigInt Q = q;
        BigInt lhs = Q * Q * Q * (Q * Q * Q + 1) * (Q - 1) - 6 * (Q + 1) -
                     2 * Q * Q * (Q + 1) * (Q + 1) -
                     (Q + 4) * (Q + 4) * Q * (Q - 1) * (Q + 1);
        CHECK(c.lhs == lhs);
        CHECK(c.rhs == 1);
        CHECK(c.holds == (lhs > 1));
        if (q >= 27) CHECK(c.holds);
    }
}

TEST_CASE("r3 bound transcription and validity") {
    for (int n = 0; n <= 6; ++n) {
        long long m = pow3(n), q = 3 * m * m;
        BoundCheck c = check_r3_bound(q);
        BigInt Q = q, M = m;
        BigInt lhs = BigInt(28) * 28 * Q * Q * Q * (Q - 1) +
                     BigInt(63) * 63 * (Q * Q * Q - Q) +
                     BigInt(36) * 36 * 6 * (Q + 3 * M + 1);
        BigInt rhs = (Q - 1) * Q * Q * Q * (Q * Q * Q + 1);
        CHECK(c.lhs == lhs);
        CHECK(c.rhs == rhs);
        CHECK(c.holds == (lhs < rhs));
        if (q >= 27) CHECK(c.holds);
    }
}

TEST_CASE("cgi count bound at the smallest admissible pair") {
    // q = 3^9 = 3^(3*3), q0 = 3^3
    long long q = pow3(9), q0 = pow3(3);
    BoundCheck c = check_cgi_count_bound(q, q0);
    CHECK(c.q0 == q0);
    CHECK(c.in_domain);
    CHECK(c.holds);
    // the scaled inequality 9*2A - 9 q0^2 (q0-1)^2 (q0+1)^2 >= 8q^3 - 36q^2 + 9q
    BigInt Q = q, Q0 = q0;
    BigInt two_a = Q * (Q - 1) * (Q + 1) - Q * Q0 * Q0 * Q0 * Q0 -
                   2 * Q * Q0 * Q0 * Q0 - 3 * Q * Q0 * Q0 + 2 * Q * Q0 + 2 * Q +
                   2 * Q0 * Q0 * Q0 * Q0 * Q0 + 3 * Q0 * Q0 * Q0 * Q0 -
                   2 * Q0 * Q0 * Q0 - Q0 * Q0;
    CHECK(two_a % 2 == 0);
    BigInt lhs = 9 * two_a - 9 * Q0 * Q0 * (Q0 - 1) * (Q0 - 1) * (Q0 + 1) * (Q0 + 1);
    BigInt rhs = 8 * Q * Q * Q - 36 * Q * Q + 9 * Q;
    CHECK(c.lhs == lhs);
    CHECK(c.rhs == rhs);
    CHECK(lhs >= rhs);
    CHECK(rhs > 0);
}

TEST_CASE("g0 final bound") {
    long long q = pow3(9), q0 = pow3(3);
    BoundCheck c = check_g0_final_bound(q, q0);
    CHECK(c.holds);
    CHECK(c.in_domain);
    BigInt Q = q;
    CHECK(c.lhs == 20 * (Q - 1) * Q * Q * Q * Q * Q);
    CHECK(c.rhs == (Q - 1) * Q * Q * Q * (Q * Q * Q + 1));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(check_b1_bound(9), InputError);       // not 3^(2n+1)
    CHECK_THROWS_AS(check_b1_bound(81), InputError);
    CHECK_THROWS_AS(check_b1_bound(5), InputError);
    // q0 must satisfy q = q0^a with a an odd prime
    CHECK_THROWS_AS(check_cgi_count_bound(pow3(9), pow3(1)), InputError);  // a = 9
    CHECK_THROWS_AS(check_cgi_count_bound(pow3(9), pow3(9)), InputError);  // a = 1
    CHECK_THROWS_AS(check_cgi_count_bound(pow3(9), pow3(2)), InputError);  // no power
    CHECK_THROWS_AS(check_g0_final_bound(pow3(3), pow3(2)), InputError);
}

TEST_CASE("q = 3 is evaluated but out of domain") {
    BoundCheck c = check_b1_bound(3);
    CHECK_FALSE(c.in_domain);
    // the inequality genuinely fails there, which is why it is flagged
    CHECK_FALSE(c.holds);
    BoundCheck r = check_r3_bound(3);
    CHECK_FALSE(r.in_domain);
}

TEST_CASE("sweep covers all families and holds in domain") {
    auto checks = cert_sweep(10);
    CHECK(!checks.empty());
    int with_q0 = 0;
    for (const auto& c : checks) {
        if (c.q0 > 0) ++with_q0;
        CHECK(c.q >= 27);
        CHECK(c.in_domain);
        CHECK(c.holds);
        CHECK(!c.formula.empty());
    }
    // two-parameter families appear: n = 1 gives q = 27 with q0 = 3,
    // n = 4 gives q = 3^9 with q0 in {3, 27}
    CHECK(with_q0 > 0);
}
