#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "depthlab/ngp.hpp"

using namespace depthlab;

TEST_CASE("parameters") {
    ReeParams p1 = ReeParams::from_n(1);
    CHECK(p1.q == 27);
    CHECK(p1.m == 3);
    CHECK(p1.c == 13);
    CHECK(p1.conductor == 156);
    CHECK(p1.num_classes == 34);
    CHECK(p1.group_order() == 27LL * 27 * 27 * 26);
    ReeParams p2 = ReeParams::from_n(2);
    CHECK(p2.q == 243);
    CHECK(p2.m == 9);
    CHECK(p2.c == 121);
    CHECK(p2.num_classes == 250);
}

TEST_CASE("table shape and class sizes") {
    for (int n : {1, 2}) {
        ReeParams p = ReeParams::from_n(n);
        NgpTable t = build_ngp_table(p);
        CHECK(t.class_names.size() == static_cast<std::size_t>(p.num_classes));
        CHECK(t.rows.size() == static_cast<std::size_t>(p.num_classes));
        for (const auto& row : t.rows) CHECK(row.size() == t.class_names.size());
        BigInt total = 0;
        for (const auto& s : t.class_sizes) total += s;
        CHECK(total == BigInt(p.group_order()));
        CHECK(t.class_names[0] == "1");
        // the trivial character heads the table
        for (const auto& v : t.rows[0]) {
            Cyclotomic c = ngp_value_to_cyclotomic(p, v);
            CHECK(c.rational_value() == Rational(1));
        }
    }
}

TEST_CASE("z12 arithmetic against the cyclotomic model") {
    ReeParams p = ReeParams::from_n(1);
    auto to_cyc = [&](const Z12& z) {
        return ngp_value_to_cyclotomic(p, NgpVal{z, 0});
    };
    // values carry a fixed /2 scaling, so the plain ring product picks up a 2
    Z12 x{2, 3, -1, 4}, y{-3, 1, 5, 2};
    CHECK(to_cyc(z12_mul(x, y)) == to_cyc(x) * to_cyc(y) * Rational(2));
    CHECK(to_cyc(x.conj()) == to_cyc(x).conj());
    CHECK(to_cyc(x + y) == to_cyc(x) + to_cyc(y));
}

TEST_CASE("value conjugation matches cyclotomic conjugation") {
    ReeParams p = ReeParams::from_n(1);
    NgpTable t = build_ngp_table(p);
    for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t k = 0; k < t.rows[r].size(); k += 7) {
            const NgpVal& v = t.rows[r][k];
            CHECK(ngp_value_to_cyclotomic(p, v.conj(p.c)) ==
                  ngp_value_to_cyclotomic(p, v).conj());
        }
    }
}

TEST_CASE("orthogonality at q = 27") {
    NgpTable t = build_ngp_table(ReeParams::from_n(1));
    auto checks = verify_ngp_orthogonality(t);
    REQUIRE(!checks.empty());
    for (const auto& c : checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("orthogonality detects a corrupted entry") {
    NgpTable t = build_ngp_table(ReeParams::from_n(1));
    t.rows[3][t.idx_j()].num.a += 2;
    auto checks = verify_ngp_orthogonality(t);
    bool failed = false;
    for (const auto& c : checks) failed = failed || !c.pass;
    CHECK(failed);
}

TEST_CASE("decompositions at q = 27") {
    DecompositionCert cert = verify_ngp_decompositions(ReeParams::from_n(1));
    CHECK(cert.pass);
    for (const auto& c : cert.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
    // all coefficients nonnegative; psi^G restricted back picks up psi twice
    // and misses Delta entirely (the depth-5 witness)
    REQUIRE(!cert.coeffs.empty());
    for (const auto& row : cert.coeffs)
        for (long long v : row) CHECK(v >= 0);
    CHECK(cert.coeffs[0][0] == 2);
    CHECK(cert.coeffs[0][1] == 0);
}

TEST_CASE("depth certificate gives 5") {
    for (int n : {1, 2}) {
        NgpDepthCert cert = ngp_depth_certificate(ReeParams::from_n(n));
        CHECK(cert.pass);
        CHECK(cert.depth == 5);
        CHECK(cert.max_distance == 2);
        CHECK(cert.m_one_g == 2);
        for (const auto& c : cert.checks) {
            INFO(c.name, ": ", c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("serial and parallel agree") {
    NgpTable t = build_ngp_table(ReeParams::from_n(1));
    auto a = verify_ngp_orthogonality(t, Exec::Serial);
    auto b = verify_ngp_orthogonality(t, Exec::Parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].pass == b[i].pass);
    }
}
