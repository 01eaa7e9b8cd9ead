#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "depthlab/character.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/group.hpp"

using namespace depthlab;

namespace {

Permutation cyc(int degree, const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
    return Permutation(std::move(img));
}

PermGroup s3() { return PermGroup(3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})}); }
PermGroup s4() { return PermGroup(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 1}})}); }
PermGroup a5() { return PermGroup(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})}); }

std::vector<long long> sorted_degrees(const CharacterTable& t) {
    std::vector<long long> out;
    for (std::size_t r = 0; r < t.num_classes(); ++r)
        out.push_back(static_cast<long long>(t.degree(r)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("S3 character table") {
    CharacterTable t = dixon_table(s3());
    REQUIRE(t.num_classes() == 3);
    t.validate();
    CHECK(sorted_degrees(t) == std::vector<long long>{1, 1, 2});
    // the table of S3 is rational
    for (const auto& row : t.irreducibles)
        for (const auto& v : row) CHECK(v.is_rational());
}

TEST_CASE("S4 character table") {
    CharacterTable t = dixon_table(s4());
    REQUIRE(t.num_classes() == 5);
    t.validate();
    CHECK(sorted_degrees(t) == std::vector<long long>{1, 1, 2, 3, 3});
}

TEST_CASE("A5 character table") {
    CharacterTable t = dixon_table(a5());
    REQUIRE(t.num_classes() == 5);
    t.validate();
    CHECK(sorted_degrees(t) == std::vector<long long>{1, 3, 3, 4, 5});
    // the degree 3 characters are irrational on the 5-cycles
    bool irrational = false;
    for (const auto& row : t.irreducibles)
        for (const auto& v : row) irrational = irrational || !v.is_rational();
    CHECK(irrational);
}

TEST_CASE("cyclic group gets linear characters with roots of unity") {
    PermGroup c5(5, {cyc(5, {{0, 1, 2, 3, 4}})});
    CharacterTable t = dixon_table(c5);
    REQUIRE(t.num_classes() == 5);
    t.validate();
    CHECK(t.conductor % 5 == 0);
    for (std::size_t r = 0; r < 5; ++r) CHECK(t.degree(r) == Rational(1));
}

TEST_CASE("validate rejects a corrupted table") {
    CharacterTable t = dixon_table(s3());
    t.irreducibles[1][1] += Cyclotomic(t.conductor, Rational(1));
    CHECK_THROWS_AS(t.validate(), InconsistencyError);
}

TEST_CASE("class fusion is consistent with element orders") {
    PermGroup g = s4();
    CharacterTable tg = dixon_table(g);
    SubgroupHandle h(&g, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})});
    PermGroup hg = h.as_group();
    CharacterTable th = dixon_table(hg);
    ClassFusion fus = class_fusion(g, tg, h, hg, th);
    REQUIRE(fus.map.size() == th.num_classes());
    for (std::size_t k = 0; k < fus.map.size(); ++k)
        CHECK(th.classes[k].rep_order == tg.classes[fus.map[k]].rep_order);
    // fused class sizes add up: every H class lands somewhere
    for (std::size_t k = 0; k < fus.map.size(); ++k) CHECK(fus.map[k] < tg.num_classes());
}

TEST_CASE("Frobenius reciprocity") {
    PermGroup g = a5();
    CharacterTable tg = dixon_table(g);
    SubgroupHandle h(&g, {cyc(5, {{0, 1, 2, 3, 4}})});
    PermGroup hg = h.as_group();
    CharacterTable th = dixon_table(hg);
    ClassFusion fus = class_fusion(g, tg, h, hg, th);
    MultiplicityMatrix m = induce_restrict(th, tg, fus);
    REQUIRE(m.m.size() == th.num_classes());
    REQUIRE(m.m[0].size() == tg.num_classes());
    // <psi, chi|_H> computed directly matches the matrix
    for (std::size_t r = 0; r < th.num_classes(); ++r) {
        for (std::size_t c = 0; c < tg.num_classes(); ++c) {
            auto res = restrict_character(tg.irreducibles[c], fus);
            std::vector<Cyclotomic> emb_res, emb_psi;
            int big = lcm_int(th.conductor, tg.conductor);
            for (const auto& v : res) emb_res.push_back(v.embedded(big));
            for (const auto& v : th.irreducibles[r]) emb_psi.push_back(v.embedded(big));
            Cyclotomic ip = inner_product(emb_psi, emb_res, th.classes, th.group_order);
            CHECK(ip.rational_value() == Rational(m.m[r][c]));
        }
    }
    // sum over rows of deg(psi) * m[psi][chi] equals deg(chi)
    for (std::size_t c = 0; c < tg.num_classes(); ++c) {
        Rational total(0);
        for (std::size_t r = 0; r < th.num_classes(); ++r)
            total += th.degree(r) * Rational(m.m[r][c]);
        CHECK(total == tg.degree(c));
    }
}

TEST_CASE("restriction of the trivial character") {
    PermGroup g = s4();
    CharacterTable tg = dixon_table(g);
    SubgroupHandle h(&g, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
    PermGroup hg = h.as_group();
    CharacterTable th = dixon_table(hg);
    ClassFusion fus = class_fusion(g, tg, h, hg, th);
    // find the trivial row of G: degree 1, constant 1
    std::size_t triv = tg.num_classes();
    for (std::size_t r = 0; r < tg.num_classes(); ++r) {
        bool ok = true;
        for (const auto& v : tg.irreducibles[r])
            ok = ok && v.is_rational() && v.rational_value() == Rational(1);
        if (ok) triv = r;
    }
    REQUIRE(triv < tg.num_classes());
    auto res = restrict_character(tg.irreducibles[triv], fus);
    for (const auto& v : res) CHECK(v.rational_value() == Rational(1));
}

TEST_CASE("table json round trip") {
    CharacterTable t = dixon_table(s4());
    std::string text = table_to_json(t);
    CharacterTable t2 = table_from_json(text);
    CHECK(t2.group_order == t.group_order);
    CHECK(t2.conductor == t.conductor);
    REQUIRE(t2.num_classes() == t.num_classes());
    for (std::size_t r = 0; r < t.num_classes(); ++r)
        for (std::size_t c = 0; c < t.num_classes(); ++c)
            CHECK(t2.irreducibles[r][c] == t.irreducibles[r][c]);
    // import re-validates
    std::string bad = text;
    auto pos = bad.find("\"3\"");
    if (pos != std::string::npos) bad.replace(pos, 3, "\"4\"");
    if (bad != text) CHECK_THROWS(table_from_json(bad));
}
