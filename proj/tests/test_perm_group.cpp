#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <set>

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

PermGroup s4() { return PermGroup(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 1}})}); }
PermGroup a5() { return PermGroup(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})}); }

}  // namespace

TEST_CASE("permutation basics") {
    Permutation p = cyc(5, {{0, 1, 2, 3, 4}});
    CHECK(p.order() == 5);
    CHECK(p.inverse() * p == Permutation::identity(5));
    CHECK((p * p)(0) == 2);
    Permutation t = cyc(5, {{0, 1}});
    CHECK(p.conjugated_by(t) == t.inverse() * p * t);
    CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), InputError);
}

TEST_CASE("group order via stabilizer chain") {
    CHECK(s4().order() == 24);
    CHECK(a5().order() == 60);
    PermGroup trivial(3, {});
    CHECK(trivial.order() == 1);
    PermGroup pgl(9, {cyc(9, {{0, 1, 2, 3, 4, 5, 6, 7}})});
    CHECK(pgl.order() == 8);
}

TEST_CASE("membership and elements") {
    PermGroup g = s4();
    CHECK(g.contains(cyc(4, {{0, 2}, {1, 3}})));
    CHECK(g.elements().size() == 24);
    CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
    for (const auto& x : g.elements()) CHECK(g.element_index(x) != PermGroup::npos);
}

TEST_CASE("conjugacy classes of S4") {
    PermGroup g = s4();
    const auto& cls = g.conjugacy_classes();
    REQUIRE(cls.size() == 5);
    CHECK(cls[0].representative.is_identity());
    std::uint64_t total = 0;
    for (const auto& c : cls) {
        total += c.size;
        CHECK(c.size * c.centralizer_order == g.order());
    }
    CHECK(total == g.order());
}

TEST_CASE("subgroup handles and Lagrange") {
    PermGroup g = s4();
    SubgroupHandle h(&g, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})});
    CHECK(h.order() == 8);
    CHECK(g.order() % h.order() == 0);
    auto reps = right_transversal(g, h);
    CHECK(reps.size() == 3);
    CHECK(reps.front().is_identity());
    // transversal covers the group without overlap
    std::set<Permutation> seen;
    for (const auto& t : reps)
        for (const auto& x : h.elements()) CHECK(seen.insert(x * t).second);
    CHECK(seen.size() == g.order());
}

TEST_CASE("intersection, conjugation, normalizer") {
    PermGroup g = s4();
    SubgroupHandle d8(&g, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})});
    SubgroupHandle d8c = conjugate(d8, cyc(4, {{0, 1}}));
    CHECK(d8c.order() == 8);
    SubgroupHandle meet = intersect(d8, d8c);
    CHECK(meet.order() == 4);
    CHECK(normalizer(g, d8) == d8);
    SubgroupHandle v4(&g, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
    CHECK(normalizer(g, v4).order() == 24);
}

TEST_CASE("centralizers") {
    PermGroup g = s4();
    CHECK(centralizer_of_element(g, cyc(4, {{0, 1, 2, 3}})).order() == 4);
    SubgroupHandle v4(&g, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
    CHECK(centralizer(g, v4) == v4);
}

TEST_CASE("core and derived subgroup") {
    PermGroup g = s4();
    SubgroupHandle d8(&g, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})});
    CHECK(core(g, d8).order() == 4);
    SubgroupHandle c2(&g, {cyc(4, {{0, 1}})});
    CHECK(core(g, c2).order() == 1);
    CHECK(derived_subgroup(g).order() == 12);
    CHECK(a5().is_simple());
    CHECK_FALSE(s4().is_simple());
}

TEST_CASE("closure respects the cap") {
    std::vector<Permutation> gens{cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})};
    CHECK(closure(gens, 100).size() == 60);
    CHECK_THROWS_AS(closure(gens, 30), CapacityError);
}

TEST_CASE("group json round trip") {
    PermGroup g = s4();
    std::string text = group_to_json(g);
    // write to a temp file and re-read
    std::string path = "/tmp/depthlab_test_group.json";
    {
        FILE* f = std::fopen(path.c_str(), "w");
        std::fwrite(text.data(), 1, text.size(), f);
        std::fclose(f);
    }
    PermGroup g2 = group_from_json_file(path);
    CHECK(g2.order() == g.order());
    CHECK(g2.degree() == g.degree());
}
