#include "depthlab/ree3.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "depthlab/errors.hpp"

namespace depthlab {

namespace {

// GF(8) with modulus x^3 + x + 1; elements are bit-encoded polynomials.
int gf8_mul(int a, int b) {
    int r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        if (a & 8) a ^= 0b1011;
        b >>= 1;
    }
    return r;
}

int gf8_inv(int a) {
    for (int b = 1; b < 8; ++b)
        if (gf8_mul(a, b) == 1) return b;
    throw InputError("gf8: inverse of zero");
}

constexpr Point INF = 8;

Permutation make_perm(int (*f)(int)) {
    std::vector<Point> img(9);
    for (int p = 0; p < 9; ++p) img[p] = static_cast<Point>(f(p));
    return Permutation(std::move(img));
}

bool subgroup_subset(const SubgroupHandle& a, const SubgroupHandle& b) {
    return std::includes(b.elements().begin(), b.elements().end(), a.elements().begin(),
                         a.elements().end());
}

bool is_power_of(std::size_t n, std::size_t p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

// Sylow p-subgroup of expected order, grown from p-elements.
SubgroupHandle find_sylow(const PermGroup& g, std::size_t p, std::size_t target) {
    std::vector<Permutation> pelems;
    for (const auto& x : g.elements())
        if (is_power_of(x.order(), p)) pelems.push_back(x);
    // start from an element of maximal p-power order
    Permutation start = Permutation::identity(g.degree());
    for (const auto& x : pelems)
        if (static_cast<std::size_t>(x.order()) > static_cast<std::size_t>(start.order()))
            start = x;
    std::vector<Permutation> seed{start};
    auto cur = closure(seed, materialization_cap());
    while (cur.size() < target) {
        bool grew = false;
        for (const auto& y : pelems) {
            if (std::binary_search(cur.begin(), cur.end(), y)) continue;
            auto trial_seed = seed;
            trial_seed.push_back(y);
            auto trial = closure(trial_seed, materialization_cap());
            if (trial.size() <= target && is_power_of(trial.size(), p)) {
                seed = std::move(trial_seed);
                cur = std::move(trial);
                grew = true;
                break;
            }
        }
        if (!grew) throw InconsistencyError("sylow subgroup growth stalled");
    }
    return SubgroupHandle::from_elements(&g, std::move(cur));
}

SubgroupHandle span_of(const PermGroup& g, std::vector<Permutation> seed) {
    return SubgroupHandle::from_elements(&g, closure(seed, materialization_cap()));
}

// Degree-28 permutation action on the right cosets of k.
struct CosetAction {
    std::vector<Permutation> reps;                  // coset minima
    std::map<Permutation, std::size_t> index;       // coset minimum -> point
    std::vector<std::vector<std::size_t>> images;   // per group element
};

CosetAction coset_action(const PermGroup& g, const SubgroupHandle& k) {
    CosetAction act;
    act.reps = right_transversal(g, k);
    auto coset_min = [&](const Permutation& t) {
        Permutation best = k.elements().front() * t;
        for (const auto& kk : k.elements()) {
            Permutation cand = kk * t;
            if (cand < best) best = cand;
        }
        return best;
    };
    for (std::size_t i = 0; i < act.reps.size(); ++i) act.index[act.reps[i]] = i;
    const auto& els = g.elements();
    act.images.resize(els.size());
    for (std::size_t e = 0; e < els.size(); ++e) {
        act.images[e].resize(act.reps.size());
        for (std::size_t i = 0; i < act.reps.size(); ++i)
            act.images[e][i] = act.index.at(coset_min(act.reps[i] * els[e]));
    }
    return act;
}

}  // namespace

R3Group build_r3(std::uint64_t) {
    auto add_one = make_perm(+[](int p) { return p == INF ? (int)INF : p ^ 1; });
    auto scale = make_perm(+[](int p) { return p == INF ? (int)INF : gf8_mul(2, p); });
    auto invert = make_perm(+[](int p) {
        if (p == INF) return 0;
        if (p == 0) return (int)INF;
        return gf8_inv(p);
    });
    auto frob = make_perm(+[](int p) { return p == INF ? (int)INF : gf8_mul(p, p); });

    R3Group r3;
    r3.group = std::make_shared<PermGroup>(9, std::vector<Permutation>{add_one, scale, invert, frob});
    const PermGroup& g = *r3.group;
    if (g.order() != 1512) throw InconsistencyError("PGammaL(2,8) construction has wrong order");

    SubgroupHandle p0 = find_sylow(g, 3, 27);
    SubgroupHandle np0 = normalizer(g, p0);

    // S from the involutions in an involution centralizer
    Permutation invol = Permutation::identity(9);
    for (const auto& x : g.elements())
        if (x.order() == 2) {
            invol = x;
            break;
        }
    SubgroupHandle ci = centralizer_of_element(g, invol);
    std::vector<Permutation> invs;
    for (const auto& x : ci.elements())
        if (x.order() <= 2) invs.push_back(x);
    SubgroupHandle s = span_of(g, invs);
    SubgroupHandle ns = normalizer(g, s);

    SubgroupHandle m0 = find_sylow(g, 7, 7);
    SubgroupHandle nm0 = normalizer(g, m0);

    SubgroupHandle hprime = derived_subgroup(g);

    r3.maximal_reps = {np0, ns, nm0, hprime};
    return r3;
}

CheckReport verify_r3_structure(const R3Group& r3, std::uint64_t seed) {
    const PermGroup& g = *r3.group;
    CheckReport rep;
    const auto& els = g.elements();

    rep.add({"order-1512", g.order() == 1512, "order " + std::to_string(g.order())});

    // ---- Sylow 3 structure ----
    const SubgroupHandle& np0 = r3.maximal_reps[0];
    SubgroupHandle p0 = find_sylow(g, 3, 27);
    rep.add({"sylow3-order-27", p0.order() == 27, ""});

    std::vector<SubgroupHandle> syl3;
    for (const auto& t : right_transversal(g, np0)) syl3.push_back(conjugate(p0, t));
    {
        bool ti = syl3.size() == 28;
        for (std::size_t i = 0; i < syl3.size() && ti; ++i)
            for (std::size_t j = i + 1; j < syl3.size() && ti; ++j)
                if (syl3[i] != syl3[j] && intersect(syl3[i], syl3[j]).order() != 1) ti = false;
        rep.add({"sylow3-TI", ti, std::to_string(syl3.size()) + " conjugates"});
    }

    // Z(P0) = P0' of order 3
    PermGroup p0g = p0.as_group();
    SubgroupHandle zp0 = centralizer(p0g, SubgroupHandle::whole(&p0g));
    SubgroupHandle dp0 = derived_subgroup(p0g);
    rep.add({"center-equals-derived-C3",
             zp0.order() == 3 && zp0.elements() == dp0.elements(), ""});

    rep.add({"normalizer-P0-order-54", np0.order() == 54, "order " + std::to_string(np0.order())});
    {
        // N(P0) = P0 x| <i>, C_{P0}(i) = C3 meeting Z(P0) trivially
        bool found = false, ok = false;
        for (const auto& i : np0.elements()) {
            if (i.order() != 2) continue;
            found = true;
            std::vector<Permutation> cent;
            for (const auto& p : p0.elements())
                if (p * i == i * p) cent.push_back(p);
            std::vector<Permutation> common;
            std::set_intersection(cent.begin(), cent.end(), zp0.elements().begin(),
                                  zp0.elements().end(), std::back_inserter(common));
            ok = cent.size() == 3 && common.size() == 1;
            break;
        }
        rep.add({"involution-action-on-P0", found && ok, ""});
    }
    {
        // P0^1 elementary abelian of order 9; outside it, order 9 with cube central
        std::vector<Permutation> small;
        for (const auto& p : p0.elements())
            if (p.order() <= 3) small.push_back(p);
        SubgroupHandle p01 = span_of(g, small);
        bool ok = p01.order() == 9;
        for (const auto& a : p01.elements())
            for (const auto& b : p01.elements())
                if (!(a * b == b * a)) ok = false;
        for (const auto& p : p0.elements()) {
            if (p01.contains(p)) continue;
            if (p.order() != 9) ok = false;
            Permutation cube = p * p * p;
            if (!zp0.contains(cube) || cube.is_identity()) ok = false;
        }
        rep.add({"P0-exponent-structure", ok, ""});
    }

    // ---- Sylow 2 structure ----
    const SubgroupHandle& ns = r3.maximal_reps[1];
    SubgroupHandle s = find_sylow(g, 2, 8);
    {
        bool ab = true;
        for (const auto& a : s.elements())
            if (a.order() > 2) ab = false;
        rep.add({"sylow2-elementary-abelian-8", s.order() == 8 && ab, ""});
    }
    rep.add({"normalizer-S-order-168", ns.order() == 168, "order " + std::to_string(ns.order())});
    rep.add({"centralizer-S-is-S", centralizer(g, s) == s, ""});
    {
        // 2-subgroups of equal order form single conjugacy classes
        int invol_classes = 0;
        bool order4_elements = false;
        for (const auto& c : g.conjugacy_classes()) {
            if (c.element_order == 2) ++invol_classes;
            if (c.element_order == 4 || c.element_order == 8) order4_elements = true;
        }
        std::set<std::vector<Permutation>> fours;
        for (const auto& a : els) {
            if (a.order() != 2) continue;
            for (const auto& b : els) {
                if (b.order() != 2 || a == b || !(a * b == b * a)) continue;
                std::vector<Permutation> v{Permutation::identity(9), a, b, a * b};
                std::sort(v.begin(), v.end());
                fours.insert(std::move(v));
            }
        }
        auto orbit_size = [&](std::vector<Permutation> start) {
            std::set<std::vector<Permutation>> seen{start};
            std::vector<std::vector<Permutation>> queue{start};
            while (!queue.empty()) {
                auto cur = std::move(queue.back());
                queue.pop_back();
                for (const auto& gen : g.generators()) {
                    std::vector<Permutation> img;
                    for (const auto& x : cur) img.push_back(x.conjugated_by(gen));
                    std::sort(img.begin(), img.end());
                    if (seen.insert(img).second) queue.push_back(std::move(img));
                }
            }
            return seen.size();
        };
        bool fours_conj = !fours.empty() && orbit_size(*fours.begin()) == fours.size();
        std::size_t num_syl2 = orbit_size(s.elements());
        rep.add({"2-subgroups-conjugate-by-order",
                 invol_classes == 1 && !order4_elements && fours_conj &&
                     num_syl2 == g.order() / ns.order(),
                 ""});
    }
    {
        // C_H(i) = <i> x A4, inside the normalizer of some Sylow 2
        Permutation invol = Permutation::identity(9);
        for (const auto& x : els)
            if (x.order() == 2) {
                invol = x;
                break;
            }
        SubgroupHandle ci = centralizer_of_element(g, invol);
        bool ok = ci.order() == 24;
        std::vector<Permutation> threes;
        for (const auto& x : ci.elements())
            if (x.order() == 3) threes.push_back(x);
        SubgroupHandle k = span_of(g, threes);
        ok = ok && k.order() == 12 && !k.contains(invol);
        if (ok) {
            PermGroup kg = k.as_group();
            ok = centralizer(kg, SubgroupHandle::whole(&kg)).order() == 1 &&
                 derived_subgroup(kg).order() == 4;
        }
        bool inside = false;
        for (const auto& t : right_transversal(g, ns))
            if (subgroup_subset(ci, conjugate(ns, t))) inside = true;
        rep.add({"involution-centralizer-i-times-A4", ok, ""});
        rep.add({"involution-centralizer-in-NS", inside, ""});
    }

    // ---- Sylow 7 structure ----
    const SubgroupHandle& nm0 = r3.maximal_reps[2];
    SubgroupHandle m0 = find_sylow(g, 7, 7);
    {
        std::vector<SubgroupHandle> syl7;
        for (const auto& t : right_transversal(g, nm0)) syl7.push_back(conjugate(m0, t));
        bool ti = syl7.size() == 36;
        for (std::size_t i = 0; i < syl7.size() && ti; ++i)
            for (std::size_t j = i + 1; j < syl7.size() && ti; ++j)
                if (syl7[i] != syl7[j] && intersect(syl7[i], syl7[j]).order() != 1) ti = false;
        rep.add({"sylow7-TI", ti, ""});
    }
    rep.add({"normalizer-M0-order-42", nm0.order() == 42, "order " + std::to_string(nm0.order())});
    {
        // Frobenius with kernel M0 and cyclic complement of order 6
        bool frob = false;
        for (const auto& y : nm0.elements()) {
            if (y.order() != 6) continue;
            SubgroupHandle c6 = span_of(g, {y});
            if (intersect(c6, m0).order() != 1) continue;
            bool fixed_point_free = true;
            for (const auto& m : m0.elements()) {
                if (m.is_identity()) continue;
                std::size_t cent = 0;
                for (const auto& x : nm0.elements())
                    if (x * m == m * x) ++cent;
                if (cent != 7) fixed_point_free = false;
            }
            frob = fixed_point_free;
            break;
        }
        rep.add({"frobenius-normalizer-M0", frob, ""});
    }

    // ---- derived subgroup and the maximal classes ----
    const SubgroupHandle& hprime = r3.maximal_reps[3];
    rep.add({"derived-subgroup-504", hprime.order() == 504, ""});
    rep.add({"derived-subgroup-simple", hprime.as_group().is_simple(), ""});

    {
        const std::uint64_t expected[4] = {54, 168, 42, 504};
        bool orders_ok = true, maximal_ok = true;
        for (int i = 0; i < 4; ++i) {
            const SubgroupHandle& k = r3.maximal_reps[i];
            if (k.order() != expected[i]) orders_ok = false;
            for (const auto& t : right_transversal(g, k)) {
                if (k.contains(t)) continue;
                auto gens = k.generators();
                gens.push_back(t);
                if (closure(gens, materialization_cap()).size() != g.order()) maximal_ok = false;
            }
        }
        rep.add({"maximal-orders-54-168-42-504", orders_ok, ""});
        rep.add({"candidates-are-maximal", maximal_ok, ""});

        // random 2-generated subgroups all land under the four classes
        std::vector<SubgroupHandle> maximal_conjugates;
        for (int i = 0; i < 4; ++i)
            for (const auto& t : right_transversal(g, normalizer(g, r3.maximal_reps[i])))
                maximal_conjugates.push_back(conjugate(r3.maximal_reps[i], t));
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> dist(0, els.size() - 1);
        bool complete = true;
        for (int trial = 0; trial < 40 && complete; ++trial) {
            SubgroupHandle m = span_of(g, {els[dist(rng)], els[dist(rng)]});
            if (m.order() == g.order()) continue;
            bool covered = false;
            for (const auto& k : maximal_conjugates)
                if (subgroup_subset(m, k)) {
                    covered = true;
                    break;
                }
            if (!covered) complete = false;
        }
        rep.add({"maximal-classes-cover-samples", complete, ""});
    }

    {
        // the degree-9 point stabilizer is conjugate to N(S)
        std::vector<Permutation> stab;
        for (const auto& x : els)
            if (x(INF) == INF) stab.push_back(x);
        SubgroupHandle ginf = SubgroupHandle::from_elements(&g, std::move(stab));
        bool conj_found = false;
        for (const auto& t : els)
            if (conjugate(ns, t) == ginf) {
                conj_found = true;
                break;
            }
        rep.add({"point-stabilizer-conjugate-to-NS", ginf.order() == 168 && conj_found, ""});
    }

    {
        // degree-28 action on the cosets of N(P0)
        CosetAction act = coset_action(g, np0);
        const std::size_t n = act.reps.size();
        bool deg_ok = n == 28;

        // 2-transitivity via the orbit of an ordered pair
        std::set<std::pair<std::size_t, std::size_t>> orbit{{0, 1}};
        std::vector<std::pair<std::size_t, std::size_t>> queue{{0, 1}};
        std::vector<std::size_t> gen_ids;
        for (const auto& gen : g.generators()) gen_ids.push_back(g.element_index(gen));
        while (!queue.empty()) {
            auto [a, b] = queue.back();
            queue.pop_back();
            for (std::size_t e : gen_ids) {
                std::pair<std::size_t, std::size_t> img{act.images[e][a], act.images[e][b]};
                if (orbit.insert(img).second) queue.push_back(img);
            }
        }
        bool two_trans = orbit.size() == n * (n - 1);

        // 3-point stabilizer orders via fixed-point bitmasks
        std::vector<std::uint32_t> masks(els.size(), 0);
        for (std::size_t e = 0; e < els.size(); ++e)
            for (std::size_t i = 0; i < n; ++i)
                if (act.images[e][i] == i) masks[e] |= (1u << i);
        std::size_t max_stab = 0, min_stab = g.order();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    std::uint32_t want = (1u << i) | (1u << j) | (1u << k);
                    std::size_t cnt = 0;
                    for (std::size_t e = 0; e < els.size(); ++e)
                        if ((masks[e] & want) == want) ++cnt;
                    max_stab = std::max(max_stab, cnt);
                    min_stab = std::min(min_stab, cnt);
                }
        rep.add({"degree-28-two-transitive", deg_ok && two_trans, ""});
        rep.add({"three-point-stabilizers-1-and-2", min_stab == 1 && max_stab == 2,
                 "min " + std::to_string(min_stab) + " max " + std::to_string(max_stab)});
    }
    return rep;
}

std::vector<SurveyEntry> r3_depth_survey(const R3Group& r3) {
    const PermGroup& g = *r3.group;
    const char* names[4] = {"N(P0)", "N(S)", "N(M0)", "H'"};
    std::vector<SurveyEntry> out;
    for (int i = 0; i < 4; ++i) {
        SurveyEntry e;
        e.name = names[i];
        e.order = r3.maximal_reps[i].order();
        e.comb = comb_depth(g, r3.maximal_reps[i]);
        e.ord = ord_depth(g, r3.maximal_reps[i]);
        e.core = core_bound(g, r3.maximal_reps[i]);
        if (!e.comb.dc || !e.ord.d) throw InconsistencyError("depth cap exceeded in survey");
        bool normal = conjugate(r3.maximal_reps[i], g.generators().front()) == r3.maximal_reps[i];
        for (const auto& gen : g.generators())
            normal = normal && conjugate(r3.maximal_reps[i], gen) == r3.maximal_reps[i];
        if (*e.ord.d > *e.comb.dc) throw InconsistencyError("ordinary depth exceeds combinatorial");
        if ((*e.comb.dc <= 2) != normal || (*e.ord.d <= 2) != normal)
            throw InconsistencyError("depth-2 characterization violated");
        if (*e.ord.d > e.core.bound) throw InconsistencyError("core bound violated");
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace depthlab
