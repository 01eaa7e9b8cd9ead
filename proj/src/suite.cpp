#include "depthlab/suite.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

#include "depthlab/certificates.hpp"
#include "depthlab/depth.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/ngp.hpp"
#include "depthlab/ree3.hpp"
#include "depthlab/ree_sylow.hpp"

namespace depthlab {

namespace {

using json = nlohmann::ordered_json;

Permutation cycles(int degree, const std::vector<std::vector<Point>>& cyc) {
    std::vector<Point> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
    for (const auto& c : cyc)
        for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
    return Permutation(std::move(img));
}

void add_entries(std::vector<CorpusEntry>& out, std::shared_ptr<PermGroup> g,
                 const std::string& gname,
                 const std::vector<std::pair<std::string, std::vector<Permutation>>>& subs) {
    for (const auto& [sname, gens] : subs)
        out.push_back({gname + "/" + sname, g, SubgroupHandle(g.get(), gens)});
}

json report_to_json(const CheckReport& r) {
    json out = json::object();
    out["pass"] = r.pass;
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out["checks"] = checks;
    return out;
}

json checks_to_json(const std::vector<CheckResult>& cs, bool& pass) {
    json arr = json::array();
    for (const auto& c : cs) {
        pass = pass && c.pass;
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return arr;
}

}  // namespace

std::vector<CorpusEntry> standard_corpus() {
    std::vector<CorpusEntry> out;

    auto s4 = std::make_shared<PermGroup>(
        4, std::vector<Permutation>{cycles(4, {{0, 1, 2, 3}}), cycles(4, {{0, 1}})});
    add_entries(out, s4, "S4",
                {{"A4", {cycles(4, {{0, 1, 2}}), cycles(4, {{1, 2, 3}})}},
                 {"D8", {cycles(4, {{0, 1, 2, 3}}), cycles(4, {{0, 2}})}},
                 {"C4", {cycles(4, {{0, 1, 2, 3}})}},
                 {"V4", {cycles(4, {{0, 1}, {2, 3}}), cycles(4, {{0, 2}, {1, 3}})}},
                 {"S3", {cycles(4, {{0, 1, 2}}), cycles(4, {{0, 1}})}},
                 {"C3", {cycles(4, {{0, 1, 2}})}},
                 {"C2", {cycles(4, {{0, 1}})}},
                 {"C2d", {cycles(4, {{0, 1}, {2, 3}})}},
                 {"1", {}}});

    auto d8 = std::make_shared<PermGroup>(
        4, std::vector<Permutation>{cycles(4, {{0, 1, 2, 3}}), cycles(4, {{1, 3}})});
    add_entries(out, d8, "D8",
                {{"C4", {cycles(4, {{0, 1, 2, 3}})}},
                 {"V4", {cycles(4, {{0, 2}, {1, 3}}), cycles(4, {{1, 3}})}},
                 {"Z", {cycles(4, {{0, 2}, {1, 3}})}},
                 {"C2s", {cycles(4, {{1, 3}})}},
                 {"1", {}}});

    auto a5 = std::make_shared<PermGroup>(
        5, std::vector<Permutation>{cycles(5, {{0, 1, 2, 3, 4}}), cycles(5, {{0, 1, 2}})});
    add_entries(out, a5, "A5",
                {{"A4", {cycles(5, {{0, 1, 2}}), cycles(5, {{0, 1}, {2, 3}})}},
                 {"D10", {cycles(5, {{0, 1, 2, 3, 4}}), cycles(5, {{1, 4}, {2, 3}})}},
                 {"S3", {cycles(5, {{0, 1, 2}}), cycles(5, {{0, 1}, {3, 4}})}},
                 {"C5", {cycles(5, {{0, 1, 2, 3, 4}})}},
                 {"V4", {cycles(5, {{0, 1}, {2, 3}}), cycles(5, {{0, 2}, {1, 3}})}},
                 {"C3", {cycles(5, {{0, 1, 2}})}},
                 {"C2", {cycles(5, {{0, 1}, {2, 3}})}},
                 {"1", {}}});

    R3Group r3 = build_r3();
    const char* names[4] = {"N(P0)", "N(S)", "N(M0)", "H'"};
    for (int i = 0; i < 4; ++i)
        out.push_back({std::string("PGammaL28/") + names[i], r3.group, r3.maximal_reps[i]});
    return out;
}

SuiteResult run_suite(std::uint64_t seed) {
    json root = json::object();
    root["seed"] = seed;
    bool pass = true;
    json sections = json::object();

    {
        json sec = json::object();
        json entries = json::array();
        for (const auto& e : standard_corpus()) {
            bool normal = true;
            for (const auto& gen : e.group->generators())
                normal = normal && conjugate(e.subgroup, gen) == e.subgroup;
            DepthReport comb = comb_depth(*e.group, e.subgroup);
            DepthReport od = ord_depth(*e.group, e.subgroup);
            CoreBoundResult cb = core_bound(*e.group, e.subgroup);
            bool ok = comb.dc && od.d && *od.d <= *comb.dc && ((*comb.dc <= 2) == normal) &&
                      ((*od.d <= 2) == normal) && *od.d <= cb.bound;
            pass = pass && ok;
            entries.push_back({{"name", e.name},
                               {"group_order", e.group->order()},
                               {"subgroup_order", e.subgroup.order()},
                               {"dc", comb.dc ? json(*comb.dc) : json(nullptr)},
                               {"d", od.d ? json(*od.d) : json(nullptr)},
                               {"core_m", cb.m},
                               {"core_bound", cb.bound},
                               {"disjoint_conjugate", cb.disjoint_conjugate_d3},
                               {"invariants", ok}});
        }
        sec["entries"] = entries;
        sections["depth_corpus"] = sec;
    }

    {
        json sec = json::object();
        for (int n : {1, 2}) {
            bool full = n == 1;
            std::size_t samples = 100000;
            CheckReport all;
            for (const auto& r :
                 {verify_p_structure(n, full, seed, full ? 100000 : 20000),
                  verify_closed_forms(n, seed, samples), verify_derived_centralizer(n, seed),
                  verify_w_orbits(n, seed)})
                for (const auto& c : r.checks) all.add(c);
            pass = pass && all.pass;
            sec["n" + std::to_string(n)] = report_to_json(all);
        }
        sections["ree_sylow"] = sec;
    }

    {
        json sec = json::object();
        for (int n : {1, 2}) {
            json part = json::object();
            bool part_pass = true;
            ReeParams params = ReeParams::from_n(n);
            NgpTable table = build_ngp_table(params);
            part["orthogonality"] = checks_to_json(verify_ngp_orthogonality(table), part_pass);
            DecompositionCert dec = verify_ngp_decompositions(params);
            part_pass = part_pass && dec.pass;
            part["decompositions"] = checks_to_json(dec.checks, part_pass);
            NgpDepthCert cert = ngp_depth_certificate(params);
            part_pass = part_pass && cert.pass && cert.depth == 5;
            part["depth"] = {{"d", cert.depth},
                             {"max_distance", cert.max_distance},
                             {"m_one_g", cert.m_one_g}};
            part["pass"] = part_pass;
            pass = pass && part_pass;
            sec["n" + std::to_string(n)] = part;
        }
        sections["ngp"] = sec;
    }

    {
        R3Group r3 = build_r3(seed);
        CheckReport rep = verify_r3_structure(r3, seed);
        pass = pass && rep.pass;
        sections["ree3"] = report_to_json(rep);
    }

    {
        json sec = json::object();
        json entries = json::array();
        std::map<std::string, std::map<long long, BigInt>> margins;
        bool certs_ok = true;
        for (const auto& c : cert_sweep(10)) {
            certs_ok = certs_ok && c.holds && c.in_domain;
            BigInt margin = (c.name == "b1" || c.name == "ngm" || c.name == "cgi")
                                ? c.lhs - c.rhs
                                : c.rhs - c.lhs;
            auto it = margins[c.name].find(c.q);
            if (it == margins[c.name].end() || margin < it->second) margins[c.name][c.q] = margin;
            entries.push_back({{"name", c.name},
                               {"q", c.q},
                               {"q0", c.q0},
                               {"holds", c.holds},
                               {"margin", margin.str()}});
        }
        // q = 3 rows: evaluated, flagged, never asserted
        for (const auto& c : {check_b1_bound(3), check_ngm_bound(3), check_r3_bound(3)})
            entries.push_back({{"name", c.name},
                               {"q", c.q},
                               {"out_of_domain", !c.in_domain},
                               {"evaluated", c.lhs.str()}});
        bool monotone = true;
        for (const auto& [name, per_q] : margins) {
            const BigInt* prev = nullptr;
            for (const auto& [q, margin] : per_q) {
                if (prev && margin < *prev) monotone = false;
                prev = &margin;
            }
        }
        sec["entries"] = entries;
        sec["monotone_margins"] = monotone;
        sec["pass"] = certs_ok && monotone;
        pass = pass && certs_ok && monotone;
        sections["certificates"] = sec;
    }

    root["sections"] = sections;
    root["pass"] = pass;
    SuiteResult res;
    res.json = root.dump(2) + "\n";
    res.pass = pass;
    return res;
}

}  // namespace depthlab
