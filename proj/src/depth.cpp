#include "depthlab/depth.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "depthlab/errors.hpp"

namespace depthlab {

namespace {

bool is_normal(const PermGroup& g, const SubgroupHandle& h) {
    for (const auto& x : g.generators())
        if (conjugate(h, x) != h) return false;
    return true;
}

std::uint64_t product_size(const SubgroupHandle& a, const SubgroupHandle& b) {
    return a.order() * b.order() / intersect(a, b).order();
}

bool depth_one(const PermGroup& g, const SubgroupHandle& h) {
    return product_size(h, centralizer(g, h)) == g.order();
}

using FamilySet = std::set<SubgroupHandle>;

FamilySet expand_family(const FamilySet& prev, const std::vector<SubgroupHandle>& conjugates) {
    FamilySet next;
    for (const auto& a : prev)
        for (const auto& c : conjugates) next.insert(intersect(a, c));
    return next;
}

/// Centralizer cache keyed by the subgroup's canonical element list.
class CentralizerCache {
public:
    CentralizerCache(const PermGroup& g) : g_(g) {}
    const SubgroupHandle& get(const SubgroupHandle& k) {
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(k, centralizer(g_, k)).first->second;
    }

private:
    const PermGroup& g_;
    std::map<SubgroupHandle, SubgroupHandle> cache_;
};

Permutation coset_min(const Permutation& x, const SubgroupHandle& c) {
    Permutation best = x * c.elements().front();
    for (const auto& e : c.elements()) {
        Permutation cand = x * e;
        if (cand < best) best = cand;
    }
    return best;
}

bool subgroup_subset(const SubgroupHandle& a, const SubgroupHandle& b) {
    return std::includes(b.elements().begin(), b.elements().end(), a.elements().begin(),
                         a.elements().end());
}

using PairSet = std::set<std::pair<SubgroupHandle, Permutation>>;

}  // namespace

DepthReport comb_depth(const PermGroup& g, const SubgroupHandle& h, int max_level) {
    DepthReport report;
    report.family_sizes.push_back(1);
    if (depth_one(g, h)) {
        report.dc = 1;
        return report;
    }
    if (is_normal(g, h)) {
        report.dc = 2;
        report.cert_normal = true;
        return report;
    }

    const SubgroupHandle n = normalizer(g, h);
    const auto transversal = right_transversal(g, n);
    std::vector<SubgroupHandle> conjugates;
    for (const auto& t : transversal) conjugates.push_back(conjugate(h, t));

    CentralizerCache cents(g);

    // level-1 decorated pairs: x_1 = nn * t covers G once per conjugate coset
    PairSet pairs_prev;
    for (std::size_t ti = 0; ti < transversal.size(); ++ti) {
        SubgroupHandle k = intersect(h, conjugates[ti]);
        const SubgroupHandle& c = cents.get(k);
        for (const auto& nn : n.elements())
            pairs_prev.insert({k, coset_min(nn * transversal[ti], c)});
    }

    FamilySet u_prev;
    for (std::size_t ti = 0; ti < transversal.size(); ++ti)
        u_prev.insert(intersect(h, conjugates[ti]));
    report.family_sizes.push_back(u_prev.size());

    for (int i = 2; i <= max_level; ++i) {
        FamilySet u_cur = expand_family(u_prev, conjugates);
        report.family_sizes.push_back(u_cur.size());

        PairSet pairs_cur;
        for (const auto& [kprev, rep] : pairs_prev) {
            const SubgroupHandle& cprev = cents.get(kprev);
            for (const auto& conj : conjugates) {
                SubgroupHandle k = intersect(kprev, conj);
                const SubgroupHandle& c = cents.get(k);
                if (!subgroup_subset(cprev, c))
                    throw InconsistencyError("centralizer coarsening violated");
                pairs_cur.insert({k, coset_min(rep, c)});
            }
        }

        if (std::includes(pairs_prev.begin(), pairs_prev.end(), pairs_cur.begin(),
                          pairs_cur.end())) {
            report.dc = 2 * i - 1;
            return report;
        }
        if (u_cur == u_prev) {
            report.dc = 2 * i;
            return report;
        }
        u_prev = std::move(u_cur);
        pairs_prev = std::move(pairs_cur);
    }
    return report;  // dc missing: cap exceeded
}

DepthReport comb_depth_naive(const PermGroup& g, const SubgroupHandle& h, int max_level) {
    DepthReport report;
    report.family_sizes.push_back(1);
    const auto& els = g.elements();

    // depth 1 straight from the definition
    bool d1 = true;
    for (const auto& x : els) {
        bool found = false;
        for (const auto& y : h.elements()) {
            bool match = true;
            for (const auto& hh : h.elements())
                if (hh.conjugated_by(x.inverse()) != hh.conjugated_by(y.inverse())) {
                    match = false;
                    break;
                }
            if (match) {
                found = true;
                break;
            }
        }
        if (!found) {
            d1 = false;
            break;
        }
    }
    if (d1) {
        report.dc = 1;
        return report;
    }
    if (is_normal(g, h)) {
        report.dc = 2;
        report.cert_normal = true;
        return report;
    }

    const SubgroupHandle n = normalizer(g, h);
    const auto transversal = right_transversal(g, n);
    std::vector<SubgroupHandle> conjugates;
    for (const auto& t : transversal) conjugates.push_back(conjugate(h, t));

    // S[x1] = all H^{(x1, x2..xi)} as the tail varies
    std::vector<FamilySet> s_prev(els.size()), s_cur;
    for (std::size_t xi = 0; xi < els.size(); ++xi)
        s_prev[xi].insert(intersect(h, conjugate(h, els[xi])));
    FamilySet u_prev;
    for (const auto& s : s_prev) u_prev.insert(s.begin(), s.end());
    report.family_sizes.push_back(u_prev.size());

    for (int i = 2; i <= max_level; ++i) {
        s_cur.assign(els.size(), {});
        for (std::size_t xi = 0; xi < els.size(); ++xi)
            s_cur[xi] = expand_family(s_prev[xi], conjugates);
        FamilySet u_cur;
        for (const auto& s : s_cur) u_cur.insert(s.begin(), s.end());
        report.family_sizes.push_back(u_cur.size());

        // odd criterion, quantifiers verbatim
        bool odd_ok = true;
        for (std::size_t xi = 0; xi < els.size() && odd_ok; ++xi) {
            for (const auto& k : s_cur[xi]) {
                bool witness = false;
                for (std::size_t yi = 0; yi < els.size() && !witness; ++yi) {
                    if (!s_prev[yi].count(k)) continue;
                    bool agree = true;
                    for (const auto& hh : k.elements())
                        if (hh.conjugated_by(els[xi].inverse()) !=
                            hh.conjugated_by(els[yi].inverse())) {
                            agree = false;
                            break;
                        }
                    witness = agree;
                }
                if (!witness) {
                    odd_ok = false;
                    break;
                }
            }
        }
        if (odd_ok) {
            report.dc = 2 * i - 1;
            return report;
        }
        if (u_cur == u_prev) {
            report.dc = 2 * i;
            return report;
        }
        u_prev = std::move(u_cur);
        s_prev = std::move(s_cur);
    }
    return report;
}

RelationGraphResult relation_graph(const MultiplicityMatrix& mult) {
    const std::size_t rows = mult.m.size();
    const std::size_t cols = rows ? mult.m.front().size() : 0;
    std::vector<std::vector<bool>> adj(rows, std::vector<bool>(rows, false));
    for (std::size_t c = 0; c < cols; ++c) {
        std::vector<std::size_t> support;
        for (std::size_t r = 0; r < rows; ++r)
            if (mult.m[r][c] != 0) support.push_back(r);
        for (std::size_t a : support)
            for (std::size_t b : support) adj[a][b] = true;
    }

    RelationGraphResult out;
    out.dist.assign(rows, std::vector<int>(rows, -1));
    for (std::size_t src = 0; src < rows; ++src) {
        std::vector<std::size_t> frontier{src};
        out.dist[src][src] = 0;
        int d = 0;
        while (!frontier.empty()) {
            ++d;
            std::vector<std::size_t> next;
            for (std::size_t v : frontier)
                for (std::size_t w = 0; w < rows; ++w)
                    if (adj[v][w] && out.dist[src][w] < 0) {
                        out.dist[src][w] = d;
                        next.push_back(w);
                    }
            frontier = std::move(next);
        }
    }
    out.max_dist = 0;
    for (std::size_t a = 0; a < rows; ++a)
        for (std::size_t b = 0; b < rows; ++b) {
            if (out.dist[a][b] < 0) out.max_dist = -1;
            if (out.max_dist >= 0) out.max_dist = std::max(out.max_dist, out.dist[a][b]);
        }

    out.m_chi.assign(cols, -1);
    for (std::size_t c = 0; c < cols; ++c) {
        std::vector<std::size_t> support;
        for (std::size_t r = 0; r < rows; ++r)
            if (mult.m[r][c] != 0) support.push_back(r);
        if (support.empty()) continue;
        int worst = 0;
        for (std::size_t a = 0; a < rows; ++a) {
            int best = -1;
            for (std::size_t s : support) {
                int d = out.dist[a][s];
                if (d >= 0 && (best < 0 || d < best)) best = d;
            }
            // unreachable characters have distance minus infinity and lose the max
            if (best >= 0) worst = std::max(worst, best);
        }
        out.m_chi[c] = worst;
    }
    return out;
}

std::optional<int> ord_depth_upper_from_partial(const RelationGraphResult& graph) {
    if (graph.max_dist < 0) return std::nullopt;
    return 2 * graph.max_dist + 1;
}

DepthReport ord_depth(const PermGroup& g, const SubgroupHandle& h) {
    DepthReport report;

    PermGroup hg = h.as_group();
    bool d1 = true;
    for (const auto& cls : hg.conjugacy_classes()) {
        SubgroupHandle c = centralizer_of_element(g, cls.representative);
        if (product_size(h, c) != g.order()) {
            d1 = false;
            break;
        }
    }
    if (d1) {
        report.d = 1;
        return report;
    }
    if (is_normal(g, h)) {
        report.d = 2;
        report.cert_normal = true;
        return report;
    }

    CharacterTable table_g = dixon_table(g);
    CharacterTable table_h = dixon_table(hg);
    ClassFusion fusion = class_fusion(g, table_g, h, hg, table_h);
    MultiplicityMatrix mult = induce_restrict(table_h, table_g, fusion);
    RelationGraphResult graph = relation_graph(mult);
    for (int mc : graph.m_chi)
        if (mc < 0) throw InconsistencyError("restriction with no constituents");
    report.distance = graph.dist;
    report.m_chi = graph.m_chi;

    int max_mchi = 0;
    for (int mc : graph.m_chi) max_mchi = std::max(max_mchi, mc);
    for (int k = 3;; ++k) {
        if (k % 2 == 1) {
            // a disconnected graph (max_dist < 0) never satisfies the odd bound
            if (graph.max_dist >= 0 && graph.max_dist <= (k - 1) / 2) {
                report.d = k;
                return report;
            }
        } else if (max_mchi <= k / 2 - 1) {
            report.d = k;
            return report;
        }
    }
}

CoreBoundResult core_bound(const PermGroup& g, const SubgroupHandle& h) {
    CoreBoundResult out;
    SubgroupHandle c = core(g, h);
    out.core_order = c.order();

    const SubgroupHandle n = normalizer(g, h);
    const auto transversal = right_transversal(g, n);
    std::vector<SubgroupHandle> conjugates;
    for (const auto& t : transversal) conjugates.push_back(conjugate(h, t));

    // least m with the core an intersection of m conjugates, by levelwise BFS
    FamilySet level(conjugates.begin(), conjugates.end());
    out.m = 1;
    while (!level.count(c)) {
        FamilySet next = expand_family(level, conjugates);
        if (next == level)
            throw InconsistencyError("core not reached by conjugate intersections");
        level = std::move(next);
        ++out.m;
        if (out.m > 64) throw CapacityError("core intersection search exceeded level cap");
    }

    out.core_central = true;
    for (const auto& z : c.elements()) {
        for (const auto& gen : g.generators())
            if (z.conjugated_by(gen) != z) {
                out.core_central = false;
                break;
            }
        if (!out.core_central) break;
    }
    out.bound = out.core_central ? 2 * out.m - 1 : 2 * out.m;

    if (g.is_simple() && h.order() > 1 && h.order() < g.order()) {
        for (const auto& conj : conjugates)
            if (intersect(h, conj).order() == 1) {
                out.disjoint_conjugate_d3 = true;
                break;
            }
    }
    return out;
}

}  // namespace depthlab
