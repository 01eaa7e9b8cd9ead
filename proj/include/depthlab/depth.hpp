#pragma once

#include <optional>
#include <vector>

#include "depthlab/character.hpp"
#include "depthlab/group.hpp"

namespace depthlab {

/// The family U_i(H) of intersections H ∩ H^{x_1} ∩ ... ∩ H^{x_i}.
struct IntersectionFamily {
    int level = 0;
    std::vector<SubgroupHandle> subgroups;  // sorted, canonical
};

/// Result of either depth computation.  A missing value means the level cap
/// was reached before stabilization (guards bugs; cannot happen for finite
/// groups within the cap).
struct DepthReport {
    std::optional<int> dc;
    std::optional<int> d;
    std::vector<std::size_t> family_sizes;  // |U_0|, |U_1|, ...
    std::vector<std::vector<int>> distance;  // over Irr(H); -1 = unreachable
    std::vector<int> m_chi;                  // per chi in Irr(G)
    bool cert_normal = false;
    bool cert_core_bound = false;
    bool cert_disjoint_conjugate = false;
};

/// Combinatorial depth per the stabilization criteria: dc = 1 iff
/// G = H·C_G(H); dc <= 2i iff U_i = U_{i-1}; dc <= 2i-1 (i > 1) via the
/// decorated-pair criterion tracking x_1 modulo C_G of the intersection.
DepthReport comb_depth(const PermGroup& g, const SubgroupHandle& h, int max_level = 16);

/// Reference implementation of the odd criterion by direct quantifier
/// enumeration over x_1 in G; for cross-checking on small groups only.
DepthReport comb_depth_naive(const PermGroup& g, const SubgroupHandle& h, int max_level = 16);

/// Distances and m(chi) data from a multiplicity matrix (rows indexed by
/// Irr(H), columns by Irr(G)).
struct RelationGraphResult {
    std::vector<std::vector<int>> dist;  // -1 = unreachable
    int max_dist = 0;                    // -1 if some pair is unreachable
    std::vector<int> m_chi;  // per column; unreachable rows are ignored, -1 = empty column
};

RelationGraphResult relation_graph(const MultiplicityMatrix& mult);

/// Least odd bound 2m+1 derivable from the rows present.  Sound for partial
/// data: extra relations only shrink distances.
std::optional<int> ord_depth_upper_from_partial(const RelationGraphResult& graph);

/// Ordinary depth via character tables computed with dixon_table.
DepthReport ord_depth(const PermGroup& g, const SubgroupHandle& h);

struct CoreBoundResult {
    int m = 0;       // least number of conjugates intersecting to the core
    int bound = 0;   // 2m, refined to 2m-1 when the core is central
    bool core_central = false;
    bool disjoint_conjugate_d3 = false;  // G simple, H proper, trivial meet
    std::uint64_t core_order = 0;
};

CoreBoundResult core_bound(const PermGroup& g, const SubgroupHandle& h);

}  // namespace depthlab
