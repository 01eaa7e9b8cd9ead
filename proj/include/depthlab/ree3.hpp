#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "depthlab/depth.hpp"
#include "depthlab/group.hpp"
#include "depthlab/report.hpp"

namespace depthlab {

/// R(3) as PGammaL(2,8) on the projective line over GF(8): points 0..7 are
/// the field elements, point 8 is infinity.
struct R3Group {
    /// Behind a shared_ptr so the subgroup handles stay valid on move.
    std::shared_ptr<PermGroup> group;
    /// Maximal subgroup representatives in the fixed order
    /// N(P0), N(S), N(M0), H'; orders 54, 168, 42, 504.
    std::vector<SubgroupHandle> maximal_reps;
};

R3Group build_r3(std::uint64_t seed = 0);

/// Exhaustive verification of the structural facts used for R(3): order and
/// Sylow structure, TI properties, normalizer orders, involution centralizer
/// shape, the maximal subgroup classes, and the degree-28 coset action.
CheckReport verify_r3_structure(const R3Group& r3, std::uint64_t seed = 0);

struct SurveyEntry {
    std::string name;
    std::uint64_t order = 0;
    DepthReport comb;
    DepthReport ord;
    CoreBoundResult core;
};

/// Depth computations for every maximal subgroup class, with the
/// cross-invariants (d <= dc, normality, core bound) asserted.
std::vector<SurveyEntry> r3_depth_survey(const R3Group& r3);

}  // namespace depthlab
