#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "depthlab/group.hpp"

namespace depthlab {

/// A named subgroup inclusion; the parent group is shared between entries.
struct CorpusEntry {
    std::string name;
    std::shared_ptr<PermGroup> group;
    SubgroupHandle subgroup;
};

/// The standard inclusion corpus: subgroups of S4, D8, A5 and the maximal
/// subgroups of PGammaL(2,8).  26 entries.
std::vector<CorpusEntry> standard_corpus();

struct SuiteResult {
    std::string json;  // deterministic for a fixed seed
    bool pass = false;
};

/// Runs the full check battery (depth corpus, Sylow model, N_G(P) character
/// table, R(3), counting certificates) and aggregates a JSON report.
SuiteResult run_suite(std::uint64_t seed);

}  // namespace depthlab
