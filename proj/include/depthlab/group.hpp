#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "depthlab/perm.hpp"

namespace depthlab {

struct ConjugacyClassInfo {
    Permutation representative;
    std::uint64_t size = 0;
    std::uint64_t centralizer_order = 0;
    int element_order = 0;
};

/// Permutation group given by generators, with a stabilizer chain for order
/// and membership, and full enumeration (up to the materialization cap) for
/// everything else.  Immutable after construction.
class PermGroup {
public:
    PermGroup(int degree, std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    std::uint64_t order() const { return order_; }

    /// Membership by sifting through the stabilizer chain.
    bool contains(const Permutation& g) const;

    /// All elements, sorted; throws CapacityError above the cap.
    const std::vector<Permutation>& elements() const;

    /// Index into elements() or npos.
    std::size_t element_index(const Permutation& g) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Deterministic ordering: identity first, then element order, size,
    /// minimal representative.
    const std::vector<ConjugacyClassInfo>& conjugacy_classes() const;

    /// Index of the class containing g (requires enumeration).
    std::size_t class_of(const Permutation& g) const;

    /// Class index per element of elements(), aligned with conjugacy_classes().
    const std::vector<std::uint32_t>& class_indices() const {
        conjugacy_classes();
        return elem_class_;
    }

    bool is_simple() const;

private:
    struct ChainLevel {
        Point base = 0;
        std::map<Point, Permutation> transversal;  // point -> perm taking base to point
    };

    void build_chain();

    int degree_;
    std::vector<Permutation> gens_;
    std::vector<ChainLevel> chain_;
    std::uint64_t order_ = 1;
    mutable std::vector<Permutation> elements_;
    mutable std::vector<std::uint32_t> elem_class_;
    mutable std::vector<ConjugacyClassInfo> classes_;
};

/// Subgroup of a parent group, always materialized as a canonical sorted
/// element list so set-equality of subgroups is a plain comparison.
class SubgroupHandle {
public:
    SubgroupHandle(const PermGroup* parent, std::vector<Permutation> generators);

    static SubgroupHandle from_elements(const PermGroup* parent,
                                        std::vector<Permutation> sorted_elements);
    static SubgroupHandle trivial(const PermGroup* parent);
    static SubgroupHandle whole(const PermGroup* parent);

    const PermGroup& parent() const { return *parent_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    const std::vector<Permutation>& elements() const { return elems_; }
    std::uint64_t order() const { return elems_.size(); }
    bool contains(const Permutation& g) const;

    /// Subgroup as a standalone group (for character tables etc.).
    PermGroup as_group() const;

    friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) {
        return a.elems_ == b.elems_;
    }
    friend auto operator<=>(const SubgroupHandle& a, const SubgroupHandle& b) {
        return a.elems_ <=> b.elems_;
    }

private:
    SubgroupHandle() = default;
    const PermGroup* parent_ = nullptr;
    std::vector<Permutation> gens_;
    std::vector<Permutation> elems_;  // sorted
};

SubgroupHandle intersect(const SubgroupHandle& h1, const SubgroupHandle& h2);
SubgroupHandle conjugate(const SubgroupHandle& h, const Permutation& x);
SubgroupHandle centralizer(const PermGroup& g, const SubgroupHandle& h);
SubgroupHandle centralizer_of_element(const PermGroup& g, const Permutation& x);
SubgroupHandle normalizer(const PermGroup& g, const SubgroupHandle& h);
/// Right coset representatives of h in g; first representative is identity.
std::vector<Permutation> right_transversal(const PermGroup& g, const SubgroupHandle& h);
/// Closure of a set of permutations inside the parent's element universe.
std::vector<Permutation> closure(const std::vector<Permutation>& seed, std::size_t cap);
SubgroupHandle derived_subgroup(const PermGroup& g);
SubgroupHandle core(const PermGroup& g, const SubgroupHandle& h);

/// JSON I/O per the group-file format: {"degree": n, "generators": [[...]]}.
PermGroup group_from_json_file(const std::string& path);
SubgroupHandle subgroup_from_json_file(const std::string& path, const PermGroup& parent);
std::string group_to_json(const PermGroup& g);

}  // namespace depthlab
