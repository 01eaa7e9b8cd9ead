#include "depthlab/group.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>

#include "depthlab/errors.hpp"
#include "json.hpp"

namespace depthlab {

namespace {

// Subgroup generated by `seed` via BFS over right multiplication.
std::vector<Permutation> closure_impl(int degree, const std::vector<Permutation>& seed,
                                      std::size_t cap) {
    std::vector<Permutation> gens;
    for (const auto& g : seed) {
        if (!g.is_identity()) {
            gens.push_back(g);
            gens.push_back(g.inverse());
        }
    }
    std::set<Permutation> seen;
    std::deque<Permutation> queue;
    seen.insert(Permutation::identity(degree));
    queue.push_back(Permutation::identity(degree));
    while (!queue.empty()) {
        Permutation x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            Permutation y = x * g;
            if (seen.insert(y).second) {
                if (seen.size() > cap)
                    throw CapacityError("closure exceeds materialization cap");
                queue.push_back(std::move(y));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

// Small generating set recovered greedily from a sorted element list.
std::vector<Permutation> minimal_generators(int degree, const std::vector<Permutation>& elems) {
    std::vector<Permutation> gens;
    std::set<Permutation> cl;
    cl.insert(Permutation::identity(degree));
    for (const auto& e : elems) {
        if (cl.count(e)) continue;
        gens.push_back(e);
        auto full = closure_impl(degree, gens, elems.size());
        cl = std::set<Permutation>(full.begin(), full.end());
        if (cl.size() == elems.size()) break;
    }
    return gens;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
    for (const auto& g : gens_)
        if (g.degree() != degree_)
            throw InputError("generator degree mismatch");
    build_chain();
}

void PermGroup::build_chain() {
    order_ = 1;
    std::vector<Permutation> gens;
    for (const auto& g : gens_)
        if (!g.is_identity()) gens.push_back(g);

    while (!gens.empty()) {
        // smallest moved point
        Point base = 0;
        bool found = false;
        for (Point p = 0; !found && p < degree_; ++p)
            for (const auto& g : gens)
                if (g(p) != p) {
                    base = p;
                    found = true;
                    break;
                }
        if (!found) break;

        ChainLevel level;
        level.base = base;
        level.transversal.emplace(base, Permutation::identity(degree_));
        std::deque<Point> queue{base};
        while (!queue.empty()) {
            Point p = queue.front();
            queue.pop_front();
            for (const auto& g : gens) {
                Point q = g(p);
                if (!level.transversal.count(q)) {
                    level.transversal.emplace(q, level.transversal.at(p) * g);
                    queue.push_back(q);
                }
            }
        }
        order_ *= level.transversal.size();

        // Schreier generators for the stabilizer of base.
        std::set<Permutation> stab;
        for (const auto& [p, up] : level.transversal) {
            for (const auto& g : gens) {
                Permutation s = up * g * level.transversal.at(g(p)).inverse();
                if (!s.is_identity()) stab.insert(std::move(s));
            }
        }
        chain_.push_back(std::move(level));
        gens.assign(stab.begin(), stab.end());
    }
}

bool PermGroup::contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    Permutation x = g;
    for (const auto& level : chain_) {
        Point p = x(level.base);
        auto it = level.transversal.find(p);
        if (it == level.transversal.end()) return false;
        x = x * it->second.inverse();
    }
    return x.is_identity();
}

const std::vector<Permutation>& PermGroup::elements() const {
    if (!elements_.empty()) return elements_;
    if (order_ > materialization_cap())
        throw CapacityError("group order " + std::to_string(order_) +
                            " exceeds materialization cap");
    elements_ = closure_impl(degree_, gens_, materialization_cap());
    if (elements_.size() != order_)
        throw InconsistencyError("stabilizer-chain order disagrees with enumeration");
    return elements_;
}

std::size_t PermGroup::element_index(const Permutation& g) const {
    const auto& els = elements();
    auto it = std::lower_bound(els.begin(), els.end(), g);
    if (it == els.end() || !(*it == g)) return npos;
    return static_cast<std::size_t>(it - els.begin());
}

const std::vector<ConjugacyClassInfo>& PermGroup::conjugacy_classes() const {
    if (!classes_.empty()) return classes_;
    const auto& els = elements();
    elem_class_.assign(els.size(), 0);
    std::vector<bool> visited(els.size(), false);
    std::vector<ConjugacyClassInfo> classes;
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (visited[i]) continue;
        // i is minimal in its class since we scan in sorted order
        std::vector<std::size_t> orbit{i};
        visited[i] = true;
        std::deque<std::size_t> queue{i};
        while (!queue.empty()) {
            std::size_t j = queue.front();
            queue.pop_front();
            for (const auto& g : gens_) {
                std::size_t k = element_index(els[j].conjugated_by(g));
                if (!visited[k]) {
                    visited[k] = true;
                    orbit.push_back(k);
                    queue.push_back(k);
                }
            }
        }
        ConjugacyClassInfo info{els[i], orbit.size(), order_ / orbit.size(), els[i].order()};
        classes.push_back(std::move(info));
        members.push_back(std::move(orbit));
    }
    // identity first, then element order, size, minimal representative
    std::vector<std::size_t> idx(classes.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const auto& ca = classes[a];
        const auto& cb = classes[b];
        if (ca.element_order != cb.element_order) return ca.element_order < cb.element_order;
        if (ca.size != cb.size) return ca.size < cb.size;
        return ca.representative < cb.representative;
    });
    classes_.clear();
    for (std::size_t rank = 0; rank < idx.size(); ++rank) {
        classes_.push_back(classes[idx[rank]]);
        for (std::size_t m : members[idx[rank]])
            elem_class_[m] = static_cast<std::uint32_t>(rank);
    }
    return classes_;
}

std::size_t PermGroup::class_of(const Permutation& g) const {
    conjugacy_classes();
    std::size_t i = element_index(g);
    if (i == npos) throw InputError("element not in group");
    return elem_class_[i];
}

bool PermGroup::is_simple() const {
    if (order_ <= 1) return false;
    const auto& classes = conjugacy_classes();
    const auto& els = elements();
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].representative.is_identity()) continue;
        // normal closure of the representative = subgroup generated by its class
        std::vector<Permutation> cls;
        for (std::size_t i = 0; i < els.size(); ++i)
            if (elem_class_[i] == c) cls.push_back(els[i]);
        auto gen = closure_impl(degree_, cls, materialization_cap());
        if (gen.size() != order_) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

SubgroupHandle::SubgroupHandle(const PermGroup* parent, std::vector<Permutation> generators) {
    parent_ = parent;
    for (const auto& g : generators)
        if (!parent->contains(g))
            throw InputError("subgroup generator not contained in parent");
    gens_ = std::move(generators);
    elems_ = closure_impl(parent->degree(), gens_, materialization_cap());
}

SubgroupHandle SubgroupHandle::from_elements(const PermGroup* parent,
                                             std::vector<Permutation> sorted_elements) {
    SubgroupHandle h;
    h.parent_ = parent;
    h.elems_ = std::move(sorted_elements);
    h.gens_ = minimal_generators(parent->degree(), h.elems_);
    return h;
}

SubgroupHandle SubgroupHandle::trivial(const PermGroup* parent) {
    return from_elements(parent, {Permutation::identity(parent->degree())});
}

SubgroupHandle SubgroupHandle::whole(const PermGroup* parent) {
    SubgroupHandle h;
    h.parent_ = parent;
    h.elems_ = parent->elements();
    h.gens_ = parent->generators();
    return h;
}

bool SubgroupHandle::contains(const Permutation& g) const {
    return std::binary_search(elems_.begin(), elems_.end(), g);
}

PermGroup SubgroupHandle::as_group() const {
    return PermGroup(parent_->degree(), gens_);
}

SubgroupHandle intersect(const SubgroupHandle& h1, const SubgroupHandle& h2) {
    if (&h1.parent() != &h2.parent())
        throw InputError("intersect: different parent groups");
    std::vector<Permutation> out;
    std::set_intersection(h1.elements().begin(), h1.elements().end(), h2.elements().begin(),
                          h2.elements().end(), std::back_inserter(out));
    return SubgroupHandle::from_elements(&h1.parent(), std::move(out));
}

SubgroupHandle conjugate(const SubgroupHandle& h, const Permutation& x) {
    std::vector<Permutation> out;
    out.reserve(h.elements().size());
    for (const auto& e : h.elements()) out.push_back(e.conjugated_by(x));
    std::sort(out.begin(), out.end());
    return SubgroupHandle::from_elements(&h.parent(), std::move(out));
}

SubgroupHandle centralizer(const PermGroup& g, const SubgroupHandle& h) {
    std::vector<Permutation> out;
    for (const auto& x : g.elements()) {
        bool central = true;
        for (const auto& s : h.generators())
            if (!(x * s == s * x)) {
                central = false;
                break;
            }
        if (central) out.push_back(x);
    }
    return SubgroupHandle::from_elements(&g, std::move(out));
}

SubgroupHandle centralizer_of_element(const PermGroup& g, const Permutation& x) {
    std::vector<Permutation> out;
    for (const auto& y : g.elements())
        if (y * x == x * y) out.push_back(y);
    return SubgroupHandle::from_elements(&g, std::move(out));
}

SubgroupHandle normalizer(const PermGroup& g, const SubgroupHandle& h) {
    std::vector<Permutation> out;
    for (const auto& x : g.elements()) {
        bool normalizes = true;
        for (const auto& s : h.generators())
            if (!h.contains(s.conjugated_by(x))) {
                normalizes = false;
                break;
            }
        if (normalizes) out.push_back(x);
    }
    return SubgroupHandle::from_elements(&g, std::move(out));
}

std::vector<Permutation> right_transversal(const PermGroup& g, const SubgroupHandle& h) {
    const auto& els = g.elements();
    std::vector<bool> visited(els.size(), false);
    std::vector<Permutation> reps;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (visited[i]) continue;
        reps.push_back(els[i]);  // minimal unvisited element is the coset's minimum
        for (const auto& hh : h.elements()) visited[g.element_index(hh * els[i])] = true;
    }
    return reps;
}

std::vector<Permutation> closure(const std::vector<Permutation>& seed, std::size_t cap) {
    if (seed.empty()) throw InputError("closure of empty seed");
    return closure_impl(seed.front().degree(), seed, cap);
}

SubgroupHandle derived_subgroup(const PermGroup& g) {
    std::vector<Permutation> seed;
    for (const auto& a : g.generators())
        for (const auto& b : g.generators())
            seed.push_back(a.inverse() * b.inverse() * a * b);
    if (seed.empty()) seed.push_back(Permutation::identity(g.degree()));
    // normal closure
    for (;;) {
        auto cl = closure_impl(g.degree(), seed, materialization_cap());
        std::set<Permutation> set(cl.begin(), cl.end());
        bool grew = false;
        for (const auto& x : cl)
            for (const auto& gen : g.generators()) {
                Permutation y = x.conjugated_by(gen);
                if (!set.count(y)) {
                    seed.push_back(y);
                    grew = true;
                }
            }
        if (!grew) return SubgroupHandle::from_elements(&g, std::move(cl));
    }
}

SubgroupHandle core(const PermGroup& g, const SubgroupHandle& h) {
    SubgroupHandle k = h;
    auto is_normal = [&](const SubgroupHandle& s) {
        for (const auto& gen : g.generators())
            for (const auto& sg : s.generators())
                if (!s.contains(sg.conjugated_by(gen))) return false;
        return true;
    };
    if (is_normal(k)) return k;
    for (const auto& t : right_transversal(g, h)) {
        k = intersect(k, conjugate(h, t));
        if (is_normal(k)) break;
    }
    return k;
}

// ---------------------------------------------------------------------------

namespace {
PermGroup group_from_json(const nlohmann::json& j) {
    int degree = j.at("degree").get<int>();
    std::vector<Permutation> gens;
    for (const auto& arr : j.at("generators")) {
        std::vector<Point> img;
        for (const auto& v : arr) img.push_back(static_cast<Point>(v.get<int>()));
        if (static_cast<int>(img.size()) != degree)
            throw InputError("generator length does not match degree");
        gens.emplace_back(std::move(img));
    }
    return PermGroup(degree, std::move(gens));
}
}  // namespace

PermGroup group_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open group file: " + path);
    nlohmann::json j;
    in >> j;
    return group_from_json(j);
}

SubgroupHandle subgroup_from_json_file(const std::string& path, const PermGroup& parent) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open subgroup file: " + path);
    nlohmann::json j;
    in >> j;
    std::vector<Permutation> gens;
    for (const auto& arr : j.at("generators")) {
        std::vector<Point> img;
        for (const auto& v : arr) img.push_back(static_cast<Point>(v.get<int>()));
        gens.emplace_back(std::move(img));
    }
    return SubgroupHandle(&parent, std::move(gens));
}

std::string group_to_json(const PermGroup& g) {
    nlohmann::json j;
    j["degree"] = g.degree();
    auto& arr = j["generators"] = nlohmann::json::array();
    for (const auto& gen : g.generators()) {
        nlohmann::json one = nlohmann::json::array();
        for (Point p : gen.images()) one.push_back(p);
        arr.push_back(std::move(one));
    }
    return j.dump();
}

}  // namespace depthlab
