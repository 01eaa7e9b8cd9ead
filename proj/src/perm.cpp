#include "depthlab/perm.hpp"

#include <cstdlib>
#include <numeric>

#include "depthlab/errors.hpp"

namespace depthlab {

std::size_t materialization_cap() {
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("DEPTHLAB_CAP")) {
            long v = std::atol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(10000);
    }();
    return cap;
}

Permutation::Permutation(std::vector<Point> images) : img_(std::move(images)) {
    if (img_.empty() || img_.size() > 1u << 16)
        throw InputError("permutation degree out of range");
    std::vector<bool> seen(img_.size(), false);
    for (Point p : img_) {
        if (p >= img_.size() || seen[p])
            throw InputError("permutation images are not a bijection");
        seen[p] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    return Permutation(std::move(img), Unchecked{});
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

int Permutation::order() const {
    // lcm of cycle lengths
    std::vector<bool> seen(img_.size(), false);
    long long ord = 1;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        long long len = 0;
        for (Point p = static_cast<Point>(i); !seen[p]; p = img_[p]) {
            seen[p] = true;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return static_cast<int>(ord);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    std::vector<Point> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[i] = rhs.img_[img_[i]];
    return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::inverse() const {
    std::vector<Point> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<Point>(i);
    return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
    // (g^{-1} h g)(p) = g(h(g^{-1}(p)))
    const Permutation gi = g.inverse();
    std::vector<Point> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[i] = g.img_[img_[gi.img_[i]]];
    return Permutation(std::move(img), Unchecked{});
}

}  // namespace depthlab
