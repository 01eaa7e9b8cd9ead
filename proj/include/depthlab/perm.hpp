#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace depthlab {

using Point = std::uint16_t;

/// A bijection on {0, ..., degree-1}, stored as the image array.
class Permutation {
public:
    explicit Permutation(std::vector<Point> images);
    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    Point operator()(Point p) const { return img_[p]; }
    const std::vector<Point>& images() const { return img_; }

    bool is_identity() const;
    int order() const;

    /// Apply *this, then rhs.
    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    /// g^{-1} * (*this) * g.
    Permutation conjugated_by(const Permutation& g) const;

    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.img_ <=> b.img_;
    }
    friend bool operator==(const Permutation& a, const Permutation& b) = default;

private:
    struct Unchecked {};
    Permutation(std::vector<Point> images, Unchecked) : img_(std::move(images)) {}
    std::vector<Point> img_;
};

}  // namespace depthlab
