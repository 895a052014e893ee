#pragma once

#include <array>
#include <string>
#include <vector>

#include "delpezzo/isometry.hpp"

namespace dp {

// Elementary abelian 2-group K acting on the tangent space R^4 at a common fixed point.
// The representation splits into four real lines; a line is a character K -> {+1,-1}.
// Elements and characters are bitmasks over the chosen generators.
class LocalModel {
public:
    explicit LocalModel(std::vector<Isometry> generators);

    int rank() const { return static_cast<int>(gens_.size()); }
    const std::vector<Isometry> &generators() const { return gens_; }
    // bitmask of g over the generators, -1 when g is not in K
    int index_of(const Isometry &g) const;
    Isometry element(int mask) const;
    int size() const { return 1 << rank(); }

    using Assignment = std::array<int, 4>;

    // number of lines on which element x acts by -1
    static int minus_count(const Assignment &a, int x);
    static int value(int character, int x) { return __builtin_popcount(character & x) % 2 ? -1 : 1; }

    struct Facts {
        std::vector<int> minus_identity;  // act by -I on the tangent space
        std::vector<int> not_isolated;    // fixed locus through the point has positive dimension
    };
    // faithful assignments with an even number of -1 per element, consistent with the facts
    std::vector<Assignment> consistent(const Facts &f) const;

    // orientation sign of h on the +1 plane of g (g with two -1 lines); 0 when not a plane
    static int plane_sign(const Assignment &a, int g, int h);

    std::string describe(const Assignment &a) const;

private:
    std::vector<Isometry> gens_;
    std::vector<Isometry> elements_;
};

} // namespace dp
