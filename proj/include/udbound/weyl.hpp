#ifndef UDBOUND_WEYL_HPP
#define UDBOUND_WEYL_HPP

#include <cstddef>
#include <vector>

#include "udbound/demazure.hpp"

namespace udbound {

// A Weyl group element as the integer matrix of its action on the weight
// basis: column j holds the image of x_j expanded in the x's.  `word` is
// one reduced word (a byproduct of the BFS, not canonical); `length` is
// the Cayley-graph distance from the identity.
struct WeylElement {
    int n = 0;
    std::vector<long long> matrix;  // row-major n x n
    std::vector<int> word;
    int length = 0;

    long long at(int r, int c) const { return matrix[(r - 1) * n + (c - 1)]; }
};

inline constexpr std::size_t kDefaultGroupCap = 2'000'000;

struct WeylGroup {
    int n = 0;
    std::vector<WeylElement> elements;             // BFS discovery order
    std::vector<std::vector<std::size_t>> by_length;
    bool complete = false;                         // closure reached

    std::size_t size() const { return elements.size(); }
    int max_length() const { return static_cast<int>(by_length.size()) - 1; }
};

// Breadth-first closure under right multiplication by the generators,
// deduplicated by matrix.  Stops after the level `max_length` (-1 for the
// full group).  Throws ResourceLimitError when more than `cap` elements
// appear.
WeylGroup enumerate(const OperatorContext& ctx, int max_length = -1,
                    std::size_t cap = kDefaultGroupCap);

std::vector<WeylElement> elements_of_length(const OperatorContext& ctx, int d,
                                            std::size_t cap = kDefaultGroupCap);

}  // namespace udbound

#endif
