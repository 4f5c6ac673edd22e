#ifndef UDBOUND_DEMAZURE_HPP
#define UDBOUND_DEMAZURE_HPP

#include <map>
#include <span>
#include <vector>

#include "udbound/polynomial.hpp"
#include "udbound/root_system.hpp"

namespace udbound {

struct WeylElement;

// Shared data for the simple reflections s_i and divided differences
// partial_i over Z[x_1..x_n].  With alpha_i = sum_j c[i][j] x_j the
// reflected variable is y_i = x_i - alpha_i, so x_i - y_i = alpha_i.
struct OperatorContext {
    CartanMatrix cartan;
    int nvars = 0;
    std::vector<Polynomial> y;      // y[i-1]
    std::vector<Polynomial> alpha;  // alpha[i-1]

    static OperatorContext make(const CartanMatrix& cartan);
};

// s_i: ring endomorphism with x_i -> y_i, x_j -> x_j (an involution)
Polynomial reflect(const OperatorContext& ctx, int i, const Polynomial& p);

// partial_i, division free: each monomial x_i^e q (q free of x_i) maps to
// (sum_{m=1}^{e} x_i^{m-1} y_i^{e-m}) q, extended additively.
Polynomial ddiff(const OperatorContext& ctx, int i, const Polynomial& p);

// partial_i by its definition (p - s_i(p)) / alpha_i, performed as exact
// univariate division in x_i.  Cross-check oracle for ddiff; a nonzero
// remainder throws InternalError.
Polynomial ddiff_by_division(const OperatorContext& ctx, int i, const Polynomial& p);

// partial_{i_1} ... partial_{i_l}, applied rightmost-first; the empty word
// is the identity.
Polynomial apply_word(const OperatorContext& ctx, std::span<const int> word, const Polynomial& p);

// s_{i_1} ... s_{i_l} as a ring endomorphism, rightmost-first.
Polynomial apply_reflections(const OperatorContext& ctx, std::span<const int> word,
                             const Polynomial& p);

// Degree-d slice of the characteristic map in the Schubert basis:
// coefficient of [V^w] is the augmentation of partial_w(p).  `p` must be
// homogeneous of degree d and every element must have length d.  Returns
// indices into `elements` with nonzero coefficients.
std::map<std::size_t, BigInt> schubert_expand(const OperatorContext& ctx, const Polynomial& p,
                                              const std::vector<WeylElement>& elements);

}  // namespace udbound

#endif
