#ifndef UDBOUND_ISOGENY_HPP
#define UDBOUND_ISOGENY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "udbound/root_system.hpp"
#include "udbound/search.hpp"

namespace udbound {

enum class Lattice { SimplyConnected, Adjoint, HalfSpin };

std::string lattice_name(Lattice l);

struct GroupSpec {
    RootSystem rs;
    Lattice lattice = Lattice::SimplyConnected;
    ChainOptions chain;  // search options for the ud bounds underneath
};

// Character group Z* of the chosen central subgroup, realized as the
// quotient of the full center by the subgroup H spanned by `kernel_gens`.
// pi_{Z*}(x_v) is the coset of center.pi[v-1].
struct CenterQuotient {
    CenterData center;
    std::vector<std::vector<int>> kernel_gens;
    std::vector<std::vector<int>> kernel_elements;  // all of H

    bool vanishes(const std::vector<int>& e) const;  // e in H
    long long order() const { return center.order() / static_cast<long long>(kernel_elements.size()); }
    // order of the coset of e in center/H
    int coset_order(const std::vector<int>& e) const;
    bool generates(const std::vector<std::vector<int>>& elems) const;
};

CenterQuotient center_quotient(const RootSystem& rs, Lattice lattice);

// All inclusion-minimal vertex sets whose pi-images generate Z*, ordered
// by size then lexicographically.  The empty set for a trivial Z*.
std::vector<std::vector<int>> generating_sets(const RootSystem& rs, const CenterQuotient& zq);

// z_i = x_i + sum_j a[i][j] x_{k_j} in T* for every retained vertex i;
// coefficients are the minimal non-negative solutions (smallest total,
// then lexicographic).
struct Substitution {
    std::vector<int> removed;                // sorted vertex indices k_1..k_r
    std::map<int, std::vector<int>> coeffs;  // retained i -> (a[i][1..r])

    bool trivial() const;  // all coefficients zero
};

Substitution substitution_for(const RootSystem& rs, const CenterQuotient& zq,
                              const std::vector<int>& removed);

struct CdBoundResult {
    std::string group;
    long long dim = 0;  // |Sigma^+| = dim G/B
    int ud_degree = 0;
    long long bound = 0;  // dim - ud_degree
    std::vector<int> removed;
    std::string sub_name;           // diagram after removal ("" when none removed)
    Certificate certificate;        // vertex indices of the original diagram
    Certificate certificate_local;  // subdiagram numbering (equals `certificate` when SC)
    Substitution substitution;
    bool verified = false;          // z-verification (plain verification when SC)
    std::vector<std::pair<std::vector<int>, int>> alternatives;  // removal set -> degree
};

// cd(G) <= |Sigma^+| - ud: simply connected directly, otherwise best over
// all minimal generating removals with the certificate translated back to
// the original indices and checked end-to-end through the z-substitution.
CdBoundResult cd_upper_bound(const GroupSpec& spec);

// Expands the z-monomial prod z_i^{e_i} in the original variables and
// applies the certificate word there; true iff the result is 1.
bool verify_z_certificate(const OperatorContext& full_ctx, const Substitution& subst,
                          const Certificate& cert);

struct ProductQuotientResult {
    SimpleType type;
    int m = 1;
    long long dim = 0;          // m |Sigma^+|
    int ud_full = 0;            // ud lower bound of Sigma
    int ud_sub = 0;             // of Sigma' after removal
    std::vector<int> removed;
    std::string sub_name;
    long long bound = 0;        // m|Sigma^+| - (m-1) ud - ud'
    Certificate full_certificate;
    Certificate sub_certificate;  // original indices of one copy
    Substitution substitution;    // one-copy substitution for the removal
    bool verified = false;
};

// cd(G^m / Z) for the diagonal center Z of a simple simply-connected G.
// When `removed` is not supplied the removal maximizing ud(Sigma') is
// chosen among the minimal generating sets.
ProductQuotientResult product_quotient_bound(const SimpleType& type, int m,
                                             std::optional<std::vector<int>> removed = std::nullopt);

}  // namespace udbound

#endif
