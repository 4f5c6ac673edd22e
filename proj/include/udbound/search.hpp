#ifndef UDBOUND_SEARCH_HPP
#define UDBOUND_SEARCH_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "udbound/demazure.hpp"
#include "udbound/polynomial.hpp"
#include "udbound/root_system.hpp"

namespace udbound {

enum class StepKind { OneChain, CType };

// One certificate step.
//
// OneChain: path (i_1..i_k) is a 1-chain, target = i_k, exponent = k,
// word = (i_1..i_k); strips the factor x_{i_k}^k exactly.
//
// CType: path (v_1..v_m) runs along single bonds and ends with a double
// bond whose long root is v_m (c[v_m][v_{m-1}] = -2, c[v_{m-1}][v_m] = -1);
// target = v_1, exponent = 2m-1, word is the palindrome
// (v_1..v_{m-1} v_m v_{m-1}..v_1).  Never trusted structurally: every
// instance is validated by applying its word.
struct Step {
    StepKind kind;
    std::vector<int> path;
    int target = 0;
    int exponent = 0;
    std::vector<int> word;

    static Step one_chain(std::vector<int> path);
    static Step c_type(std::vector<int> path);
};

// A monic monomial p together with a word w such that
// apply_word(w, p) = 1; the proof object behind every bound.
//
// `steps` is kept in application order: steps.front() acts first.  The
// flat word therefore concatenates the step words last-to-first, so the
// first-applied step sits rightmost, matching the nested composition
// partial_{w_s}( ... (partial_{w_1}(p)) ).  A word-only certificate (e.g.
// a brute-force witness) carries no steps.
struct Certificate {
    int nvars = 0;
    Monomial monomial;
    std::vector<int> word;
    std::vector<Step> steps;
    int degree = 0;
};

// Builds the certificate from steps listed in processing order (the order
// the search chose them; first processed = last applied).
Certificate certificate_from_steps(int nvars, const std::vector<Step>& processing_order);

struct VerifyResult {
    bool valid = false;
    // polynomial after each step's sub-word (single entry for word-only
    // certificates), in application order
    std::vector<Polynomial> trace;
};

// Applies the word right-to-left.  With steps present, additionally
// requires every step to strip exactly its factor.  Throws Error when the
// certificate is malformed (degree/word/step mismatches).
VerifyResult verify_certificate(const OperatorContext& ctx, const Certificate& cert);

struct CTypeCache {
    std::map<std::vector<int>, bool> valid;
};

// Maximal-exponent admissible step with the given target inside
// `unprocessed` (candidate paths are tree paths).  Tie-break: OneChain
// over CType, then lexicographically smallest path.  A length-1 chain
// always exists.
Step longest_admissible_step(const RootSystem& rs, const OperatorContext& ctx, int target,
                             const std::set<int>& unprocessed, bool allow_ctype,
                             CTypeCache* cache = nullptr);

struct ChainOptions {
    bool allow_ctype = true;
    int exhaustive_rank_cap = 8;  // per component; larger components use the greedy heuristic
};

// Chain-method lower bound for ud: searches processing orders of the
// vertices, taking the longest admissible step at each, exhaustively per
// component up to the rank cap (orders scanned in lexicographic order,
// first maximum kept).  The returned certificate is always verified.
Certificate chain_method_bound(const OperatorContext& ctx, const RootSystem& rs,
                               const ChainOptions& options = {});

struct TowerReport {
    bool holds = false;                          // all indices
    std::vector<std::pair<int, bool>> per_index; // (i, identity holds)
    std::optional<Certificate> certificate;      // degree n^2 when holds
};

// Tests partial_i..partial_{n-1} partial_n partial_{n-1}..partial_i
// (x_i^{2n-2i+1}) = 1 for i = n..1 on a simple C_n system by direct
// computation; a failed identity is a reported outcome, not an error.
TowerReport c_tower_check(const OperatorContext& ctx, const RootSystem& rs);

struct BruteLimits {
    int max_degree = -1;  // -1: up to the positive-root count
    std::size_t group_cap = 2'000'000;
};

struct BruteResult {
    int ud = 0;
    Certificate witness;
};

// Exact ud by descending-degree enumeration of monic monomials against
// all Weyl elements of matching length.  partial_w(p) = 1 forces
// l(w) = deg p <= positive-root count, so the first hit is exact.
BruteResult brute_force_ud(const OperatorContext& ctx, const RootSystem& rs,
                           const BruteLimits& limits = {});

struct UdBound {
    int degree = 0;
    Certificate certificate;
};

// Best available lower bound: chain method with CType steps enabled,
// improved by the C-tower certificate on C components when its identities
// hold.  Semisimple diagrams decompose per component (degrees add).
// Passing allow_ctype=false restricts everything to plain 1-chains.
UdBound ud_lower_bound(const OperatorContext& ctx, const RootSystem& rs,
                       const ChainOptions& options = {});

}  // namespace udbound

#endif
