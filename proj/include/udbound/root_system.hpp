#ifndef UDBOUND_ROOT_SYSTEM_HPP
#define UDBOUND_ROOT_SYSTEM_HPP

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace udbound {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
    Family family;
    int rank;

    // throws Error on invalid family/rank combinations
    // (A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2)
    void validate() const;

    static SimpleType parse(std::string_view text);
    std::string to_string() const;

    long long positive_roots() const;
    // classical order of the Weyl group
    long long weyl_order() const;
};

// Convention (Bourbaki): c[i][j] = alpha_j^vee(alpha_i),
// so row i expands the simple root alpha_i in fundamental weights,
// alpha_i = sum_j c[i][j] x_j.
struct CartanMatrix {
    int n = 0;
    std::vector<int> entries;  // row-major

    int at(int i, int j) const { return entries[(i - 1) * n + (j - 1)]; }
    int& at(int i, int j) { return entries[(i - 1) * n + (j - 1)]; }

    static CartanMatrix identity2(int n);
    // asserts c[i][i]=2, off-diagonal <= 0, zero symmetry, and
    // c[i][j]*c[j][i] in {0,1,2,3}; throws InternalError otherwise
    void validate() const;
};

struct DynkinDiagram {
    struct Edge {
        int a, b;      // a < b, global 1-based vertex indices
        int mult;      // bond multiplicity 1, 2 or 3
        int long_end;  // for mult>1: endpoint carrying the long root; 0 otherwise
    };

    std::vector<SimpleType> components;
    std::vector<std::pair<int, int>> component_spans;  // inclusive vertex ranges
    int rank = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adjacency;  // adjacency[v-1] = sorted neighbors

    std::string name() const;  // "C3", "A2+A2", ...
    bool simple() const { return components.size() == 1; }
    int component_of(int v) const;
};

struct RootSystem {
    DynkinDiagram diagram;
    CartanMatrix cartan;
};

// Builds the diagram and block-diagonal Cartan matrix for a semisimple
// union of simple types, vertices numbered 1..n across components.
RootSystem build(const std::vector<SimpleType>& spec);
RootSystem build(std::string_view name);  // "C3", "A2+A2"

long long positive_root_count(const DynkinDiagram& diagram);

// A 1-chain (i_1..i_k): distinct indices with c[i_{t+1}][i_t] = -1 for
// every consecutive pair; any single index is a 1-chain.
bool is_one_chain(const CartanMatrix& cartan, std::span<const int> seq);

struct Subdiagram {
    RootSystem sub;
    std::vector<int> to_old;  // 1-based: to_old[new] = old vertex
    std::vector<int> to_new;  // 1-based: to_new[old] = new vertex, 0 if removed
};

// Induced diagram on the remaining vertices, re-decomposed into standard
// components (each renumbered to its Bourbaki ordering).  The induced
// Cartan submatrix is checked against the rebuilt one.
Subdiagram subdiagram(const RootSystem& rs, const std::set<int>& removed);

// Finite abelian group Z(G^sc)^* = weight/root lattice quotient, with the
// projection images of the fundamental weights.
struct CenterData {
    std::vector<int> factor_orders;        // e.g. {3}, {2,2}, {} (trivial)
    std::vector<std::vector<int>> pi;      // pi[v-1] = tuple of residues

    std::vector<int> zero() const { return std::vector<int>(factor_orders.size(), 0); }
    std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const;
    std::vector<int> scale(int k, const std::vector<int>& a) const;
    bool is_zero(const std::vector<int>& a) const;
    long long order() const;
    std::vector<std::vector<int>> all_elements() const;
    // subgroup generated by the given elements
    std::vector<std::vector<int>> span(const std::vector<std::vector<int>>& gens) const;
};

// Center presets for every supported simple type, assembled across
// components for semisimple diagrams (factor tuples concatenate).
// Validated by pi(alpha_i) = 0 for every Cartan row.
CenterData center(const RootSystem& rs);

}  // namespace udbound

#endif
