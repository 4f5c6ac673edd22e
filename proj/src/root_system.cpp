#include "udbound/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "udbound/errors.hpp"

namespace udbound {

void SimpleType::validate() const {
    bool ok = false;
    switch (family) {
        case Family::A: ok = rank >= 1; break;
        case Family::B: ok = rank >= 2; break;
        case Family::C: ok = rank >= 2; break;
        case Family::D: ok = rank >= 3; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
    }
    if (!ok || rank > 500)
        throw Error("invalid simple type: " + to_string());
}

SimpleType SimpleType::parse(std::string_view text) {
    if (text.empty()) throw ParseError("expected simple type", 0);
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (fam < 'A' || fam > 'G') throw ParseError("unknown family letter", 0);
    if (text.size() < 2) throw ParseError("expected rank after family letter", 1);
    int rank = 0;
    for (std::size_t k = 1; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw ParseError("expected digit in rank", k);
        rank = rank * 10 + (text[k] - '0');
        if (rank > 100000) throw ParseError("rank out of range", k);
    }
    SimpleType t{static_cast<Family>(fam), rank};
    t.validate();
    return t;
}

std::string SimpleType::to_string() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

long long SimpleType::positive_roots() const {
    long long n = rank;
    switch (family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return 0;
}

long long SimpleType::weyl_order() const {
    auto fact = [](int k) {
        long long f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    long long n = rank;
    switch (family) {
        case Family::A: return fact(rank + 1);
        case Family::B:
        case Family::C: return (1ll << n) * fact(rank);
        case Family::D: return (1ll << (n - 1)) * fact(rank);
        case Family::E: return rank == 6 ? 51840ll : (rank == 7 ? 2903040ll : 696729600ll);
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    return 0;
}

CartanMatrix CartanMatrix::identity2(int n) {
    CartanMatrix c;
    c.n = n;
    c.entries.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i) c.at(i, i) = 2;
    return c;
}

void CartanMatrix::validate() const {
    for (int i = 1; i <= n; ++i) {
        if (at(i, i) != 2) throw InternalError("Cartan matrix: diagonal entry != 2");
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            int cij = at(i, j), cji = at(j, i);
            if (cij > 0) throw InternalError("Cartan matrix: positive off-diagonal entry");
            if ((cij == 0) != (cji == 0)) throw InternalError("Cartan matrix: zero asymmetry");
            int prod = cij * cji;
            if (prod != 0 && prod != 1 && prod != 2 && prod != 3)
                throw InternalError("Cartan matrix: bond product outside {0,1,2,3}");
        }
    }
}

int DynkinDiagram::component_of(int v) const {
    for (std::size_t k = 0; k < component_spans.size(); ++k)
        if (v >= component_spans[k].first && v <= component_spans[k].second)
            return static_cast<int>(k);
    throw InternalError("component_of: vertex out of range");
}

std::string DynkinDiagram::name() const {
    std::string out;
    for (std::size_t k = 0; k < components.size(); ++k) {
        if (k) out += "+";
        out += components[k].to_string();
    }
    return out;
}

namespace {

// local edges of one simple component, 1-based local indices
std::vector<DynkinDiagram::Edge> component_edges(const SimpleType& t) {
    std::vector<DynkinDiagram::Edge> edges;
    int r = t.rank;
    auto single = [&](int a, int b) { edges.push_back({a, b, 1, 0}); };
    switch (t.family) {
        case Family::A:
            for (int i = 1; i < r; ++i) single(i, i + 1);
            break;
        case Family::B:
            for (int i = 1; i < r - 1; ++i) single(i, i + 1);
            edges.push_back({r - 1, r, 2, r - 1});
            break;
        case Family::C:
            for (int i = 1; i < r - 1; ++i) single(i, i + 1);
            edges.push_back({r - 1, r, 2, r});
            break;
        case Family::D:
            for (int i = 1; i < r - 2; ++i) single(i, i + 1);
            single(r - 2, r - 1);
            single(r - 2, r);
            break;
        case Family::E:
            single(1, 3);
            single(2, 4);
            for (int i = 3; i < r; ++i) single(i, i + 1);
            break;
        case Family::F:
            single(1, 2);
            edges.push_back({2, 3, 2, 2});
            single(3, 4);
            break;
        case Family::G:
            edges.push_back({1, 2, 3, 2});
            break;
    }
    return edges;
}

}  // namespace

RootSystem build(const std::vector<SimpleType>& spec) {
    if (spec.empty()) {
        RootSystem rs;
        rs.cartan.n = 0;
        return rs;
    }
    RootSystem rs;
    int total = 0;
    for (const auto& t : spec) {
        t.validate();
        total += t.rank;
    }
    rs.diagram.components = spec;
    rs.diagram.rank = total;
    rs.cartan = CartanMatrix::identity2(total);
    rs.diagram.adjacency.assign(total, {});

    int offset = 0;
    for (const auto& t : spec) {
        rs.diagram.component_spans.emplace_back(offset + 1, offset + t.rank);
        for (auto e : component_edges(t)) {
            e.a += offset;
            e.b += offset;
            if (e.long_end) e.long_end += offset;
            rs.diagram.edges.push_back(e);
            rs.diagram.adjacency[e.a - 1].push_back(e.b);
            rs.diagram.adjacency[e.b - 1].push_back(e.a);
            if (e.mult == 1) {
                rs.cartan.at(e.a, e.b) = -1;
                rs.cartan.at(e.b, e.a) = -1;
            } else {
                int lng = e.long_end;
                int shrt = lng == e.a ? e.b : e.a;
                rs.cartan.at(lng, shrt) = -e.mult;
                rs.cartan.at(shrt, lng) = -1;
            }
        }
        offset += t.rank;
    }
    for (auto& nb : rs.diagram.adjacency) std::sort(nb.begin(), nb.end());
    rs.cartan.validate();
    return rs;
}

RootSystem build(std::string_view name) {
    std::vector<SimpleType> types;
    std::size_t start = 0;
    while (start <= name.size()) {
        std::size_t plus = name.find('+', start);
        std::string_view chunk =
            plus == std::string_view::npos ? name.substr(start) : name.substr(start, plus - start);
        try {
            types.push_back(SimpleType::parse(chunk));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()), start + e.position);
        }
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return build(types);
}

long long positive_root_count(const DynkinDiagram& diagram) {
    long long total = 0;
    for (const auto& t : diagram.components) total += t.positive_roots();
    return total;
}

bool is_one_chain(const CartanMatrix& cartan, std::span<const int> seq) {
    if (seq.empty()) return false;
    std::set<int> seen;
    for (int v : seq) {
        if (v < 1 || v > cartan.n) return false;
        if (!seen.insert(v).second) return false;
    }
    for (std::size_t t = 0; t + 1 < seq.size(); ++t)
        if (cartan.at(seq[t + 1], seq[t]) != -1) return false;
    return true;
}

namespace {

struct InducedComponent {
    std::vector<int> vertices;  // old indices, sorted
    // adjacency within the component, old indices
    std::map<int, std::vector<int>> adj;
};

struct EdgeInfo {
    int mult;
    int long_end;  // old index
};

// Orders the component's old vertices into the Bourbaki numbering of the
// recognized SimpleType.
std::pair<SimpleType, std::vector<int>> classify_component(
    const InducedComponent& comp, const std::map<std::pair<int, int>, EdgeInfo>& edge_info) {
    const int r = static_cast<int>(comp.vertices.size());
    auto info = [&](int u, int v) {
        auto it = edge_info.find({std::min(u, v), std::max(u, v)});
        if (it == edge_info.end()) throw InternalError("classify: missing edge info");
        return it->second;
    };

    if (r == 1) return {SimpleType{Family::A, 1}, comp.vertices};

    int max_mult = 1;
    std::pair<int, int> multi_edge{0, 0};
    for (const auto& [u, nbs] : comp.adj)
        for (int v : nbs)
            if (u < v) {
                int m = info(u, v).mult;
                if (m > max_mult) {
                    max_mult = m;
                    multi_edge = {u, v};
                }
            }

    std::vector<int> branch, leaves;
    for (const auto& [u, nbs] : comp.adj) {
        if (nbs.size() >= 3) branch.push_back(u);
        if (nbs.size() <= 1) leaves.push_back(u);
    }

    if (max_mult == 3) {
        if (r != 2) throw InternalError("classify: triple bond in rank > 2 component");
        int lng = info(multi_edge.first, multi_edge.second).long_end;
        int shrt = multi_edge.first == lng ? multi_edge.second : multi_edge.first;
        return {SimpleType{Family::G, 2}, {shrt, lng}};
    }

    if (branch.empty()) {
        // path shape: A, B, C or F
        std::sort(leaves.begin(), leaves.end());
        auto walk = [&](int from) {
            std::vector<int> path{from};
            int prev = 0, cur = from;
            while (static_cast<int>(path.size()) < r) {
                int next = 0;
                for (int nb : comp.adj.at(cur))
                    if (nb != prev) next = nb;
                path.push_back(next);
                prev = cur;
                cur = next;
            }
            return path;
        };
        if (max_mult == 1) {
            return {SimpleType{Family::A, r}, walk(leaves[0])};
        }
        int lng = info(multi_edge.first, multi_edge.second).long_end;
        int shrt = multi_edge.first == lng ? multi_edge.second : multi_edge.first;
        if (r == 2) {
            // B2 and C2 coincide; name it C2 (short root first)
            return {SimpleType{Family::C, 2}, {shrt, lng}};
        }
        bool lng_is_leaf = comp.adj.at(lng).size() == 1;
        bool shrt_is_leaf = comp.adj.at(shrt).size() == 1;
        if (lng_is_leaf) {
            // double bond at the end, long leaf: type C, leaf gets index r
            std::vector<int> path = walk(lng);
            std::reverse(path.begin(), path.end());
            return {SimpleType{Family::C, r}, path};
        }
        if (shrt_is_leaf) {
            // double bond at the end, short leaf: type B, leaf gets index r
            std::vector<int> path = walk(shrt);
            std::reverse(path.begin(), path.end());
            return {SimpleType{Family::B, r}, path};
        }
        // interior double bond: F4, long side first
        if (r != 4) throw InternalError("classify: interior double bond in rank != 4 path");
        for (int leaf : leaves) {
            std::vector<int> path = walk(leaf);
            if (path[1] == lng && path[2] == shrt) return {SimpleType{Family::F, 4}, path};
        }
        throw InternalError("classify: F4 orientation not found");
    }

    // branch shape: D or E (simply laced here)
    if (branch.size() != 1 || max_mult != 1)
        throw InternalError("classify: unexpected branched shape");
    int hub = branch[0];
    std::vector<std::vector<int>> arms;  // from hub outward, hub excluded
    for (int nb : comp.adj.at(hub)) {
        std::vector<int> arm{nb};
        int prev = hub, cur = nb;
        while (comp.adj.at(cur).size() == 2) {
            int next = 0;
            for (int x : comp.adj.at(cur))
                if (x != prev) next = x;
            arm.push_back(next);
            prev = cur;
            cur = next;
        }
        arms.push_back(arm);
    }
    if (arms.size() != 3) throw InternalError("classify: hub degree != 3");
    std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return x.back() < y.back();
    });
    std::size_t a = arms[0].size(), b = arms[1].size(), c = arms[2].size();

    if (b == 1 && c == 1) {
        // D_r: long arm leaf..hub = 1..r-2, then the two short leaves
        std::vector<int> order(arms[0].rbegin(), arms[0].rend());
        order.push_back(hub);
        int u = arms[1][0], v = arms[2][0];
        order.push_back(std::min(u, v));
        order.push_back(std::max(u, v));
        return {SimpleType{Family::D, r}, order};
    }
    if (c == 1 && b == 2 && a >= 2 && a <= 4) {
        // E_{a+4}: hub=4, short arm leaf=2, middle arm=(3,1), long arm=5..
        std::vector<int> order(static_cast<std::size_t>(r));
        order[3] = hub;
        order[1] = arms[2][0];
        order[2] = arms[1][0];
        order[0] = arms[1][1];
        for (std::size_t k = 0; k < a; ++k) order[4 + k] = arms[0][k];
        return {SimpleType{Family::E, r}, order};
    }
    throw InternalError("classify: arm profile is not a Dynkin shape");
}

}  // namespace

Subdiagram subdiagram(const RootSystem& rs, const std::set<int>& removed) {
    for (int v : removed)
        if (v < 1 || v > rs.diagram.rank) throw Error("subdiagram: removed vertex out of range");

    std::vector<int> keep;
    for (int v = 1; v <= rs.diagram.rank; ++v)
        if (!removed.count(v)) keep.push_back(v);

    std::map<std::pair<int, int>, EdgeInfo> edge_info;
    for (const auto& e : rs.diagram.edges) edge_info[{e.a, e.b}] = {e.mult, e.long_end};

    // connected components of the induced graph, ordered by smallest vertex
    std::map<int, std::vector<int>> adj;
    for (int v : keep) {
        adj[v] = {};
        for (int nb : rs.diagram.adjacency[v - 1])
            if (!removed.count(nb)) adj[v].push_back(nb);
    }
    std::set<int> unvisited(keep.begin(), keep.end());
    std::vector<InducedComponent> comps;
    while (!unvisited.empty()) {
        int start = *unvisited.begin();
        InducedComponent comp;
        std::vector<int> stack{start};
        unvisited.erase(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.vertices.push_back(v);
            comp.adj[v] = adj[v];
            for (int nb : adj[v])
                if (unvisited.erase(nb)) stack.push_back(nb);
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        comps.push_back(std::move(comp));
    }

    std::vector<SimpleType> types;
    std::vector<int> to_old{0};  // 1-based
    for (const auto& comp : comps) {
        auto [type, order] = classify_component(comp, edge_info);
        types.push_back(type);
        for (int v : order) to_old.push_back(v);
    }

    Subdiagram out;
    out.sub = build(types);
    out.to_old = to_old;
    out.to_new.assign(rs.diagram.rank + 1, 0);
    for (int nu = 1; nu <= out.sub.diagram.rank; ++nu) out.to_new[to_old[nu]] = nu;

    // the induced Cartan submatrix must coincide with the rebuilt one
    for (int i = 1; i <= out.sub.diagram.rank; ++i)
        for (int j = 1; j <= out.sub.diagram.rank; ++j)
            if (out.sub.cartan.at(i, j) != rs.cartan.at(to_old[i], to_old[j]))
                throw InternalError("subdiagram: induced Cartan mismatch after classification");
    return out;
}

std::vector<int> CenterData::add(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> r(factor_orders.size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = (a[k] + b[k]) % factor_orders[k];
    return r;
}

std::vector<int> CenterData::scale(int k, const std::vector<int>& a) const {
    std::vector<int> r(factor_orders.size());
    for (std::size_t j = 0; j < r.size(); ++j) {
        long long v = (static_cast<long long>(k) * a[j]) % factor_orders[j];
        if (v < 0) v += factor_orders[j];
        r[j] = static_cast<int>(v);
    }
    return r;
}

bool CenterData::is_zero(const std::vector<int>& a) const {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

long long CenterData::order() const {
    long long o = 1;
    for (int f : factor_orders) o *= f;
    return o;
}

std::vector<std::vector<int>> CenterData::all_elements() const {
    std::vector<std::vector<int>> out{zero()};
    for (std::size_t k = 0; k < factor_orders.size(); ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& e : out)
            for (int v = 0; v < factor_orders[k]; ++v) {
                auto e2 = e;
                e2[k] = v;
                next.push_back(e2);
            }
        out = std::move(next);
    }
    return out;
}

std::vector<std::vector<int>> CenterData::span(const std::vector<std::vector<int>>& gens) const {
    std::set<std::vector<int>> closed{zero()};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(closed.begin(), closed.end());
        for (const auto& e : cur)
            for (const auto& g : gens)
                if (closed.insert(add(e, g)).second) grew = true;
    }
    return {closed.begin(), closed.end()};
}

namespace {

// preset for one simple component, local indices
std::pair<std::vector<int>, std::vector<std::vector<int>>> center_component(const SimpleType& t) {
    int r = t.rank;
    std::vector<int> factors;
    std::vector<std::vector<int>> pi(r);
    switch (t.family) {
        case Family::A:
            factors = {r + 1};
            for (int i = 1; i <= r; ++i) pi[i - 1] = {i % (r + 1)};
            break;
        case Family::B:
            factors = {2};
            for (int i = 1; i <= r; ++i) pi[i - 1] = {i == r ? 1 : 0};
            break;
        case Family::C:
            factors = {2};
            for (int i = 1; i <= r; ++i) pi[i - 1] = {i % 2};
            break;
        case Family::D:
            if (r % 2 == 0) {
                factors = {2, 2};
                for (int i = 1; i <= r - 2; ++i) pi[i - 1] = {i % 2, i % 2};
                pi[r - 2] = {1, 0};
                pi[r - 1] = {0, 1};
            } else {
                factors = {4};
                for (int i = 1; i <= r - 2; ++i) pi[i - 1] = {(2 * i) % 4};
                pi[r - 2] = {3};
                pi[r - 1] = {1};
            }
            break;
        case Family::E:
            if (r == 6) {
                factors = {3};
                pi = {{1}, {0}, {2}, {0}, {1}, {2}};
            } else if (r == 7) {
                factors = {2};
                pi = {{0}, {1}, {0}, {0}, {1}, {0}, {1}};
            } else {
                factors = {};
                for (auto& v : pi) v = {};
            }
            break;
        case Family::F:
        case Family::G:
            factors = {};
            for (auto& v : pi) v = {};
            break;
    }
    return {factors, pi};
}

}  // namespace

CenterData center(const RootSystem& rs) {
    CenterData cd;
    std::vector<std::pair<std::vector<int>, std::vector<std::vector<int>>>> parts;
    for (const auto& t : rs.diagram.components) parts.push_back(center_component(t));
    for (const auto& [factors, pi] : parts)
        cd.factor_orders.insert(cd.factor_orders.end(), factors.begin(), factors.end());
    std::size_t factor_offset = 0;
    for (const auto& [factors, pi] : parts) {
        for (const auto& tuple : pi) {
            std::vector<int> full(cd.factor_orders.size(), 0);
            for (std::size_t k = 0; k < tuple.size(); ++k) full[factor_offset + k] = tuple[k];
            cd.pi.push_back(std::move(full));
        }
        factor_offset += factors.size();
    }
    // the root lattice must lie in the kernel of pi
    for (int i = 1; i <= rs.diagram.rank; ++i) {
        std::vector<int> acc = cd.zero();
        for (int j = 1; j <= rs.diagram.rank; ++j)
            acc = cd.add(acc, cd.scale(rs.cartan.at(i, j), cd.pi[j - 1]));
        if (!cd.is_zero(acc)) throw InternalError("center: pi(alpha_" + std::to_string(i) + ") != 0");
    }
    return cd;
}

}  // namespace udbound
