#include "udbound/search.hpp"

#include <algorithm>

#include "udbound/errors.hpp"
#include "udbound/weyl.hpp"

namespace udbound {

Step Step::one_chain(std::vector<int> path) {
    Step s;
    s.kind = StepKind::OneChain;
    s.target = path.back();
    s.exponent = static_cast<int>(path.size());
    s.word = path;
    s.path = std::move(path);
    return s;
}

Step Step::c_type(std::vector<int> path) {
    Step s;
    s.kind = StepKind::CType;
    s.target = path.front();
    s.exponent = 2 * static_cast<int>(path.size()) - 1;
    s.word = path;
    for (std::size_t k = path.size() - 1; k-- > 0;) s.word.push_back(path[k]);
    s.path = std::move(path);
    return s;
}

Certificate certificate_from_steps(int nvars, const std::vector<Step>& processing_order) {
    Certificate cert;
    cert.nvars = nvars;
    cert.monomial = Monomial::one(nvars);
    for (const auto& s : processing_order) {
        cert.monomial.exps[s.target - 1] =
            static_cast<std::uint16_t>(cert.monomial.exps[s.target - 1] + s.exponent);
        cert.word.insert(cert.word.end(), s.word.begin(), s.word.end());
        cert.degree += s.exponent;
    }
    cert.steps.assign(processing_order.rbegin(), processing_order.rend());
    return cert;
}

namespace {

// unique path between two vertices of the (forest) diagram; empty if they
// live in different components
std::vector<int> tree_path(const RootSystem& rs, int from, int to) {
    if (from == to) return {from};
    std::vector<int> parent(rs.diagram.rank + 1, 0);
    std::vector<int> queue{from};
    parent[from] = from;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int nb : rs.diagram.adjacency[v - 1]) {
            if (parent[nb]) continue;
            parent[nb] = v;
            if (nb == to) {
                std::vector<int> path{to};
                int cur = to;
                while (cur != from) {
                    cur = parent[cur];
                    path.push_back(cur);
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(nb);
        }
    }
    return {};
}

bool one_chain_path_ok(const CartanMatrix& c, const std::vector<int>& path) {
    for (std::size_t t = 0; t + 1 < path.size(); ++t)
        if (c.at(path[t + 1], path[t]) != -1) return false;
    return true;
}

bool ctype_path_ok(const CartanMatrix& c, const std::vector<int>& path) {
    const std::size_t m = path.size();
    if (m < 2) return false;
    for (std::size_t t = 0; t + 2 < m; ++t)
        if (c.at(path[t], path[t + 1]) != -1 || c.at(path[t + 1], path[t]) != -1) return false;
    return c.at(path[m - 1], path[m - 2]) == -2 && c.at(path[m - 2], path[m - 1]) == -1;
}

// direct computation partial_word(x_{v_1}^{2m-1}) = 1, cached per path
bool ctype_valid(const OperatorContext& ctx, const Step& step, CTypeCache* cache) {
    if (cache) {
        auto it = cache->valid.find(step.path);
        if (it != cache->valid.end()) return it->second;
    }
    Monomial m = Monomial::one(ctx.nvars);
    m.exps[step.target - 1] = static_cast<std::uint16_t>(step.exponent);
    bool ok = apply_word(ctx, step.word, Polynomial::from_monomial(m)).is_one();
    if (cache) cache->valid.emplace(step.path, ok);
    return ok;
}

// true when a is a better candidate: larger exponent, then OneChain over
// CType, then lexicographically smaller path
bool better_step(const Step& a, const Step& b) {
    if (a.exponent != b.exponent) return a.exponent > b.exponent;
    if (a.kind != b.kind) return a.kind == StepKind::OneChain;
    return a.path < b.path;
}

// all admissible steps with the given target among `allowed`, CType
// instances validated by direct computation
std::vector<Step> admissible_steps(const RootSystem& rs, const OperatorContext& ctx, int target,
                                   const std::vector<int>& allowed, bool allow_ctype,
                                   CTypeCache* cache) {
    std::vector<Step> out;
    for (int u : allowed) {
        std::vector<int> path = tree_path(rs, u, target);
        if (path.empty()) continue;
        bool inside = std::all_of(path.begin(), path.end(), [&](int v) {
            return std::find(allowed.begin(), allowed.end(), v) != allowed.end();
        });
        if (!inside) continue;
        if (one_chain_path_ok(rs.cartan, path)) out.push_back(Step::one_chain(path));
        if (allow_ctype && u != target) {
            std::vector<int> cpath(path.rbegin(), path.rend());  // target first
            if (ctype_path_ok(rs.cartan, cpath)) {
                Step s = Step::c_type(cpath);
                if (ctype_valid(ctx, s, cache)) out.push_back(std::move(s));
            }
        }
    }
    std::sort(out.begin(), out.end(), better_step);
    return out;
}

}  // namespace

Step longest_admissible_step(const RootSystem& rs, const OperatorContext& ctx, int target,
                             const std::set<int>& unprocessed, bool allow_ctype,
                             CTypeCache* cache) {
    if (!unprocessed.count(target)) throw Error("longest_admissible_step: target not unprocessed");
    std::vector<int> allowed(unprocessed.begin(), unprocessed.end());
    CTypeCache local;
    auto steps = admissible_steps(rs, ctx, target, allowed, allow_ctype, cache ? cache : &local);
    if (steps.empty()) throw InternalError("longest_admissible_step: no candidate found");
    return steps.front();
}

VerifyResult verify_certificate(const OperatorContext& ctx, const Certificate& cert) {
    if (cert.nvars != ctx.nvars)
        throw Error("verify_certificate: variable count mismatch");
    if (static_cast<int>(cert.monomial.exps.size()) != cert.nvars)
        throw Error("verify_certificate: malformed monomial");
    if (cert.monomial.degree() != cert.degree ||
        static_cast<int>(cert.word.size()) != cert.degree)
        throw Error("verify_certificate: degree / word-length mismatch");

    if (!cert.steps.empty()) {
        int total = 0;
        Monomial prod = Monomial::one(cert.nvars);
        std::vector<int> flat;
        for (auto it = cert.steps.rbegin(); it != cert.steps.rend(); ++it)
            flat.insert(flat.end(), it->word.begin(), it->word.end());
        if (flat != cert.word)
            throw Error("verify_certificate: word is not the concatenation of the step words");
        for (const auto& s : cert.steps) {
            total += s.exponent;
            prod.exps[s.target - 1] =
                static_cast<std::uint16_t>(prod.exps[s.target - 1] + s.exponent);
            if (s.kind == StepKind::OneChain) {
                if (s.word != s.path || s.target != s.path.back() ||
                    s.exponent != static_cast<int>(s.path.size()) ||
                    !is_one_chain(ctx.cartan, s.path))
                    throw Error("verify_certificate: malformed 1-chain step");
            } else {
                if (s.target != s.path.front() ||
                    s.exponent != 2 * static_cast<int>(s.path.size()) - 1 ||
                    s.word != Step::c_type(s.path).word || !ctype_path_ok(ctx.cartan, s.path))
                    throw Error("verify_certificate: malformed C-type step");
            }
        }
        if (total != cert.degree || !(prod == cert.monomial))
            throw Error("verify_certificate: steps do not assemble the monomial");
    }

    VerifyResult res;
    Polynomial cur = Polynomial::from_monomial(cert.monomial);
    if (cert.steps.empty()) {
        cur = apply_word(ctx, cert.word, cur);
        res.trace.push_back(cur);
        res.valid = cur.is_one();
        return res;
    }
    Monomial remaining = cert.monomial;
    bool ok = true;
    for (const auto& s : cert.steps) {
        cur = apply_word(ctx, s.word, cur);
        res.trace.push_back(cur);
        remaining.exps[s.target - 1] =
            static_cast<std::uint16_t>(remaining.exps[s.target - 1] - s.exponent);
        // each step must strip exactly its factor
        if (!(cur == Polynomial::from_monomial(remaining))) ok = false;
    }
    res.valid = ok && cur.is_one();
    return res;
}

namespace {

// exhaustive scan over processing orders of one component (vertex count
// <= the rank cap): lexicographic order, first maximum kept
std::vector<Step> search_component_exhaustive(const RootSystem& rs, const OperatorContext& ctx,
                                              const std::vector<int>& verts, bool allow_ctype,
                                              CTypeCache* cache) {
    const int m = static_cast<int>(verts.size());
    struct Cand {
        Step step;
        std::uint32_t mask;
    };
    std::vector<int> pos_of(rs.diagram.rank + 1, -1);
    for (int k = 0; k < m; ++k) pos_of[verts[k]] = k;

    std::vector<std::vector<Cand>> cands(m);
    for (int k = 0; k < m; ++k) {
        for (const auto& s : admissible_steps(rs, ctx, verts[k], verts, allow_ctype, cache)) {
            std::uint32_t mask = 0;
            for (int v : s.path) mask |= 1u << pos_of[v];
            cands[k].push_back({s, mask});
        }
    }

    std::vector<int> order(m);
    for (int k = 0; k < m; ++k) order[k] = k;

    int best_total = -1;
    std::vector<int> best_order;
    std::vector<int> best_choice;
    std::vector<int> choice(m);
    do {
        std::uint32_t avail = (1u << m) - 1;
        int total = 0;
        for (int t = 0; t < m; ++t) {
            int p = order[t];
            int picked = -1;
            for (std::size_t ci = 0; ci < cands[p].size(); ++ci) {
                if ((cands[p][ci].mask & ~avail) == 0) {
                    picked = static_cast<int>(ci);
                    break;
                }
            }
            choice[t] = picked;
            total += cands[p][picked].step.exponent;
            avail &= ~(1u << p);
        }
        if (total > best_total) {
            best_total = total;
            best_order = order;
            best_choice = choice;
        }
    } while (std::next_permutation(order.begin(), order.end()));

    std::vector<Step> steps;
    for (int t = 0; t < m; ++t) steps.push_back(cands[best_order[t]][best_choice[t]].step);
    return steps;
}

// greedy for components beyond the cap: repeatedly process the vertex
// whose best step has the largest exponent.  Ties go to the largest
// vertex index: chains run long-to-short, so the high-numbered short-end
// vertices must be consumed before their chains lose the low-numbered
// starts (the D trident would otherwise drop from the table value).
std::vector<Step> search_component_greedy(const RootSystem& rs, const OperatorContext& ctx,
                                          const std::vector<int>& verts, bool allow_ctype,
                                          CTypeCache* cache) {
    std::set<int> unprocessed(verts.begin(), verts.end());
    std::vector<Step> steps;
    while (!unprocessed.empty()) {
        std::optional<Step> best;
        for (int target : unprocessed) {
            Step s = longest_admissible_step(rs, ctx, target, unprocessed, allow_ctype, cache);
            if (!best || s.exponent >= best->exponent) best = s;
        }
        steps.push_back(*best);
        unprocessed.erase(best->target);
    }
    return steps;
}

std::vector<int> component_vertices(const RootSystem& rs, std::size_t comp) {
    auto [first, last] = rs.diagram.component_spans[comp];
    std::vector<int> v;
    for (int k = first; k <= last; ++k) v.push_back(k);
    return v;
}

// tower steps for one C_r component given by its global vertex range, or
// nullopt when some identity fails
std::optional<std::vector<Step>> c_tower_steps(const RootSystem& rs, const OperatorContext& ctx,
                                               std::size_t comp,
                                               std::vector<std::pair<int, bool>>* per_index) {
    auto [first, last] = rs.diagram.component_spans[comp];
    bool all = true;
    std::vector<Step> steps;
    for (int v = first; v <= last; ++v) {
        std::vector<int> path;
        for (int u = v; u <= last; ++u) path.push_back(u);
        Step s = path.size() == 1 ? Step::one_chain(path) : Step::c_type(path);
        Monomial m = Monomial::one(ctx.nvars);
        m.exps[v - 1] = static_cast<std::uint16_t>(s.exponent);
        bool ok = apply_word(ctx, s.word, Polynomial::from_monomial(m)).is_one();
        if (per_index) per_index->emplace_back(v - first + 1, ok);
        all = all && ok;
        steps.push_back(std::move(s));
    }
    if (!all) return std::nullopt;
    return steps;
}

}  // namespace

namespace {

// factorial order scans cap out quickly; 10! is the practical ceiling
bool use_exhaustive(std::size_t verts, const ChainOptions& options) {
    return static_cast<int>(verts) <= std::min(options.exhaustive_rank_cap, 10);
}

}  // namespace

Certificate chain_method_bound(const OperatorContext& ctx, const RootSystem& rs,
                               const ChainOptions& options) {
    CTypeCache cache;
    std::vector<Step> steps;
    for (std::size_t comp = 0; comp < rs.diagram.components.size(); ++comp) {
        auto verts = component_vertices(rs, comp);
        auto part = use_exhaustive(verts.size(), options)
                        ? search_component_exhaustive(rs, ctx, verts, options.allow_ctype, &cache)
                        : search_component_greedy(rs, ctx, verts, options.allow_ctype, &cache);
        steps.insert(steps.end(), part.begin(), part.end());
    }
    Certificate cert = certificate_from_steps(ctx.nvars, steps);
    if (!verify_certificate(ctx, cert).valid)
        throw InternalError("chain_method_bound: produced certificate failed verification");
    return cert;
}

TowerReport c_tower_check(const OperatorContext& ctx, const RootSystem& rs) {
    if (!rs.diagram.simple() || rs.diagram.components[0].family != Family::C)
        throw Error("c_tower_check: requires a simple C_n system");
    TowerReport report;
    std::vector<std::pair<int, bool>> per_index;
    auto steps = c_tower_steps(rs, ctx, 0, &per_index);
    // the remark runs i = n down to 1
    std::reverse(per_index.begin(), per_index.end());
    report.per_index = std::move(per_index);
    report.holds = steps.has_value();
    if (steps) {
        Certificate cert = certificate_from_steps(ctx.nvars, *steps);
        if (!verify_certificate(ctx, cert).valid)
            throw InternalError("c_tower_check: tower certificate failed verification");
        report.certificate = std::move(cert);
    }
    return report;
}

BruteResult brute_force_ud(const OperatorContext& ctx, const RootSystem& rs,
                           const BruteLimits& limits) {
    long long roots = positive_root_count(rs.diagram);
    int dmax = static_cast<int>(roots);
    if (limits.max_degree >= 0) dmax = std::min(dmax, limits.max_degree);

    const int n = ctx.nvars;
    if (n == 0) {
        Certificate cert;
        return {0, cert};
    }
    WeylGroup group = enumerate(ctx, dmax, limits.group_cap);

    for (int d = dmax; d >= 0; --d) {
        if (d > group.max_length()) continue;
        const auto& level = group.by_length[d];
        if (level.empty()) continue;
        // exponent vectors of total degree d, lexicographically descending
        std::vector<int> exps(n, 0);
        exps[0] = d;
        while (true) {
            Monomial m = Monomial::one(n);
            for (int k = 0; k < n; ++k) m.exps[k] = static_cast<std::uint16_t>(exps[k]);
            Polynomial p = Polynomial::from_monomial(m);
            for (std::size_t idx : level) {
                if (apply_word(ctx, group.elements[idx].word, p).is_one()) {
                    Certificate cert;
                    cert.nvars = n;
                    cert.monomial = m;
                    cert.word = group.elements[idx].word;
                    cert.degree = d;
                    if (!verify_certificate(ctx, cert).valid)
                        throw InternalError("brute_force_ud: witness failed re-verification");
                    return {d, cert};
                }
            }
            // next composition of d, descending lex: positions strictly
            // between k and n-1 are zero by the choice of k
            int k = n - 2;
            while (k >= 0 && exps[k] == 0) --k;
            if (k < 0) break;
            --exps[k];
            int tail = exps[n - 1] + 1;
            exps[n - 1] = 0;
            exps[k + 1] = tail;
        }
    }
    throw InternalError("brute_force_ud: degree 0 witness missing");
}

UdBound ud_lower_bound(const OperatorContext& ctx, const RootSystem& rs,
                       const ChainOptions& options) {
    CTypeCache cache;
    std::vector<Step> steps;
    for (std::size_t comp = 0; comp < rs.diagram.components.size(); ++comp) {
        auto verts = component_vertices(rs, comp);
        auto part =
            use_exhaustive(verts.size(), options)
                ? search_component_exhaustive(rs, ctx, verts, options.allow_ctype, &cache)
                : search_component_greedy(rs, ctx, verts, options.allow_ctype, &cache);
        int part_degree = 0;
        for (const auto& s : part) part_degree += s.exponent;
        if (options.allow_ctype && rs.diagram.components[comp].family == Family::C) {
            auto tower = c_tower_steps(rs, ctx, comp, nullptr);
            if (tower) {
                int tower_degree = 0;
                for (const auto& s : *tower) tower_degree += s.exponent;
                if (tower_degree > part_degree) part = *tower;
            }
        }
        steps.insert(steps.end(), part.begin(), part.end());
    }
    Certificate cert = certificate_from_steps(ctx.nvars, steps);
    if (!verify_certificate(ctx, cert).valid)
        throw InternalError("ud_lower_bound: certificate failed verification");
    return {cert.degree, cert};
}

}  // namespace udbound
