#include "udbound/weyl.hpp"

#include <unordered_map>

#include "udbound/errors.hpp"

namespace udbound {

namespace {

struct MatrixHash {
    std::size_t operator()(const std::vector<long long>& m) const {
        std::size_t h = 1469598103934665603ull;
        for (long long v : m) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

std::vector<long long> identity_matrix(int n) {
    std::vector<long long> m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
    return m;
}

// matrix of s_i: identity with column i replaced by the coefficients of y_i
std::vector<long long> reflection_matrix(const CartanMatrix& c, int i) {
    int n = c.n;
    auto m = identity_matrix(n);
    for (int r = 1; r <= n; ++r)
        m[static_cast<std::size_t>(r - 1) * n + (i - 1)] = r == i ? -1 : -c.at(i, r);
    return m;
}

std::vector<long long> multiply(const std::vector<long long>& a, const std::vector<long long>& b,
                                int n) {
    std::vector<long long> r(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            long long aik = a[static_cast<std::size_t>(i) * n + k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j)
                r[static_cast<std::size_t>(i) * n + j] += aik * b[static_cast<std::size_t>(k) * n + j];
        }
    return r;
}

}  // namespace

WeylGroup enumerate(const OperatorContext& ctx, int max_length, std::size_t cap) {
    const int n = ctx.nvars;
    WeylGroup g;
    g.n = n;

    std::vector<std::vector<long long>> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(reflection_matrix(ctx.cartan, i));

    std::unordered_map<std::vector<long long>, std::size_t, MatrixHash> seen;
    WeylElement id{n, identity_matrix(n), {}, 0};
    g.elements.push_back(id);
    seen.emplace(g.elements[0].matrix, 0);
    g.by_length.push_back({0});

    std::vector<std::size_t> frontier{0};
    int length = 0;
    while (!frontier.empty() && (max_length < 0 || length < max_length)) {
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier) {
            for (int i = 1; i <= n; ++i) {
                auto m = multiply(g.elements[idx].matrix, gens[i - 1], n);
                if (seen.count(m)) continue;
                if (g.elements.size() >= cap)
                    throw ResourceLimitError(
                        "Weyl enumeration exceeded the cap of " + std::to_string(cap) +
                        " elements (override with UDBOUND_GROUP_CAP)");
                WeylElement w;
                w.n = n;
                w.matrix = std::move(m);
                w.word = g.elements[idx].word;
                w.word.push_back(i);
                w.length = length + 1;
                seen.emplace(w.matrix, g.elements.size());
                next.push_back(g.elements.size());
                g.elements.push_back(std::move(w));
            }
        }
        if (!next.empty()) g.by_length.push_back(next);
        frontier = std::move(next);
        ++length;
    }
    g.complete = frontier.empty();
    return g;
}

std::vector<WeylElement> elements_of_length(const OperatorContext& ctx, int d, std::size_t cap) {
    if (d < 0) throw Error("elements_of_length: negative length");
    WeylGroup g = enumerate(ctx, d, cap);
    std::vector<WeylElement> out;
    if (d <= g.max_length())
        for (std::size_t idx : g.by_length[d]) out.push_back(g.elements[idx]);
    return out;
}

}  // namespace udbound
