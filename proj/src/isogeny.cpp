#include "udbound/isogeny.hpp"

#include <algorithm>

#include "udbound/demazure.hpp"
#include "udbound/errors.hpp"

namespace udbound {

std::string lattice_name(Lattice l) {
    switch (l) {
        case Lattice::SimplyConnected: return "sc";
        case Lattice::Adjoint: return "adjoint";
        case Lattice::HalfSpin: return "hs";
    }
    return "?";
}

bool CenterQuotient::vanishes(const std::vector<int>& e) const {
    return std::find(kernel_elements.begin(), kernel_elements.end(), e) != kernel_elements.end();
}

int CenterQuotient::coset_order(const std::vector<int>& e) const {
    std::vector<int> acc = center.zero();
    for (int t = 1;; ++t) {
        acc = center.add(acc, e);
        if (vanishes(acc)) return t;
        if (t > center.order()) throw InternalError("coset_order: runaway loop");
    }
}

bool CenterQuotient::generates(const std::vector<std::vector<int>>& elems) const {
    std::vector<std::vector<int>> gens = elems;
    gens.insert(gens.end(), kernel_gens.begin(), kernel_gens.end());
    return static_cast<long long>(center.span(gens).size()) == center.order();
}

CenterQuotient center_quotient(const RootSystem& rs, Lattice lattice) {
    CenterQuotient zq;
    zq.center = center(rs);
    switch (lattice) {
        case Lattice::Adjoint:
            break;  // Z = full center, H = 0
        case Lattice::SimplyConnected:
            // Z trivial, Z* trivial: H is everything
            for (std::size_t k = 0; k < zq.center.factor_orders.size(); ++k) {
                std::vector<int> g = zq.center.zero();
                g[k] = 1;
                zq.kernel_gens.push_back(g);
            }
            break;
        case Lattice::HalfSpin: {
            if (!rs.diagram.simple() || rs.diagram.components[0].family != Family::D ||
                rs.diagram.components[0].rank % 2 != 0)
                throw Error("half-spin lattice requires a single D component of even rank");
            // kill the second Z/2 factor; pi becomes x_i -> i mod 2
            std::vector<int> g = zq.center.zero();
            g[1] = 1;
            zq.kernel_gens.push_back(g);
            break;
        }
    }
    zq.kernel_elements = zq.center.span(zq.kernel_gens);
    return zq;
}

std::vector<std::vector<int>> generating_sets(const RootSystem& rs, const CenterQuotient& zq) {
    const int n = rs.diagram.rank;
    std::vector<std::vector<int>> found;
    auto is_superset_of_found = [&](const std::vector<int>& s) {
        for (const auto& f : found)
            if (std::includes(s.begin(), s.end(), f.begin(), f.end())) return true;
        return false;
    };
    // a minimal generating set never exceeds the cyclic factor count
    const int max_size = std::min<int>(n, static_cast<int>(zq.center.factor_orders.size()));
    // subsets ordered by size, then lexicographically
    for (int size = 0; size <= max_size; ++size) {
        std::vector<int> idx(size);
        for (int k = 0; k < size; ++k) idx[k] = k + 1;
        while (true) {
            if (!is_superset_of_found(idx)) {
                std::vector<std::vector<int>> images;
                for (int v : idx) images.push_back(zq.center.pi[v - 1]);
                if (zq.generates(images)) found.push_back(idx);
            }
            if (size == 0) break;
            // next combination
            int k = size - 1;
            while (k >= 0 && idx[k] == n - (size - 1 - k)) --k;
            if (k < 0) break;
            ++idx[k];
            for (int j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (size == 0 && !found.empty()) break;  // trivial Z*: only the empty set is minimal
    }
    if (found.empty()) throw InternalError("generating_sets: no generating set (invalid CenterData)");
    return found;
}

bool Substitution::trivial() const {
    for (const auto& [i, a] : coeffs)
        for (int v : a)
            if (v != 0) return false;
    return true;
}

Substitution substitution_for(const RootSystem& rs, const CenterQuotient& zq,
                              const std::vector<int>& removed) {
    Substitution out;
    out.removed = removed;
    std::sort(out.removed.begin(), out.removed.end());
    const int r = static_cast<int>(out.removed.size());

    std::vector<int> orders(r);
    for (int j = 0; j < r; ++j) orders[j] = zq.coset_order(zq.center.pi[out.removed[j] - 1]);

    for (int i = 1; i <= rs.diagram.rank; ++i) {
        if (std::find(out.removed.begin(), out.removed.end(), i) != out.removed.end()) continue;
        std::vector<int> best;
        int best_total = -1;
        std::vector<int> a(r, 0);
        while (true) {
            std::vector<int> acc = zq.center.pi[i - 1];
            for (int j = 0; j < r; ++j)
                acc = zq.center.add(acc, zq.center.scale(a[j], zq.center.pi[out.removed[j] - 1]));
            if (zq.vanishes(acc)) {
                int total = 0;
                for (int v : a) total += v;
                if (best_total < 0 || total < best_total ||
                    (total == best_total && a < best)) {
                    best_total = total;
                    best = a;
                }
            }
            int j = r - 1;
            while (j >= 0 && a[j] == orders[j] - 1) --j;
            if (j < 0) break;
            ++a[j];
            for (int k = j + 1; k < r; ++k) a[k] = 0;
        }
        if (best_total < 0)
            throw InternalError("substitution_for: no coefficients found; removal set not generating?");
        out.coeffs[i] = best;
    }
    return out;
}

namespace {

Certificate translate_certificate(const Certificate& cert, const std::vector<int>& to_old,
                                  int full_nvars) {
    Certificate out;
    out.nvars = full_nvars;
    out.degree = cert.degree;
    out.monomial = Monomial::one(full_nvars);
    for (std::size_t k = 0; k < cert.monomial.exps.size(); ++k)
        out.monomial.exps[to_old[k + 1] - 1] = cert.monomial.exps[k];
    for (int w : cert.word) out.word.push_back(to_old[w]);
    for (const auto& s : cert.steps) {
        Step t = s;
        t.target = to_old[s.target];
        for (auto& v : t.path) v = to_old[v];
        for (auto& v : t.word) v = to_old[v];
        out.steps.push_back(std::move(t));
    }
    return out;
}

Polynomial z_monomial_polynomial(const OperatorContext& full_ctx, const Substitution& subst,
                                 const Certificate& cert) {
    Polynomial p = Polynomial::one(full_ctx.nvars);
    for (int i = 1; i <= full_ctx.nvars; ++i) {
        int e = cert.monomial.exps[i - 1];
        if (e == 0) continue;
        auto it = subst.coeffs.find(i);
        if (it == subst.coeffs.end() && !subst.removed.empty() &&
            std::find(subst.removed.begin(), subst.removed.end(), i) != subst.removed.end())
            throw Error("verify_z_certificate: monomial touches a removed vertex");
        Polynomial z = Polynomial::variable(full_ctx.nvars, i);
        if (it != subst.coeffs.end())
            for (std::size_t j = 0; j < it->second.size(); ++j)
                if (it->second[j] != 0)
                    z += Polynomial::constant(full_ctx.nvars, it->second[j]) *
                         Polynomial::variable(full_ctx.nvars, subst.removed[j]);
        p = p * z.pow(e);
    }
    return p;
}

}  // namespace

bool verify_z_certificate(const OperatorContext& full_ctx, const Substitution& subst,
                          const Certificate& cert) {
    Polynomial p = z_monomial_polynomial(full_ctx, subst, cert);
    return apply_word(full_ctx, cert.word, p).is_one();
}

CdBoundResult cd_upper_bound(const GroupSpec& spec) {
    const RootSystem& rs = spec.rs;
    OperatorContext ctx = OperatorContext::make(rs.cartan);
    CdBoundResult out;
    out.group = rs.diagram.name() + ":" + lattice_name(spec.lattice);
    out.dim = positive_root_count(rs.diagram);

    CenterQuotient zq = center_quotient(rs, spec.lattice);
    auto sets = generating_sets(rs, zq);

    if (sets.size() == 1 && sets[0].empty()) {
        // trivial Z*: the simply-connected path
        UdBound ud = ud_lower_bound(ctx, rs, spec.chain);
        out.ud_degree = ud.degree;
        out.bound = out.dim - ud.degree;
        out.certificate = ud.certificate;
        out.certificate_local = ud.certificate;
        out.substitution.removed = {};
        out.verified = verify_certificate(ctx, out.certificate).valid;
        out.alternatives.emplace_back(std::vector<int>{}, ud.degree);
        return out;
    }

    struct Choice {
        std::vector<int> removed;
        int degree;
        Certificate translated;
        Certificate local;
        std::string sub_name;
    };
    std::optional<Choice> best;
    for (const auto& removal : sets) {
        std::set<int> removed_set(removal.begin(), removal.end());
        Subdiagram sd = subdiagram(rs, removed_set);
        int degree = 0;
        Certificate translated;
        translated.nvars = rs.diagram.rank;
        translated.monomial = Monomial::one(rs.diagram.rank);
        Certificate local;
        std::string sub_name;
        if (sd.sub.diagram.rank > 0) {
            OperatorContext sub_ctx = OperatorContext::make(sd.sub.cartan);
            UdBound ud = ud_lower_bound(sub_ctx, sd.sub, spec.chain);
            degree = ud.degree;
            translated = translate_certificate(ud.certificate, sd.to_old, rs.diagram.rank);
            local = ud.certificate;
            sub_name = sd.sub.diagram.name();
        }
        out.alternatives.emplace_back(removal, degree);
        if (!best || degree > best->degree)
            best = Choice{removal, degree, translated, local, sub_name};
    }

    out.removed = best->removed;
    out.sub_name = best->sub_name;
    out.ud_degree = best->degree;
    out.bound = out.dim - best->degree;
    out.certificate = best->translated;
    out.certificate_local = best->local;
    out.substitution = substitution_for(rs, zq, best->removed);
    out.verified = verify_z_certificate(ctx, out.substitution, out.certificate);
    return out;
}

ProductQuotientResult product_quotient_bound(const SimpleType& type, int m,
                                             std::optional<std::vector<int>> removed) {
    if (m < 1) throw Error("product_quotient_bound: m must be >= 1");
    RootSystem rs = build(std::vector<SimpleType>{type});
    OperatorContext ctx = OperatorContext::make(rs.cartan);
    CenterQuotient zq = center_quotient(rs, Lattice::Adjoint);

    ProductQuotientResult out;
    out.type = type;
    out.m = m;
    out.dim = m * positive_root_count(rs.diagram);

    UdBound full = ud_lower_bound(ctx, rs);
    out.ud_full = full.degree;
    out.full_certificate = full.certificate;

    std::vector<int> removal;
    if (removed) {
        removal = *removed;
        std::sort(removal.begin(), removal.end());
        std::vector<std::vector<int>> images;
        for (int v : removal) {
            if (v < 1 || v > rs.diagram.rank)
                throw Error("product_quotient_bound: removal vertex out of range");
            images.push_back(zq.center.pi[v - 1]);
        }
        if (!zq.generates(images))
            throw Error("product_quotient_bound: removal set does not generate Z*");
    } else {
        int best_degree = -1;
        for (const auto& candidate : generating_sets(rs, zq)) {
            std::set<int> removed_set(candidate.begin(), candidate.end());
            Subdiagram sd = subdiagram(rs, removed_set);
            int degree = 0;
            if (sd.sub.diagram.rank > 0) {
                OperatorContext sub_ctx = OperatorContext::make(sd.sub.cartan);
                degree = ud_lower_bound(sub_ctx, sd.sub).degree;
            }
            if (degree > best_degree) {
                best_degree = degree;
                removal = candidate;
            }
        }
    }
    out.removed = removal;

    std::set<int> removed_set(removal.begin(), removal.end());
    Subdiagram sd = subdiagram(rs, removed_set);
    out.sub_name = sd.sub.diagram.rank > 0 ? sd.sub.diagram.name() : "";
    if (sd.sub.diagram.rank > 0) {
        OperatorContext sub_ctx = OperatorContext::make(sd.sub.cartan);
        UdBound sub = ud_lower_bound(sub_ctx, sd.sub);
        out.ud_sub = sub.degree;
        out.sub_certificate = translate_certificate(sub.certificate, sd.to_old, rs.diagram.rank);
    } else {
        out.sub_certificate.nvars = rs.diagram.rank;
        out.sub_certificate.monomial = Monomial::one(rs.diagram.rank);
    }

    out.bound = out.dim - static_cast<long long>(m - 1) * out.ud_full - out.ud_sub;
    out.substitution = substitution_for(rs, zq, removal);
    out.verified = verify_certificate(ctx, out.full_certificate).valid &&
                   verify_z_certificate(ctx, out.substitution, out.sub_certificate);
    return out;
}

}  // namespace udbound
