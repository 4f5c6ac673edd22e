#include "udbound/demazure.hpp"

#include <algorithm>

#include "udbound/errors.hpp"
#include "udbound/weyl.hpp"

namespace udbound {

OperatorContext OperatorContext::make(const CartanMatrix& cartan) {
    OperatorContext ctx;
    ctx.cartan = cartan;
    ctx.nvars = cartan.n;
    for (int i = 1; i <= cartan.n; ++i) {
        Polynomial a(cartan.n);
        for (int j = 1; j <= cartan.n; ++j) {
            if (cartan.at(i, j) == 0) continue;
            Monomial m = Monomial::one(cartan.n);
            m.exps[j - 1] = 1;
            a.add_term(m, cartan.at(i, j));
        }
        ctx.alpha.push_back(a);
        ctx.y.push_back(Polynomial::variable(cartan.n, i) - a);
    }
    return ctx;
}

namespace {

void check_index(const OperatorContext& ctx, int i) {
    if (i < 1 || i > ctx.nvars)
        throw Error("operator index out of range: " + std::to_string(i));
}

// powers[e] = base^e, extended on demand
const Polynomial& power_of(std::vector<Polynomial>& powers, const Polynomial& base, int e) {
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * base);
    return powers[e];
}

}  // namespace

Polynomial reflect(const OperatorContext& ctx, int i, const Polynomial& p) {
    check_index(ctx, i);
    Polynomial out(ctx.nvars);
    std::vector<Polynomial> ypow{Polynomial::one(ctx.nvars)};
    for (const auto& [m, c] : p.terms()) {
        int e = m.exps[i - 1];
        if (e == 0) {
            out.add_term(m, c);
            continue;
        }
        Monomial rest = m;
        rest.exps[i - 1] = 0;
        Polynomial contrib = Polynomial::from_monomial(rest, c) * power_of(ypow, ctx.y[i - 1], e);
        out += contrib;
    }
    return out;
}

Polynomial ddiff(const OperatorContext& ctx, int i, const Polynomial& p) {
    check_index(ctx, i);
    Polynomial out(ctx.nvars);
    std::vector<Polynomial> ypow{Polynomial::one(ctx.nvars)};
    // kernels[e] = sum_{m=1}^{e} x_i^{m-1} y_i^{e-m}; kernels[e] = kernels[e-1]*y_i + x_i^{e-1}
    std::vector<Polynomial> kernels{Polynomial::zero(ctx.nvars)};
    auto kernel = [&](int e) -> const Polynomial& {
        while (static_cast<int>(kernels.size()) <= e) {
            int k = static_cast<int>(kernels.size());
            Monomial xpow = Monomial::one(ctx.nvars);
            xpow.exps[i - 1] = static_cast<std::uint16_t>(k - 1);
            Polynomial next = kernels.back() * ctx.y[i - 1];
            next.add_term(xpow, 1);
            kernels.push_back(std::move(next));
        }
        return kernels[e];
    };
    for (const auto& [m, c] : p.terms()) {
        int e = m.exps[i - 1];
        if (e == 0) continue;
        Monomial rest = m;
        rest.exps[i - 1] = 0;
        out += Polynomial::from_monomial(rest, c) * kernel(e);
    }
    return out;
}

Polynomial ddiff_by_division(const OperatorContext& ctx, int i, const Polynomial& p) {
    check_index(ctx, i);
    Polynomial num = p - reflect(ctx, i, p);
    if (num.is_zero()) return num;

    // divide by alpha_i = 2 x_i - gamma as a univariate polynomial in x_i,
    // coefficients in the remaining variables
    Polynomial gamma = -ctx.alpha[i - 1];
    {
        Monomial xi = Monomial::one(ctx.nvars);
        xi.exps[i - 1] = 1;
        gamma.add_term(xi, 2);  // strip the 2 x_i head
    }
    int top = 0;
    for (const auto& [m, c] : num.terms()) top = std::max(top, static_cast<int>(m.exps[i - 1]));
    // coefficient polynomials of x_i^k
    std::vector<Polynomial> coeff(top + 1, Polynomial(ctx.nvars));
    for (const auto& [m, c] : num.terms()) {
        Monomial rest = m;
        int e = rest.exps[i - 1];
        rest.exps[i - 1] = 0;
        coeff[e].add_term(rest, c);
    }
    if (top == 0) throw InternalError("ddiff_by_division: numerator free of x_i but nonzero");
    std::vector<Polynomial> q(top, Polynomial(ctx.nvars));
    for (int k = top; k >= 1; --k) {
        Polynomial qk(ctx.nvars);
        for (const auto& [m, c] : coeff[k].terms()) qk.add_term(m, c.div_exact(2));
        q[k - 1] = qk;
        // remove q_{k-1} * (2 x_i - gamma) from the remainder
        coeff[k] = Polynomial(ctx.nvars);
        coeff[k - 1] += qk * gamma;
    }
    if (!coeff[0].is_zero())
        throw InternalError("ddiff_by_division: nonzero remainder (Cartan convention bug?)");
    Polynomial out(ctx.nvars);
    for (int k = 0; k < top; ++k) {
        for (const auto& [m, c] : q[k].terms()) {
            Monomial full = m;
            full.exps[i - 1] = static_cast<std::uint16_t>(k);
            out.add_term(full, c);
        }
    }
    return out;
}

Polynomial apply_word(const OperatorContext& ctx, std::span<const int> word, const Polynomial& p) {
    Polynomial cur = p;
    for (std::size_t k = word.size(); k-- > 0;) {
        if (cur.is_zero()) return cur;
        cur = ddiff(ctx, word[k], cur);
    }
    return cur;
}

Polynomial apply_reflections(const OperatorContext& ctx, std::span<const int> word,
                             const Polynomial& p) {
    Polynomial cur = p;
    for (std::size_t k = word.size(); k-- > 0;) cur = reflect(ctx, word[k], cur);
    return cur;
}

std::map<std::size_t, BigInt> schubert_expand(const OperatorContext& ctx, const Polynomial& p,
                                              const std::vector<WeylElement>& elements) {
    auto deg = p.homogeneous_degree();
    if (!deg) throw Error("schubert_expand: polynomial must be homogeneous");
    for (const auto& w : elements)
        if (w.length != *deg)
            throw Error("schubert_expand: element length " + std::to_string(w.length) +
                        " != degree " + std::to_string(*deg));
    std::map<std::size_t, BigInt> out;
    for (std::size_t k = 0; k < elements.size(); ++k) {
        Polynomial img = apply_word(ctx, elements[k].word, p);
        BigInt eps = img.constant_term();
        if (!eps.is_zero()) out.emplace(k, eps);
    }
    return out;
}

}  // namespace udbound
