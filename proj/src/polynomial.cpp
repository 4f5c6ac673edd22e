#include "udbound/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "udbound/errors.hpp"

namespace udbound {

int Monomial::degree() const {
    int d = 0;
    for (auto e : exps) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](std::uint16_t e) { return e == 0; });
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t k = 0; k < exps.size(); ++k) r.exps[k] = static_cast<std::uint16_t>(r.exps[k] + o.exps[k]);
    return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exps < b.exps;
}

Polynomial Polynomial::constant(int nvars, BigInt c) {
    Polynomial p(nvars);
    p.add_term(Monomial::one(nvars), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw Error("variable index out of range: x" + std::to_string(i));
    Monomial m = Monomial::one(nvars);
    m.exps[i - 1] = 1;
    return from_monomial(m);
}

Polynomial Polynomial::from_monomial(Monomial m, BigInt c) {
    Polynomial p(static_cast<int>(m.exps.size()));
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second.is_one();
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw InternalError("polynomial arithmetic: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw InternalError("polynomial arithmetic: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw InternalError("polynomial arithmetic: variable count mismatch");
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    Polynomial r = Polynomial::one(nvars_);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

bool Polynomial::is_monic_monomial() const {
    return terms_.size() == 1 && terms_.begin()->second.is_one();
}

std::set<int> Polynomial::support() const {
    std::set<int> s;
    for (const auto& [m, c] : terms_)
        for (std::size_t k = 0; k < m.exps.size(); ++k)
            if (m.exps[k] > 0) s.insert(static_cast<int>(k) + 1);
    return s;
}

bool Polynomial::free_of(int i) const {
    for (const auto& [m, c] : terms_)
        if (m.exps[i - 1] > 0) return false;
    return true;
}

BigInt Polynomial::constant_term() const {
    auto it = terms_.find(Monomial::one(nvars_));
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::string Polynomial::format() const {
    if (terms_.empty()) return "0";
    std::string out;
    // graded-lex descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const BigInt& c = it->second;
        bool neg = c.signum() < 0;
        BigInt abs = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string vars;
        for (std::size_t k = 0; k < m.exps.size(); ++k) {
            if (m.exps[k] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(k + 1);
            if (m.exps[k] > 1) vars += "^" + std::to_string(m.exps[k]);
        }
        if (vars.empty()) {
            out += abs.to_decimal();
        } else if (abs.is_one()) {
            out += vars;
        } else {
            out += abs.to_decimal() + "*" + vars;
        }
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }
};

// unsigned decimal integer
BigInt parse_number(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        ++cur.pos;
    if (cur.pos == start) cur.fail("expected integer");
    return BigInt::from_decimal(cur.text.substr(start, cur.pos - start));
}

int parse_small_number(Cursor& cur, const char* what) {
    cur.skip_ws();
    std::size_t at = cur.pos;
    BigInt v = parse_number(cur);
    if (!v.fits_int64() || v.to_int64() > 1000000 || v.to_int64() < 0)
        throw ParseError(std::string(what) + " out of range", at);
    return static_cast<int>(v.to_int64());
}

// term := [integer] ('*'? factor)* with factor = x<i>[^<e>]; the leading
// sign is handled by the caller
void parse_term(Cursor& cur, int nvars, int sign, Polynomial& acc) {
    BigInt coeff = 1;
    Monomial mono = Monomial::one(nvars);
    bool saw_anything = false;

    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        coeff = parse_number(cur);
        saw_anything = true;
    }
    bool need_star = saw_anything;
    while (true) {
        cur.skip_ws();
        if (cur.peek() == '*') {
            ++cur.pos;
            cur.skip_ws();
        } else if (cur.peek() != 'x' || need_star) {
            break;
        }
        if (cur.peek() != 'x') cur.fail("expected variable after '*'");
        need_star = true;
        ++cur.pos;
        std::size_t at = cur.pos;
        int idx = parse_small_number(cur, "variable index");
        if (idx < 1 || idx > nvars)
            throw ParseError("variable index out of range: x" + std::to_string(idx), at);
        int exp = 1;
        if (cur.peek() == '^') {
            ++cur.pos;
            exp = parse_small_number(cur, "exponent");
        }
        mono.exps[idx - 1] = static_cast<std::uint16_t>(mono.exps[idx - 1] + exp);
        saw_anything = true;
    }
    if (!saw_anything) cur.fail("expected term");
    acc.add_term(mono, sign < 0 ? -coeff : coeff);
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int nvars) {
    Cursor cur{text};
    Polynomial acc(nvars);
    if (cur.done()) cur.fail("empty polynomial");
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        char ch = cur.peek();
        if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -1 : 1;
            ++cur.pos;
        } else if (!first) {
            cur.fail("expected '+' or '-' between terms");
        }
        // allow an explicitly signed coefficient after a separator, e.g. "+ -1*x1"
        if (cur.peek() == '-') {
            sign = -sign;
            ++cur.pos;
        } else if (cur.peek() == '+') {
            ++cur.pos;
        }
        parse_term(cur, nvars, sign, acc);
        first = false;
    }
    return acc;
}

MonomialFacts monomial_facts(const Polynomial& p) {
    MonomialFacts f;
    f.is_one = p.is_one();
    f.degree = p.homogeneous_degree();
    f.is_monic_monomial = p.is_monic_monomial();
    f.support = p.support();
    return f;
}

}  // namespace udbound
