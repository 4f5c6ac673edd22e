#ifndef UDBOUND_POLYNOMIAL_HPP
#define UDBOUND_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "udbound/bigint.hpp"

namespace udbound {

// Exponent vector over the fundamental-weight variables x_1..x_n.
// The all-zero vector is the constant monomial 1.
struct Monomial {
    std::vector<std::uint16_t> exps;

    static Monomial one(int nvars) { return Monomial{std::vector<std::uint16_t>(nvars, 0)}; }

    int degree() const;
    bool is_one() const;
    Monomial times(const Monomial& o) const;
    // exponent of x_i, 1-based
    int exponent(int i) const { return exps[i - 1]; }

    // graded lexicographic: degree first, then lex on exponents
    friend bool operator<(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

// Sparse multivariate polynomial with exact integer coefficients,
// canonical form: no zero coefficients stored.
class Polynomial {
public:
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial one(int nvars) { return constant(nvars, 1); }
    static Polynomial constant(int nvars, BigInt c);
    static Polynomial variable(int nvars, int i);  // x_i, 1-based
    static Polynomial from_monomial(Monomial m, BigInt c = 1);

    int nvars() const { return nvars_; }
    const std::map<Monomial, BigInt>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    void add_term(const Monomial& m, const BigInt& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(int e) const;

    // defined only for homogeneous nonzero polynomials; 0 for the constants
    std::optional<int> homogeneous_degree() const;
    bool is_monic_monomial() const;
    // variables with a positive exponent in some term (1-based)
    std::set<int> support() const;
    // true iff no term is divisible by x_i
    bool free_of(int i) const;
    BigInt constant_term() const;

    // graded-lex descending display, e.g. "x1^5*x2^3*x3 - 2*x2 + 1"
    std::string format() const;
    // grammar: terms joined by '+'/'-'; term = optional integer and
    // '*'-separated factors "x<i>^<e>" | "x<i>".  Throws ParseError.
    static Polynomial parse(std::string_view text, int nvars);

private:
    int nvars_;
    std::map<Monomial, BigInt> terms_;
};

struct MonomialFacts {
    bool is_one = false;
    std::optional<int> degree;
    bool is_monic_monomial = false;
    std::set<int> support;
};

MonomialFacts monomial_facts(const Polynomial& p);

}  // namespace udbound

#endif
