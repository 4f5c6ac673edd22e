#include <doctest.h>

#include <map>

#include "testutil.hpp"
#include "udbound/errors.hpp"
#include "udbound/weyl.hpp"

using namespace udbound;

TEST_CASE("A1 is {identity, s1}") {
    OperatorContext ctx = OperatorContext::make(build("A1").cartan);
    WeylGroup g = enumerate(ctx);
    REQUIRE(g.size() == 2);
    CHECK(g.complete);
    CHECK(g.elements[0].length == 0);
    CHECK(g.elements[1].length == 1);
    CHECK(g.elements[1].word == std::vector<int>{1});
}

TEST_CASE("C3: 48 elements, one of maximal length 9") {
    OperatorContext ctx = OperatorContext::make(build("C3").cartan);
    WeylGroup g = enumerate(ctx);
    CHECK(g.size() == 48);
    CHECK(g.max_length() == 9);
    CHECK(elements_of_length(ctx, 9).size() == 1);
    CHECK(elements_of_length(ctx, 10).empty());
    CHECK(elements_of_length(ctx, 0).size() == 1);
}

TEST_CASE("F4 has 1152 elements") {
    OperatorContext ctx = OperatorContext::make(build("F4").cartan);
    CHECK(enumerate(ctx).size() == 1152);
}

TEST_CASE("levels: l(w s_i) = l(w) +- 1") {
    OperatorContext ctx = OperatorContext::make(build("C3").cartan);
    WeylGroup g = enumerate(ctx);
    std::map<std::vector<long long>, int> length_of;
    for (const auto& w : g.elements) length_of[w.matrix] = w.length;
    for (const auto& w : g.elements) {
        for (int i = 1; i <= 3; ++i) {
            // multiply via the reflection action on each basis column
            std::vector<int> word = w.word;
            word.push_back(i);
            std::vector<long long> m(9);
            for (int col = 1; col <= 3; ++col) {
                Polynomial img =
                    apply_reflections(ctx, word, Polynomial::variable(3, col));
                for (const auto& [mono, c] : img.terms())
                    for (int row = 1; row <= 3; ++row)
                        if (mono.exps[row - 1] == 1) m[(row - 1) * 3 + (col - 1)] = c.to_int64();
            }
            REQUIRE(length_of.count(m));
            int delta = length_of[m] - w.length;
            CHECK((delta == 1 || delta == -1));
        }
    }
}

TEST_CASE("length is invariant under inversion") {
    OperatorContext ctx = OperatorContext::make(build("B3").cartan);
    WeylGroup g = enumerate(ctx);
    std::map<std::vector<long long>, int> length_of;
    for (const auto& w : g.elements) length_of[w.matrix] = w.length;
    for (const auto& w : g.elements) {
        // the reversed word gives w^{-1}
        std::vector<int> rev(w.word.rbegin(), w.word.rend());
        std::vector<long long> m(9);
        for (int col = 1; col <= 3; ++col) {
            Polynomial img = apply_reflections(ctx, rev, Polynomial::variable(3, col));
            for (const auto& [mono, c] : img.terms())
                for (int row = 1; row <= 3; ++row)
                    if (mono.exps[row - 1] == 1) m[(row - 1) * 3 + (col - 1)] = c.to_int64();
        }
        REQUIRE(length_of.count(m));
        CHECK(length_of[m] == w.length);
    }
}

TEST_CASE("stored word reproduces the matrix action") {
    for (const char* name : {"A3", "C3", "G2"}) {
        RootSystem rs = build(name);
        OperatorContext ctx = OperatorContext::make(rs.cartan);
        WeylGroup g = enumerate(ctx);
        int n = rs.diagram.rank;
        for (const auto& w : g.elements) {
            for (int col = 1; col <= n; ++col) {
                Polynomial img = apply_reflections(ctx, w.word, Polynomial::variable(n, col));
                Polynomial from_matrix(n);
                for (int row = 1; row <= n; ++row) {
                    if (w.at(row, col) == 0) continue;
                    Monomial m = Monomial::one(n);
                    m.exps[row - 1] = 1;
                    from_matrix.add_term(m, w.at(row, col));
                }
                CHECK(img == from_matrix);
            }
        }
    }
}

TEST_CASE("semisimple orders multiply") {
    OperatorContext ctx = OperatorContext::make(build("A2+A2").cartan);
    CHECK(enumerate(ctx).size() == 36);
}

TEST_CASE("the cap throws a resource error") {
    OperatorContext ctx = OperatorContext::make(build("F4").cartan);
    CHECK_THROWS_AS(enumerate(ctx, -1, 100), ResourceLimitError);
}
