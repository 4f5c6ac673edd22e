#include <doctest.h>

#include "testutil.hpp"
#include "udbound/errors.hpp"
#include "udbound/root_system.hpp"

using namespace udbound;

namespace {

std::vector<std::vector<int>> rows(const CartanMatrix& c) {
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= c.n; ++i) {
        std::vector<int> row;
        for (int j = 1; j <= c.n; ++j) row.push_back(c.at(i, j));
        out.push_back(row);
    }
    return out;
}

}  // namespace

TEST_CASE("Cartan matrices in the row convention") {
    CHECK(rows(build("A2").cartan) == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    CHECK(rows(build("C3").cartan) ==
          std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
    CHECK(rows(build("F4").cartan) == std::vector<std::vector<int>>{
                                          {2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
    CHECK(rows(build("G2").cartan) == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
    CHECK(rows(build("B3").cartan) ==
          std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
}

TEST_CASE("every supported type passes the Cartan invariants") {
    std::vector<std::string> names{"E6", "E7", "E8", "F4", "G2"};
    for (int n = 1; n <= 8; ++n) names.push_back("A" + std::to_string(n));
    for (int n = 2; n <= 8; ++n) names.push_back("B" + std::to_string(n));
    for (int n = 2; n <= 8; ++n) names.push_back("C" + std::to_string(n));
    for (int n = 3; n <= 8; ++n) names.push_back("D" + std::to_string(n));
    for (const auto& name : names) {
        RootSystem rs = build(name);
        CHECK_NOTHROW(rs.cartan.validate());
        CHECK(rs.diagram.rank == rs.cartan.n);
    }
}

TEST_CASE("invalid families and ranks are rejected") {
    for (const char* bad : {"A0", "B1", "C1", "D2", "E5", "E9", "F3", "F5", "G1", "G3", "H4", "Q2",
                            "A", "4", ""}) {
        CHECK_THROWS_AS(build(bad), Error);
    }
}

TEST_CASE("positive root counts") {
    CHECK(positive_root_count(build("F4").diagram) == 24);
    CHECK(positive_root_count(build("E8").diagram) == 120);
    CHECK(positive_root_count(build("A1").diagram) == 1);
    CHECK(positive_root_count(build("E6").diagram) == 36);
    CHECK(positive_root_count(build("E7").diagram) == 63);
    CHECK(positive_root_count(build("G2").diagram) == 6);
    CHECK(positive_root_count(build("B5").diagram) == 25);
    CHECK(positive_root_count(build("D6").diagram) == 30);
    // additivity over components
    CHECK(positive_root_count(build("A2+A2").diagram) == 6);
    CHECK(positive_root_count(build("B2+D5+G2").diagram) == 4 + 20 + 6);
}

TEST_CASE("1-chain predicate") {
    RootSystem c3 = build("C3");
    CHECK(is_one_chain(c3.cartan, std::vector<int>{3, 2, 1}));
    CHECK(!is_one_chain(c3.cartan, std::vector<int>{1, 2, 3}));  // c[3][2] = -2
    CHECK(is_one_chain(c3.cartan, std::vector<int>{2}));
    CHECK(!is_one_chain(c3.cartan, std::vector<int>{2, 2}));
    CHECK(!is_one_chain(c3.cartan, std::vector<int>{}));
    CHECK(!is_one_chain(c3.cartan, std::vector<int>{1, 3}));  // no bond

    RootSystem g2 = build("G2");
    CHECK(is_one_chain(g2.cartan, std::vector<int>{2, 1}));
    CHECK(!is_one_chain(g2.cartan, std::vector<int>{1, 2}));
}

TEST_CASE("contiguous pieces of a 1-chain are 1-chains") {
    testutil::Rng rng(testutil::seed_from_env() + 10);
    for (const auto& nc : testutil::property_contexts()) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<int> chain{rng.uniform(1, nc.rs.diagram.rank)};
            while (static_cast<int>(chain.size()) < nc.rs.diagram.rank) {
                const auto& nbs = nc.rs.diagram.adjacency[chain.back() - 1];
                if (nbs.empty()) break;
                int next = nbs[static_cast<std::size_t>(
                    rng.uniform(0, static_cast<int>(nbs.size()) - 1))];
                if (std::find(chain.begin(), chain.end(), next) != chain.end()) break;
                chain.push_back(next);
            }
            if (!is_one_chain(nc.rs.cartan, chain)) continue;
            for (std::size_t a = 0; a < chain.size(); ++a)
                for (std::size_t b = a; b < chain.size(); ++b) {
                    std::vector<int> piece(chain.begin() + a, chain.begin() + b + 1);
                    CHECK(is_one_chain(nc.rs.cartan, piece));
                }
        }
    }
}

TEST_CASE("subdiagram recognition: quotient removals") {
    RootSystem e6 = build("E6");
    Subdiagram d5 = subdiagram(e6, {1});
    CHECK(d5.sub.diagram.name() == "D5");

    RootSystem e7 = build("E7");
    Subdiagram a6 = subdiagram(e7, {2});
    CHECK(a6.sub.diagram.name() == "A6");
    // the path 1-3-4-5-6-7 in original labels
    CHECK(a6.to_old == std::vector<int>{0, 1, 3, 4, 5, 6, 7});

    for (int n = 4; n <= 8; ++n) {
        RootSystem dn = build("D" + std::to_string(n));
        CHECK(subdiagram(dn, {n - 1}).sub.diagram.name() == "A" + std::to_string(n - 1));
    }
}

TEST_CASE("subdiagram recognition: more shapes") {
    CHECK(subdiagram(build("E7"), {7}).sub.diagram.name() == "E6");
    CHECK(subdiagram(build("E8"), {1}).sub.diagram.name() == "D7");
    CHECK(subdiagram(build("F4"), {1}).sub.diagram.name() == "C3");
    CHECK(subdiagram(build("F4"), {4}).sub.diagram.name() == "B3");
    CHECK(subdiagram(build("F4"), {1, 4}).sub.diagram.name() == "C2");
    CHECK(subdiagram(build("E6"), {3}).sub.diagram.name() == "A1+A4");
    CHECK(subdiagram(build("E6"), {5}).sub.diagram.name() == "A4+A1");
    CHECK(subdiagram(build("B5"), {1}).sub.diagram.name() == "B4");
    CHECK(subdiagram(build("C5"), {1, 2}).sub.diagram.name() == "C3");
    CHECK(subdiagram(build("G2"), {2}).sub.diagram.name() == "A1");
    CHECK(subdiagram(build("D5"), {4, 5}).sub.diagram.name() == "A3");
    CHECK(subdiagram(build("A5"), {3}).sub.diagram.name() == "A2+A2");
}

TEST_CASE("subdiagram with nothing removed is the identity") {
    for (const char* name : {"A4", "C3", "D5", "E6", "F4", "A2+A2"}) {
        RootSystem rs = build(name);
        Subdiagram sd = subdiagram(rs, {});
        CHECK(sd.sub.diagram.name() == rs.diagram.name());
        for (int v = 1; v <= rs.diagram.rank; ++v) CHECK(sd.to_old[sd.to_new[v]] == v);
    }
}

TEST_CASE("removing everything leaves the empty diagram") {
    RootSystem a2 = build("A2");
    Subdiagram sd = subdiagram(a2, {1, 2});
    CHECK(sd.sub.diagram.rank == 0);
}

TEST_CASE("center presets") {
    CenterData e6 = center(build("E6"));
    CHECK(e6.factor_orders == std::vector<int>{3});
    CHECK(e6.pi[0] == std::vector<int>{1});  // x1
    CHECK(e6.pi[2] == std::vector<int>{2});  // x3
    CHECK(e6.pi[1] == std::vector<int>{0});  // x2
    CHECK(e6.pi[4] == std::vector<int>{1});  // x5

    CenterData e7 = center(build("E7"));
    CHECK(e7.factor_orders == std::vector<int>{2});
    CHECK(e7.pi[1] == std::vector<int>{1});
    CHECK(e7.pi[4] == std::vector<int>{1});
    CHECK(e7.pi[6] == std::vector<int>{1});
    CHECK(e7.pi[0] == std::vector<int>{0});

    CenterData d6 = center(build("D6"));
    CHECK(d6.factor_orders == std::vector<int>{2, 2});
    CHECK(d6.pi[0] == std::vector<int>{1, 1});
    CHECK(d6.pi[4] == std::vector<int>{1, 0});
    CHECK(d6.pi[5] == std::vector<int>{0, 1});

    CenterData d5 = center(build("D5"));
    CHECK(d5.factor_orders == std::vector<int>{4});
    CHECK(d5.pi[4] == std::vector<int>{1});

    CHECK(center(build("E8")).factor_orders.empty());
    CHECK(center(build("F4")).factor_orders.empty());
    CHECK(center(build("G2")).factor_orders.empty());

    CenterData a3 = center(build("A3"));
    CHECK(a3.factor_orders == std::vector<int>{4});
    CHECK(a3.pi[0] == std::vector<int>{1});
    CHECK(a3.pi[2] == std::vector<int>{3});

    CenterData pair = center(build("A2+A2"));
    CHECK(pair.factor_orders == std::vector<int>{3, 3});
    CHECK(pair.pi[0] == std::vector<int>{1, 0});
    CHECK(pair.pi[2] == std::vector<int>{0, 1});
}

TEST_CASE("type strings parse and print") {
    CHECK(SimpleType::parse("E8").to_string() == "E8");
    CHECK(build("A2+A2").diagram.name() == "A2+A2");
    CHECK(build("B2+D5").diagram.name() == "B2+D5");
    CHECK(SimpleType{Family::D, 4}.weyl_order() == 192);
    CHECK(SimpleType{Family::F, 4}.weyl_order() == 1152);
}
