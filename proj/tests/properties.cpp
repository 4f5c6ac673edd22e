#include <doctest.h>

#include "testutil.hpp"
#include "udbound/weyl.hpp"

namespace {

using namespace udbound::testutil;

constexpr int kCases = 500;

TEST_CASE("property: d_i twice is zero") {
    auto r = prop_ddiff_squares_to_zero(seed_from_env(), kCases);
    INFO(r.detail);
    CHECK(r.ok);
    CHECK(r.cases >= kCases);
}

TEST_CASE("property: twisted Leibniz rule") {
    auto r = prop_twisted_leibniz(seed_from_env(), kCases);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("property: braid words define the same operator") {
    auto r = prop_braid_words_agree(seed_from_env(), kCases);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("property: closed form agrees with the division definition") {
    auto r = prop_ddiff_matches_division(seed_from_env(), kCases);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("property: power formula matches the Leibniz recursion") {
    auto r = prop_power_closed_form(seed_from_env(), kCases);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("property: 1-chain stripping identities") {
    auto r = prop_main_theorem(seed_from_env(), kCases);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("property: factors without x_i pull out of d_i") {
    auto r = prop_product_lemma(seed_from_env(), kCases);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("property: homogeneous degree drops by exactly one") {
    auto r = prop_degree_contract(seed_from_env(), kCases);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("property: root lattice lies in the kernel of every center projection") {
    auto r = prop_center_kernel();
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("property: Weyl group orders and unique longest element") {
    auto r = prop_weyl_counts();
    INFO(r.detail);
    CHECK(r.ok);
}

}  // namespace
