#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qtb/ab_corr.hpp"

#include <random>

using namespace qtb;

namespace {

YMonomial mono(std::initializer_list<std::tuple<int, int, int>> vars) {
    YMonomial m;
    for (const auto& [i, r, e] : vars) m.mul_var(i, r, e);
    return m;
}

} // namespace

TEST_CASE("initial support matches the twisted labelling") {
    for (int n = 2; n <= 5; ++n) {
        TwistedQuiver tq = twist(chain_quiver(2 * n - 2, true, 0), Flat::Less);
        std::set<VarKey> hat;
        for (const ARVertex& v : tq.hat.verts) hat.insert({v.res, v.rr});
        CHECK(delta_B(n).supp == hat);
        CHECK(delta_B(n).supp.size() == static_cast<std::size_t>(n * (2 * n - 1)));
        CHECK(delta_A_hat(n).supp.size() == static_cast<std::size_t>(n * (2 * n - 1)));
    }
}

TEST_CASE("move sequence reaches the announced endpoint") {
    for (int n = 2; n <= 5; ++n) CHECK_NOTHROW(run_transform(n));
    const auto seq2 = move_sequence(2);
    REQUIRE(seq2.size() == 1);
    CHECK(seq2[0].i0 == 2);
    CHECK(seq2[0].rr0 == -4);
    CHECK(move_sequence(3).size() == 3);
}

TEST_CASE("single move: tropical rule and exact inversion") {
    // one isolated move on the n = 2 support
    auto run_unit = [](i64 c1, i64 c2, i64 c3) {
        WellArrangedMap d = delta_B(2);
        ParamMap c;
        if (c1) c[{2, -3}] = c1;
        if (c2) c[{1, -4}] = c2;
        if (c3) c[{2, -5}] = c3;
        beta_apply(d, c, {2, -4}, true);
        return std::array<i64, 3>{c.count({1, -3}) ? c[{1, -3}] : 0,
                                  c.count({2, -4}) ? c[{2, -4}] : 0,
                                  c.count({1, -5}) ? c[{1, -5}] : 0};
    };
    CHECK(run_unit(1, 0, 0) == std::array<i64, 3>{0, 0, 1});
    CHECK(run_unit(0, 1, 0) == std::array<i64, 3>{1, 0, 1});
    CHECK(run_unit(0, 0, 1) == std::array<i64, 3>{1, 0, 0});

    // forward then backward restores both the support and the parameters
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        WellArrangedMap d = delta_B(2);
        ParamMap c;
        for (const VarKey& cell : {VarKey{2, -3}, VarKey{1, -4}, VarKey{2, -5}}) {
            const i64 v = rng() % 5;
            if (v) c[cell] = v;
        }
        const WellArrangedMap d0 = d;
        const ParamMap c0 = c;
        beta_apply(d, c, {2, -4}, true);
        beta_apply(d, c, {2, -4}, false);
        CHECK(d.supp == d0.supp);
        CHECK(c == c0);
    }
}

TEST_CASE("dictionary, n = 2 (twelve lines)") {
    const int n = 2;
    const std::vector<std::pair<YMonomial, YMonomial>> a_to_b = {
        {mono({{1, 0, 1}}), mono({{1, 0, 1}})},
        {mono({{1, -2, 1}}), mono({{2, -5, 1}})},
        {mono({{1, -4, 1}}), mono({{2, -3, 1}})},
        {mono({{2, -1, 1}}), mono({{2, -1, 1}})},
        {mono({{2, -3, 1}}), mono({{2, -5, 1}, {2, -3, 1}})},
        {mono({{3, -2, 1}}), mono({{1, -2, 1}})},
    };
    for (const auto& [in, out] : a_to_b)
        CHECK(transport(n, in, ABDirection::AtoB) == out);

    const std::vector<std::pair<YMonomial, YMonomial>> b_to_a = {
        {mono({{1, 0, 1}}), mono({{1, 0, 1}})},
        {mono({{1, -4, 1}}), mono({{1, -2, 1}, {1, -4, 1}})},
        {mono({{2, -1, 1}}), mono({{2, -1, 1}})},
        {mono({{2, -3, 1}}), mono({{1, -4, 1}})},
        {mono({{2, -5, 1}}), mono({{1, -2, 1}})},
        {mono({{1, -2, 1}}), mono({{3, -2, 1}})},
    };
    for (const auto& [in, out] : b_to_a)
        CHECK(transport(n, in, ABDirection::BtoA) == out);
}

TEST_CASE("dictionary, n = 3 (thirty lines)") {
    const int n = 3;
    const std::vector<std::pair<YMonomial, YMonomial>> a_to_b = {
        {mono({{1, 0, 1}}), mono({{1, 0, 1}})},
        {mono({{1, -2, 1}}), mono({{1, -4, 1}})},
        {mono({{1, -4, 1}}), mono({{3, -11, 1}})},
        {mono({{1, -6, 1}}), mono({{3, -5, 1}})},
        {mono({{1, -8, 1}}), mono({{1, -12, 1}})},
        {mono({{2, -1, 1}}), mono({{2, -2, 1}})},
        {mono({{2, -3, 1}}), mono({{3, -7, 1}})},
        {mono({{2, -5, 1}}), mono({{3, -5, 1}, {3, -11, 1}})},
        {mono({{2, -7, 1}}), mono({{3, -9, 1}})},
        {mono({{3, -2, 1}}), mono({{3, -3, 1}})},
        {mono({{3, -4, 1}}), mono({{3, -7, 1}, {3, -5, 1}})},
        {mono({{3, -6, 1}}), mono({{3, -11, 1}, {3, -9, 1}})},
        {mono({{4, -3, 1}}), mono({{2, -4, 1}})},
        {mono({{4, -5, 1}}), mono({{2, -8, 1}})},
        {mono({{5, -4, 1}}), mono({{1, -6, 1}})},
    };
    for (const auto& [in, out] : a_to_b)
        CHECK(transport(n, in, ABDirection::AtoB) == out);

    const std::vector<std::pair<YMonomial, YMonomial>> b_to_a = {
        {mono({{1, 0, 1}}), mono({{1, 0, 1}})},
        {mono({{1, -4, 1}}), mono({{1, -2, 1}})},
        {mono({{1, -8, 1}}), mono({{1, -6, 1}, {1, -4, 1}})},
        {mono({{1, -12, 1}}), mono({{1, -8, 1}})},
        {mono({{2, -2, 1}}), mono({{2, -1, 1}})},
        {mono({{2, -6, 1}}), mono({{2, -3, 1}, {1, -6, 1}})},
        {mono({{2, -10, 1}}), mono({{1, -4, 1}, {2, -7, 1}})},
        {mono({{3, -3, 1}}), mono({{3, -2, 1}})},
        {mono({{3, -5, 1}}), mono({{1, -6, 1}})},
        {mono({{3, -7, 1}}), mono({{2, -3, 1}})},
        {mono({{3, -9, 1}}), mono({{2, -7, 1}})},
        {mono({{3, -11, 1}}), mono({{1, -4, 1}})},
        {mono({{2, -4, 1}}), mono({{4, -3, 1}})},
        {mono({{2, -8, 1}}), mono({{4, -5, 1}})},
        {mono({{1, -6, 1}}), mono({{5, -4, 1}})},
    };
    for (const auto& [in, out] : b_to_a)
        CHECK(transport(n, in, ABDirection::BtoA) == out);
}

TEST_CASE("fundamental dictionary covers both windows") {
    for (int n = 2; n <= 4; ++n) {
        const auto ab = fundamental_dictionary(n, ABDirection::AtoB);
        const auto ba = fundamental_dictionary(n, ABDirection::BtoA);
        CHECK(ab.size() == static_cast<std::size_t>(n * (2 * n - 1)));
        CHECK(ba.size() == static_cast<std::size_t>(n * (2 * n - 1)));
        for (const auto& [in, out] : ab) {
            CHECK(out.dominant());
            CHECK(transport(n, out, ABDirection::BtoA) == in);
        }
        for (const auto& [in, out] : ba) {
            CHECK(out.dominant());
            CHECK(transport(n, out, ABDirection::AtoB) == in);
        }
    }
}

TEST_CASE("seeded round trips on random dominant parameters") {
    std::mt19937 rng(20260825);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3); // n in 2..4
        // random dominant monomial on the type A window
        YMonomial a;
        for (int i = 1; i <= 2 * n - 1; ++i)
            for (int k = 0; k <= 2 * n - i - 1; ++k) {
                const int e = static_cast<int>(rng() % 4);
                if (e && rng() % 2) a.mul_var(i, -i + 1 - 2 * k, e);
            }
        const YMonomial b = transport(n, a, ABDirection::AtoB);
        CHECK(transport(n, b, ABDirection::BtoA) == a);

        // random dominant monomial on the type B window
        YMonomial bm;
        for (const auto& [j, rr] : delta_B(n).supp) {
            const int e = static_cast<int>(rng() % 4);
            if (e && rng() % 2) bm.mul_var(j <= n ? j : 2 * n - j, rr, e);
        }
        const YMonomial am = transport(n, bm, ABDirection::BtoA);
        CHECK(transport(n, am, ABDirection::AtoB) == bm);
    }
}
