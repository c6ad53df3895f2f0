#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qtb/qtchar.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace qtb;

namespace {

// Independent oracle for the spin fundamental q-character: explicit
// alternating-block enumeration, 2^n monomials.
std::set<YMonomial> spin_char_oracle(const QCharEngine& eng, int n, int r) {
    std::set<YMonomial> out;
    // decreasing sequences n > i_1 > ... > i_kk >= 0
    std::vector<std::vector<int>> seqs{{}};
    std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& cur, int lo) {
        for (int v = lo; v >= 0; --v) {
            cur.push_back(v);
            seqs.push_back(cur);
            rec(cur, v - 1);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    rec(cur, n - 1);
    for (const auto& seq : seqs) {
        YMonomial m = YMonomial::var(n, r);
        for (std::size_t j = 1; j <= seq.size(); ++j) {
            const int base = r + 4 * static_cast<int>(j) - 3;
            for (int l = 0; l <= seq[j - 1]; ++l)
                m = m * eng.torus().a_monomial(n - l, base + 2 * l).inverse();
        }
        out.insert(m);
    }
    return out;
}

} // namespace

TEST_CASE("KR monomials") {
    QCharEngine eng(build_cartan(Kind::B, 2), 40);
    CHECK(eng.kr_monomial(2, 2, -5) == YMonomial::var(2, -5) * YMonomial::var(2, -3));
    CHECK(eng.kr_monomial(1, 2, 0) == YMonomial::var(1, 0) * YMonomial::var(1, 4));
}

TEST_CASE("spin fundamental q-characters match the alternating-block formula") {
    for (int n = 2; n <= 4; ++n) {
        QCharEngine eng(build_cartan(Kind::B, n), 80);
        for (int r : {0, 1}) {
            auto got = eng.qchar_kr(n, 1, r);
            std::set<YMonomial> gs(got.begin(), got.end());
            REQUIRE(gs.size() == got.size());
            CHECK(gs == spin_char_oracle(eng, n, r));
            CHECK(gs.size() == (1u << n));
        }
    }
}

TEST_CASE("B_2 spin fundamental: frozen four-term character") {
    QCharEngine eng(build_cartan(Kind::B, 2), 40);
    const int r = 0;
    auto got = eng.qchar_kr(2, 1, r);
    std::set<YMonomial> expect{
        YMonomial::var(2, r),
        YMonomial::var(1, r + 1) * YMonomial::var(2, r + 2, -1),
        YMonomial::var(1, r + 5, -1) * YMonomial::var(2, r + 4),
        YMonomial::var(2, r + 6, -1),
    };
    CHECK(std::set<YMonomial>(got.begin(), got.end()) == expect);
}

TEST_CASE("fundamental dimensions in type B") {
    QCharEngine b2(build_cartan(Kind::B, 2), 60);
    CHECK(b2.qchar_kr(1, 1, 0).size() == 5);  // vector representation of so(5)
    CHECK(b2.qchar_kr(2, 1, 0).size() == 4);  // spin representation
    QCharEngine b3(build_cartan(Kind::B, 3), 80);
    CHECK(b3.qchar_kr(1, 1, 0).size() == 7);
    CHECK(b3.qchar_kr(3, 1, 0).size() == 8);
}

TEST_CASE("quantum T-system holds in B_2") {
    QCharEngine eng(build_cartan(Kind::B, 2), 80);
    for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 3; ++k)
            for (int r : {0, 1}) {
                CAPTURE(i);
                CAPTURE(k);
                CAPTURE(r);
                REQUIRE_NOTHROW(eng.verify_tsystem(i, k, r));
            }
}

TEST_CASE("standard basis: unit leading coefficient and bar triangularity") {
    QCharEngine eng(build_cartan(Kind::B, 2), 80);
    const YMonomial m = YMonomial::var(2, 0) * YMonomial::var(2, 2);
    auto e = eng.et_standard(m);
    auto lead = e.coeff(m).single_term();
    REQUIRE(lead.has_value());
    CHECK(lead->first == 0);
    CHECK(lead->second == 1);
}

TEST_CASE("canonical basis for spin pairs (KL recursion vs closed form)") {
    // For m = Y_{n,r} Y_{n,r+2p}: odd p with a valid partner node gives
    // E_t(m) = L_t(m) + t^{-1} L_t(Y_{n-(p+1)/2, r+p}); the partner is the
    // trivial monomial when the node index degenerates to 0; even p gives a
    // simple standard module.
    for (int n : {2, 3}) {
        QCharEngine eng(build_cartan(Kind::B, n), 30 * n);
        for (int p = 1; p <= 2 * n - 1; ++p) {
            CAPTURE(n);
            CAPTURE(p);
            const int r = 0;
            const YMonomial m = YMonomial::var(n, r) * YMonomial::var(n, r + 2 * p);
            auto kl = eng.kl_decompose(m);
            REQUIRE(kl.basis.back() == m);
            // every L_t is bar-invariant
            for (const auto& L : kl.lt) REQUIRE(eng.torus().bar(L) == L);
            if (p % 2 == 0 || p > 2 * n - 1) {
                for (std::size_t j = 0; j + 1 < kl.basis.size(); ++j)
                    REQUIRE(kl.p[j].is_zero());
                continue;
            }
            const int partner_node = n - (p + 1) / 2;
            YMonomial partner; // trivial when the node degenerates
            if (partner_node >= 1) partner = YMonomial::var(partner_node, r + p);
            bool found = false;
            for (std::size_t j = 0; j < kl.basis.size(); ++j) {
                if (kl.basis[j] == m) {
                    REQUIRE(kl.p[j] == TLaurent::one());
                } else if (kl.basis[j] == partner) {
                    REQUIRE(kl.p[j] == TLaurent::halfpow_unit(-2));
                    found = true;
                } else {
                    REQUIRE(kl.p[j].is_zero());
                }
            }
            REQUIRE(found);
        }
    }
}
