#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qtb/isom.hpp"

#include <vector>

using namespace qtb;

namespace {

std::vector<QuiverSpec> all_orientations(int rank) {
    std::vector<QuiverSpec> out;
    for (int mask = 0; mask < (1 << (rank - 1)); ++mask) {
        QuiverSpec q;
        q.rank = rank;
        for (int e = 0; e < rank - 1; ++e) {
            if (mask & (1 << e)) q.arrows.push_back({e + 1, e + 2});
            else q.arrows.push_back({e + 2, e + 1});
        }
        q.xi[1] = 0;
        complete_heights(q);
        out.push_back(q);
    }
    return out;
}

} // namespace

TEST_CASE("KR images of the twisted seed") {
    TwistedQuiver tq = twist(chain_quiver(2, true, 0), Flat::Greater);
    PhiT phi = build_phiT(tq);
    REQUIRE(phi.pair.size() == 6); // n(2n-1) for n = 2
    for (int k = 0; k < phi.pair.size(); ++k) {
        const ARVertex& v = tq.bar.verts[phi.order[k]];
        // leading variable of the image is Y_{i,r}, and the image is dominant
        CHECK(phi.images[k].exp(v.res, v.rr) == 1);
        CHECK(phi.images[k].dominant());
        CHECK(static_cast<int>(phi.images[k].exps().size()) == k_of(tq, v.res, v.rr));
    }
    // top-of-column vertices map to single variables
    for (int k = 0; k < phi.pair.size(); ++k) {
        const ARVertex& v = tq.bar.verts[phi.order[k]];
        if (k_of(tq, v.res, v.rr) == 1)
            CHECK(phi.images[k] == YMonomial::var(v.res, v.rr));
    }
}

TEST_CASE("torus homomorphism: all orientations, both boundaries, n = 2, 3") {
    for (int n : {2, 3}) {
        for (const QuiverSpec& base : all_orientations(2 * n - 2)) {
            for (Flat flat : {Flat::Greater, Flat::Less}) {
                TwistedQuiver tq = twist(base, flat);
                PhiT phi = build_phiT(tq);
                TorusAlgebra alg = window_algebra(tq);
                CHECK_NOTHROW(verify_hom(phi, alg));
                CHECK_NOTHROW(verify_hatX(phi, alg));
                CHECK_NOTHROW(verify_frozen_relations(phi, alg));
            }
        }
    }
}

TEST_CASE("boundary heights") {
    const int n = 2;
    for (Flat flat : {Flat::Greater, Flat::Less}) {
        TwistedQuiver tq = twist(chain_quiver(2 * n - 2, true, 0), flat);
        // the adjusted spin height sits one step below the top of the spin row
        const int top = max_rr_of_row(tq.hat, n);
        if (flat == Flat::Greater) CHECK(xi_prime(tq, n) == top - 2);
        else CHECK(xi_prime(tq, n) == top);
        // folded labels agree between mirror residues
        for (int im = 1; im <= n - 1; ++im)
            CHECK(pi_vertex(tq, im).first == pi_vertex(tq, 2 * n - im).first);
    }
}

TEST_CASE("exchange = truncated T-system, n = 2") {
    for (Flat flat : {Flat::Greater, Flat::Less}) {
        TwistedQuiver tq = twist(chain_quiver(2, true, 0), flat);
        PhiT phi = build_phiT(tq);
        QCharEngine eng(build_cartan(Kind::B, 2), 80);
        for (const auto& [i, r] : phi.window) {
            const int height = k_of(tq, i, r);
            for (int s = 1; s < height; ++s)
                CHECK_NOTHROW(kr_exchange_check(phi, eng, {i, r}, s));
        }
    }
}

TEST_CASE("exchange = truncated T-system, n = 3 sample") {
    TwistedQuiver tq = twist(chain_quiver(4, true, 0), Flat::Greater);
    PhiT phi = build_phiT(tq);
    QCharEngine eng(build_cartan(Kind::B, 3), 120);
    int done = 0;
    for (const auto& [i, r] : phi.window) {
        const int height = k_of(tq, i, r);
        if (height < 2) continue;
        CHECK_NOTHROW(kr_exchange_check(phi, eng, {i, r}, 1));
        if (++done == 4) break;
    }
    CHECK(done == 4);
}
