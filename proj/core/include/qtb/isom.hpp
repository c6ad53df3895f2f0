#pragma once
// The torus isomorphism: cluster variables of the twisted initial seed are
// mapped to truncated Kirillov-Reshetikhin data in the quantum torus of type
// B_n, and the defining relations are verified exactly.

#include "qtb/cluster.hpp"
#include "qtb/qtchar.hpp"

#include <memory>

namespace qtb {

struct PhiT {
    TwistedQuiver tq;
    CompatiblePair pair;
    std::vector<int> order;        // seed position -> bar vertex index
    std::vector<YMonomial> images; // seed position -> KR monomial
    Window window;
    int position_of(int res, int rr) const; // bar label -> seed position
};

PhiT build_phiT(const TwistedQuiver& tq);

// A torus algebra of type B_n deep enough for all window computations.
TorusAlgebra window_algebra(const TwistedQuiver& tq, int margin = 64);

// Lambda(e_a, e_b) == -N(image_a, image_b) for every ordered pair of seed
// positions; throws on the first failure.
void verify_hom(const PhiT& phi, const TorusAlgebra& alg);

// The image of each exchangeable X^{btilde column} is exactly the inverse
// A-monomial underline(A_{i, r - r_i})^{-1}; throws on failure.
void verify_hatX(const PhiT& phi, const TorusAlgebra& alg);

// Boundary data: the largest spectral label of each unfolded residue row
// (adjusted on the spin row for the '>' boundary), and its folded vertex.
int xi_prime(const TwistedQuiver& tq, int imath);
VarKey pi_vertex(const TwistedQuiver& tq, int imath);

// Commutation of the frozen boundary generators against the height order
// graph; throws on failure.
void verify_frozen_relations(const PhiT& phi, const TorusAlgebra& alg);

// Exchange verification at an exchangeable vertex (i, r), level s:
//  (a) the Btilde column at the vertex matches the expected arrow families;
//  (b) the truncated quantum T-system instance (i, s, r) holds with the
//      t-powers of the untruncated identity.
void kr_exchange_check(const PhiT& phi, const QCharEngine& eng, VarKey v, int s);

} // namespace qtb
