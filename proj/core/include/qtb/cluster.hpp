#pragma once
// Quantum cluster tori: compatible pairs from reduced words of w0, based
// quantum tori T(Lambda), toric frames, and quantum seed mutation.

#include "qtb/ar_quiver.hpp"
#include "qtb/cartan.hpp"

namespace qtb {

using IntMat = std::vector<std::vector<i64>>;

// A compatible pair (Lambda, Btilde) on index set J = {1..ell}, with
// exchangeable directions J_ex and positive diagonal d:
// sum_k b_{ks} lambda_{kt} = d_s delta_{st} for s in J_ex.
struct CompatiblePair {
    IntMat lambda;             // ell x ell, skew-symmetric
    IntMat btilde;             // ell x ell; column j meaningful for j in J_ex
    std::vector<bool> ex;      // exchangeable flags, size ell
    std::vector<i64> d;        // d_s for exchangeable s (0 elsewhere)
    std::vector<int> word;     // defining reduced word (residues i_k)

    int size() const { return static_cast<int>(lambda.size()); }
};

// k^+ / k^- companion indices of a word (1-based positions; 0 / ell+1 as
// sentinels).
int word_kplus(const std::vector<int>& word, int k);
int word_kminus(const std::vector<int>& word, int k);

// The standard compatible pair attached to a reduced word of w0.
CompatiblePair initial_pair(const CartanData& cd, const std::vector<int>& word);

// Verifies sum_k b_{ks} lambda_{kt} = d_s delta_{st} for exchangeable s;
// throws on failure.
void check_compatible(const CompatiblePair& p);

// Quantum seed mutation in direction k (0-based, exchangeable);
// involutive on (Lambda, Btilde).
CompatiblePair mutate_pair(const CompatiblePair& p, int k);

// Column split of Btilde at k: rows with positive / negative entries,
// with multiplicities |b_{jk}|.
struct ExchangeSplit {
    std::vector<std::pair<int, i64>> pos, neg; // (row, multiplicity)
};
ExchangeSplit exchange_split(const CompatiblePair& p, int k);

// Quiver arrows encoded by the principal part: b_{uv} = +1 gives u -> v.
std::vector<std::pair<int, int>> principal_arrows(const CompatiblePair& p);

// The initial pair of the twisted commutation class, indexed by the vertices
// of tq.bar in reading order; also returns that vertex order.
CompatiblePair twisted_initial_pair(const TwistedQuiver& tq, std::vector<int>* vertex_order);

// Expected arrow families of the twisted initial quiver, as vertex-label
// pairs ((i,r) -> (j,s)) on the bar labelling.
std::vector<std::pair<VarKey, VarKey>> twisted_arrow_families(const TwistedQuiver& tq);

} // namespace qtb
