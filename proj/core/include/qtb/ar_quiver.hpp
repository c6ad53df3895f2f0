#pragma once
// Auslander-Reiten quivers of Dynkin quivers of type A, their combinatorial
// counterparts built from reduced words, and the twisted/folded quivers that
// label the type-B spectral parameters.

#include "qtb/cartan.hpp"
#include "qtb/torus.hpp"

#include <optional>

namespace qtb {

// A Dynkin quiver of type A_rank with a height function xi:
// xi(j) = xi(i) + 1 for every arrow i -> j.
struct QuiverSpec {
    int rank = 0;
    std::vector<std::pair<int, int>> arrows; // (i, j) means i -> j, |i-j| = 1
    std::map<int, int> xi;                   // completed by complete_heights
};

// The linear quiver rank -> rank-1 -> ... -> 1 (descending) or
// 1 -> 2 -> ... -> rank, with xi(1) fixed.
QuiverSpec chain_quiver(int rank, bool descending, int xi1);

// Fill in all heights from the ones given (at least one); throws when the
// arrow set is not an orientation of the A_rank diagram or heights conflict.
void complete_heights(QuiverSpec& q);

struct ARVertex {
    int res;               // residue (Dynkin node / row)
    int rr;                // doubled column; actual column is rr/2
    std::vector<i64> root; // attached positive root in the alpha basis (may be empty)
};

struct ARQuiver {
    std::vector<ARVertex> verts;
    std::vector<std::pair<int, int>> arrows; // vertex indices, source -> target

    int index_of(int res, int rr) const; // -1 when absent
    bool has(int res, int rr) const { return index_of(res, rr) >= 0; }
    std::vector<int> row(int res) const; // rr values, descending
};

// Gamma_Q with vertices (i, xi(i) - 2m) and attached roots.
ARQuiver ar_quiver(const QuiverSpec& q);

// A Coxeter word adapted to Q (repeated sink reflections).
std::vector<int> adapted_word(const QuiverSpec& q);

// Combinatorial AR quiver of an arbitrary reduced word of w0: vertex k
// carries root beta_k; arrows k -> k' (k later than k') by the local rule.
ARQuiver comb_ar_quiver(const CartanData& cd, const std::vector<int>& word);

// Residue sequence of a linear extension: arrow targets are read first.
// Also returns the vertex order when asked.
std::vector<int> compatible_reading(const ARQuiver& g,
                                    std::vector<int>* vertex_order = nullptr);

// True iff the two quivers are isomorphic as residue-labelled translation
// quivers, matching the k-th latest vertex of each residue row.
bool same_shape(const ARQuiver& a, const ARQuiver& b);

enum class Flat { Greater, Less };

// Twisted AR quiver of a type A_{2n-2} quiver, with residues in 1..2n-1 and
// half-integer spin columns (hat), plus its folding to B_n labels (bar).
// The bar quiver reuses rr directly as the type-B spectral parameter.
struct TwistedQuiver {
    int n = 0;
    Flat flat = Flat::Greater;
    QuiverSpec base;
    ARQuiver hat; // residues 1..2n-1, spin row n has odd rr
    ARQuiver bar; // residues 1..n, column label r = hat rr
};

TwistedQuiver twist(const QuiverSpec& q, Flat flat);

// k(i,r): count of r' in row i of the bar quiver with r' - r a nonnegative
// multiple of 2 r_i (type B_n symmetrizers).
int k_of(const TwistedQuiver& tq, int i, int r);

// All bar labels, as a torus window.
Window window_of(const TwistedQuiver& tq);

// Largest column of residue row i of the hat quiver (doubled).
int max_rr_of_row(const ARQuiver& g, int res);

} // namespace qtb
