#pragma once
// The type A <-> type B dictionary for simple modules: well-arranged
// supports on the half-integer grid, braid (beta) moves with tropical
// transport of Lusztig parameters, and the resulting fundamental-module
// dictionary.
//
// Conventions: columns are stored doubled everywhere (a grid column r of the
// half-integer lattice is stored as rr = 2r).  B-side monomials use the same
// doubled spectral parameters as the rest of the library; A-side monomials
// use the undoubled integer parameters of the type A spectral convention.

#include "qtb/ar_quiver.hpp"

namespace qtb {

// A 0/1 support on the grid I_A x (doubled columns), column-wise commuting.
struct WellArrangedMap {
    int n = 0;
    std::set<VarKey> supp; // (residue in 1..2n-1, doubled column)

    bool contains(int i, int rr) const { return supp.count({i, rr}) > 0; }
};

// Nonnegative multiplicities on the cells of a support.
using ParamMap = std::map<VarKey, i64>;

// Checks that residues within each fixed column pairwise commute.
bool is_well_arranged(const WellArrangedMap& d);

// Column reading (top columns first); well-defined up to commutation.
std::vector<int> column_reading(const WellArrangedMap& d);

// The initial support: the twisted labelling of the descending type
// A_{2n-2} chain with height 0 at node 1 (boundary '<').
WellArrangedMap delta_B(int n);

// The final support of the transform, as an explicit set.
WellArrangedMap delta_A_hat(int n);

struct BetaMove {
    int i0 = 0;  // residue, 2..2n-1
    int rr0 = 0; // doubled integer column
};

// One braid move: rewrites the three cells around (i0, rr0) and transports
// the attached parameters tropically.  forward moves the cells
// {(i0, rr0 +- 1), (i0-1, rr0)} to {(i0-1, rr0 +- 1), (i0, rr0)};
// backward is the exact inverse.  Throws if the preconditions fail.
void beta_apply(WellArrangedMap& d, ParamMap& c, const BetaMove& m, bool forward);

// The fixed move sequence transforming delta_B into delta_A_hat, in
// application order.
std::vector<BetaMove> move_sequence(int n);

// Applies the full sequence to delta_B and checks the announced endpoint.
WellArrangedMap run_transform(int n);

// Bijection between the final support and the type A labelling
// {(i, -i+1-2k)}: cell -> undoubled A-side variable key, and back.
VarKey hat_to_A(const WellArrangedMap& dA, VarKey cell);
VarKey A_to_hat(const WellArrangedMap& dA, VarKey label);

enum class ABDirection { AtoB, BtoA };

// Transport of a simple-module label: the monomial encodes the Lusztig
// parameter (exponent of each variable = multiplicity of its cell).
YMonomial transport(int n, const YMonomial& m, ABDirection dir);

// The dictionary on all fundamental (unit) parameters of the source side.
std::vector<std::pair<YMonomial, YMonomial>> fundamental_dictionary(int n, ABDirection dir);

} // namespace qtb
