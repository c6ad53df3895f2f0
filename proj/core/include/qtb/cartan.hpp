#pragma once
// Finite Cartan data for types A_N and B_n, the inverse of the z-deformed
// Cartan matrix (as a table of Laurent coefficients), and exact weight-lattice
// arithmetic in the fundamental-weight basis.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtb {

using i64 = std::int64_t;

enum class Kind { A, B };

// Cartan matrix C = (c_ij), symmetrizers r_i (r_i = 1 in type A; in type B_n,
// r_i = 2 for i < n and r_n = 1), and the symmetrized matrix B_ij = r_i c_ij.
struct CartanData {
    Kind kind;
    int rank;                           // N (type A_N) or n (type B_n)
    std::vector<std::vector<int>> c;    // rank x rank Cartan matrix
    std::vector<int> r;                 // symmetrizers
    std::vector<std::vector<int>> bsym; // r_i * c_ij

    int n() const { return rank; }
};

CartanData build_cartan(Kind kind, int rank);

// Coefficients ctilde_{ji}(r) of the inverse of the quantum Cartan matrix
// C(z), expanded as a power series in z^{-1}: entries vanish for r > -r_j and
// the table is filled by the defining recurrence C(z) * Ctilde(z) = Id,
// row-convolved level by level.
class InverseQCartanTable {
public:
    InverseQCartanTable(const CartanData& cd, int depth);

    // ctilde_{ji}(rr); 0 for rr > -r_j, throws if rr below computed depth.
    i64 at(int j, int i, int rr) const;
    int depth() const { return depth_; }
    const CartanData& cartan() const { return cd_; }

private:
    CartanData cd_;
    int depth_; // values computed for rr in [-depth_, 0]
    // table_[j][i][k] = ctilde_{j+1,i+1}(-k)
    std::vector<std::vector<std::vector<i64>>> table_;
};

// Closed form for ctilde_{ji}(r) in type B_n, valid for every r <= 0, via the
// explicit parity/interval description on one quasi-period and the sign rule
// ctilde(r - (4n-2)) = -ctilde(r).
i64 closed_form_B(int n, int j, int i, int rr);

// Weights in the fundamental-weight basis; mu[i] = coefficient of varpi_{i+1}.
using WeightVector = std::vector<i64>;

WeightVector alpha_in_varpi(const CartanData& cd, int i); // simple root alpha_i
WeightVector weyl_apply(const CartanData& cd, int i, const WeightVector& mu);
WeightVector weyl_apply_word(const CartanData& cd, const std::vector<int>& word,
                             const WeightVector& mu);

// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) for k = 1..len(word).
std::vector<WeightVector> roots_of_word(const CartanData& cd,
                                        const std::vector<int>& word);

// True iff word is a reduced word for the longest element (all beta_k positive
// and pairwise distinct, length = #positive roots).
bool is_reduced_word_w0(const CartanData& cd, const std::vector<int>& word);

// Invariant pairing (mu, nu) where mu must lie in the root lattice expressed
// in the varpi basis; exact (throws if mu is not in the root lattice).
i64 pairing_root_weight(const CartanData& cd, const WeightVector& mu,
                        const WeightVector& nu);

// Express a root-lattice element (given in varpi coordinates) in the
// alpha basis; exact integer solve, throws if not solvable over Z.
std::vector<i64> to_alpha_basis(const CartanData& cd, const WeightVector& mu);

} // namespace qtb
