#pragma once

#include <map>

#include "klr/partition.hpp"
#include "klr/poly.hpp"

namespace klr {

/// Schur polynomial via the bialternant formula, m variables.
/// Zero when the partition has more than m nonzero parts.
MultiPoly schurBialternant(const Partition& alpha, int m);

/// Elementary symmetric polynomial e_deg in `vars` variables; zero outside 0..vars.
MultiPoly elementary(int deg, int vars);

/// Giambelli determinant det[e_{alpha_i + j - i}] in m variables; equals the
/// Schur polynomial of the conjugate partition.
MultiPoly schurGiambelli(const Partition& alpha, int m);

/// Expand a symmetric polynomial in the Schur basis of its arity.
/// Throws if the input is not symmetric (leading exponent not a partition).
std::map<Partition, Int> schurExpand(const MultiPoly& sym);

/// Littlewood-Richardson coefficient: coefficient of s_gamma in s_alpha * s_beta.
Int lrCoeff(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// Coefficient of s_beta in the product of all s_{alphas[i]} (needs >= 2 factors).
Int multiLrCoeff(const std::vector<Partition>& alphas, const Partition& beta);

/// Skew Schur polynomial s_{gamma/alpha} in m variables.
MultiPoly skewSchur(const Partition& gamma, const Partition& alpha, int m);

/// Skew Schur expansion in the Schur basis: beta -> c_{alpha,beta}^{gamma}.
std::map<Partition, Int> skewSchurExpand(const Partition& gamma, const Partition& alpha);

// Quantum integers and binomials as Laurent polynomials in q.
MultiPoly quantumInt(int n);
MultiPoly quantumFactorial(int n);
MultiPoly quantumBinomial(int n, int k);  // rejects k outside 0..n

/// Sum over partitions in the a×b rectangle of q^{2|alpha| - ab};
/// equals quantumBinomial(a+b, a).
MultiPoly quantumBinomialPartition(int a, int b);

}  // namespace klr
