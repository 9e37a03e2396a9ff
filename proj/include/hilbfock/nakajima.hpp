#pragma once

#include "hilbfock/fock.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hilbfock {

// The operator q_j(class): creation for j > 0, annihilation for j < 0,
// and q_0 = 0. Its parity is the parity of the class degree.
struct OperatorSpec {
    long j = 0;
    std::size_t class_idx = 0;
};

// Applies q_j(alpha) to a vector.
//   j > 0: prepend the letter (j, alpha) to each word, canonicalize, keep
//          the canonicalization sign.
//   j < 0, j = -k: contract each letter of level k. Position l contributes
//          (-1)^{deg(alpha) * (sum of degrees before l)} * (-k) *
//          pair(alpha, class_l) times the word with position l removed.
//   j = 0: the zero vector.
FockVector apply_q(const ManifoldCohomology& m, OperatorSpec op, const FockVector& v);

// q_i(alpha) q_j(beta) v - (-1)^{deg(alpha) deg(beta)} q_j(beta) q_i(alpha) v,
// evaluated by two applications of apply_q in each order. Equals
// i delta_{i+j,0} pair(alpha, beta) v.
FockVector super_commutator(const ManifoldCohomology& m, long i, std::size_t alpha, long j,
                            std::size_t beta, const FockVector& v);

// Gram matrix of one bidegree slice: entry (r, c) is the vacuum coefficient
// of A_r applied to basis monomial c, where A_r is the annihilator chain
// obtained by reversing basis monomial r and replacing each class by its
// pairing-dual. Rows are stored sparsely as (column, value) with columns
// ascending.
struct GramMatrix {
    std::size_t dim = 0;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;

    Rational entry(std::size_t r, std::size_t c) const;
};

GramMatrix gram_matrix(const ManifoldCohomology& m, Bidegree bd);
GramMatrix gram_matrix(const ManifoldCohomology& m, const std::vector<Monomial>& basis);

// Exact determinant by sparse Gaussian elimination.
Rational gram_det(const GramMatrix& g);

}  // namespace hilbfock
