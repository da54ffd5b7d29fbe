#pragma once

#include <set>
#include <vector>

#include "posreal/digraph.hpp"
#include "posreal/matrix.hpp"
#include "posreal/shifted_polynomial.hpp"

namespace posreal::oracle {

/// det(lambda I - A) by the Faddeev-LeVerrier trace recursion.
/// Throws NotSquare.
CharPoly char_poly_of_matrix(const Matrix& a);

/// det(lambda I - A) by cofactor expansion over polynomial entries. Exponential; meant for n <= 5.
ShiftedPoly char_poly_cofactor(const Matrix& a);

/// Sorted arc list of a 0/1 adjacency structure.
using ArcStructure = std::vector<Arc>;

struct BruteForceOptions {
    /// n = 4 scans 65536 structures; off by default.
    bool allow_order4 = false;
};

/// Scans every 0/1 adjacency structure on n vertices and keeps those whose
/// simple cycles are exactly one cycle per monomial of matching length, with
/// no vertex-disjoint pair and every vertex on some cycle.
///
/// Shares no code with the digraph module. Throws OrderTooLarge for n > 3
/// (n > 4 with allow_order4).
std::set<ArcStructure> brute_force_structures(const std::vector<Monomial>& monomials, int n,
                                              const BruteForceOptions& options = {});

/// char_poly_of_matrix(A) == target. Throws DimensionMismatch if A is not target.order() square.
bool verify_realization(const Matrix& a, const CharPoly& target);

}  // namespace posreal::oracle
