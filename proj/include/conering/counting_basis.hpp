#pragma once

#include "conering/exact_matrix.hpp"
#include "conering/rank_basis.hpp"

namespace conering {
namespace counting {

/* The candidate counting basis [I]. Rank-zero keys coincide with rank
   basis keys; higher ranks are built from the point-like elements
   [00 L] by the Phi constructors, and the point-like elements by cone
   shadows:
       [00,(a,b),L'] = C[1]([a,b+1,L']) - C[1]([a+2,b,L'])
   (the second term vanishes when b = 0). All counting elements are
   materialized in the rank basis. */

// Raised when the construction fails to produce an integral basis at
// some degree (a falsifying finding, not a usage error).
class construction_defect : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// [I] expanded in the rank basis. Memoized.
const Element& counting_element(const Index& key);

// [00 L]; the empty body yields the ring unit. Memoized.
const Element& counting_point_like(const BodyIndex& body);

/* The linear constructors on the point-like subspace (sigma = shadow):
     Phi_{0,0}(P) = P
     Phi_{a,0}(P) = e_a P - e_{a-1} sigma(P)            a >= 1
     Phi_{n,b}(P) = D^b Phi_{n,0}(P)
                    - sum_{i=1}^{b} Phi_{n+i,b-i}(sigma^i(P))   b >= 1
   P must be point-like of rank >= 1 in the rank basis. */
Element phi(int n, int b, const Element& point_like);

// Quasi-simplices, expanded over rank-zero keys of the rank basis:
// [0:0~] = 1, [a:0~] = {a:0} - {a-1:0}, and for b >= 1
// [n:b~] = D^b [n:0~] - sum_{i=1}^{b} [n+i:b-i~]. Mixed degree.
Element quasi_simplex(QuasiKey key);

/* Change of basis counting -> rank at one degree. keys lists the
   indices of the degree in canonical order; to_rank's column j is
   counting_element(keys[j]) in rank coordinates; det is asserted +-1
   and from_rank is the exact integer inverse. */
struct DegreeBasis {
    int degree = 0;
    std::vector<Index> keys;
    IntMatrix to_rank;
    IntMatrix from_rank;
    Int det;
};
const DegreeBasis& degree_basis(int d);

// Linear conversions; to_counting groups terms by degree and applies
// the per-degree inverse, from_counting expands counting elements.
Element to_counting(const Element& rank_elem);
Element from_counting(const Element& counting_elem);

// Conversion between any pair of bases (linear, invertible,
// degree-preserving).
Element convert(const Element& e, Basis target);

// Coordinates of a homogeneous element in the counting basis of its
// degree (the candidate Betti numbers). Throws on non-homogeneous
// input. Accepts any basis.
Element betti_coordinates(const Element& e);

// Dense coordinate vector over all counting keys of the element's
// degree, in canonical order (zeros included).
std::vector<std::pair<Index, Int>> betti_vector(const Element& e);

// Product and cone computed through the rank basis and expressed in
// counting coordinates.
Element multiply(const Element& u, const Element& v);
Element cone(const Element& u);

}  // namespace counting
}  // namespace conering
