#pragma once

#include <utility>

#include "conering/element.hpp"

namespace conering {
namespace rank {

/* The rank basis {I}: the signed-mix inversion of the CD basis. Products
   decompose orthogonally into a head product and a body merge product;
   every product structure coefficient is a counting number. The cone
   operator splits as C = C[0] + C[1] into rank-preserving and
   rank-raising parts. */

// <I> = sum over subsets S of the rank(I) gaps of {mix_S(I)}; mixing a
// set of gaps merges each maximal run of adjacent chosen gaps with #.
// 2^rank(I) terms, all with coefficient +1. Result is in the rank basis.
Element angle_to_rank(const Index& key);

// {I} = sum_S (-1)^|S| <mix_S(I)>. Result is in the CD basis.
Element rank_to_angle(const Index& key);

// Linear extensions: to_rank takes a CD-basis element, to_cd a
// rank-basis element. Mutually inverse and degree-preserving.
Element to_rank(const Element& e);
Element to_cd(const Element& e);

/* Head product pi(A,B): {A}{B} = {pi(A,B)} on rank-zero keys.
   pi((a,b),(c,d)) = sum_{k=0}^{min(a,c)} (a+c-2k, b+d+k). */
using PairSum = std::map<PairIdx, Int>;
PairSum head_product(PairIdx lhs, PairIdx rhs);

/* Merge product on body indices:
     (AL)*(BM) = A(L*BM) + B(AL*M) + (A#B)(L*M)
   with the empty body as two-sided identity. Coefficients are counting
   numbers. Memoized by the ordered body pair. */
const BodySum& merge_product(const BodyIndex& lhs, const BodyIndex& rhs);

// {AL}{BM} = {pi(A,B) L*M}: bilinear product in the rank basis. Agrees
// with the CD-basis product through conversion.
Element multiply(const Element& u, const Element& v);

/* Cone in the rank basis:
     C({(a,b+1)} ++ L)        = {(0,0),(a,b)} ++ L + {(a+1,b+1)} ++ L
     C({(n,0)})               = {(n+1,0)}
     C({(n,0)} ++ L1 ++ L')   = {(n+1,0)} ++ L1 ++ L'
                                - {(0,0)} ++ L1^(n+1) ++ L'
   where L1^(k) raises the C-exponent of L1 by k. Agrees with the
   CD-basis cone through conversion. */
Element cone(const Element& u);

// C[0] and C[1]: the rank-preserving and rank-raising parts of cone.
Element cone_preserving(const Element& u);
Element cone_raising(const Element& u);
std::pair<Element, Element> cone_components(const Element& u);

// Point-like: every key's head is (0,0) (the span of the {00 L}; the
// range of C[1] in rank >= 1). Simplex-like: every key's head has
// D-exponent 0 (the kernel of C[1]). Zero is vacuously both.
bool is_point_like(const Element& u);
bool is_simplex_like(const Element& u);

/* Shadow operator on point-like elements of rank >= 1:
     {(0,0),(a,b)} ++ L'  ->  {(0,0),(a+n,b)} ++ L'.
   Equals C[1]∘C[0] on any C[1]-preimage. Rank-zero keys (the unit
   {0:0}) are outside the domain. */
Element shadow(const Element& u, int n = 1);

/* Rank components of C^n: the rank-preserving part is (C[0])^n, the
   rank-raising part is sum_{i=0}^{n} (C[0])^i C[1] (C[0])^{n-i}, and
   every component shifting rank by two or more vanishes. */
struct ConePowerParts {
    Element preserving;  // (C^n)[0] applied to the input
    Element raising;     // (C^n)[1] applied to the input
};
ConePowerParts cone_power_components(int n, const Element& u);

}  // namespace rank
}  // namespace conering
