#pragma once

#include "conering/element.hpp"

namespace conering {
namespace cd {

/* The ground-truth engine for the cone product ring. Multiplication is
   defined by the cone product formula
       C(U)C(V) = C(J(U,V)) + D*U*V,   J(U,V) = U*C(V) + C(U)*V - e1*U*V
   together with the rules <CW> = C(<W>) and <DW> = D*<W>. The word-pair
   recursion strips leading D's, short-circuits when a stripped word is
   empty, and otherwise applies the formula; it terminates because the
   total degree strictly decreases. Word-pair products are memoized by
   the unordered pair. */

Element multiply(const Element& u, const Element& v);

// C(<W>) = <CW>, extended linearly. Degree rises by one.
Element cone(const Element& u);

// D * <W> = <DW>, extended linearly.
Element d_times(const Element& u);

// J(U,V) = U*C(V) + C(U)*V - e1*U*V.
Element join(const Element& u, const Element& v);

// The simplex e_n = <C^n>; e_0 = 1.
Element simplex(int n);

// D = e1*e1 - e2 = <D>.
Element d_element();

}  // namespace cd
}  // namespace conering
