#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "conering/indices.hpp"
#include "conering/integers.hpp"

namespace conering {

enum class Basis { cd, rank, counting };

const char* basis_name(Basis b);
Basis basis_from_name(const std::string& name);

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* A graded, sparse, exact-integer linear combination of basis keys.
   Keys are stored as indices for every basis (CD-words biject with
   indices); no stored coefficient is zero. Values are immutable in
   spirit: all operations are pure functions returning fresh elements. */
class Element {
public:
    using Terms = std::map<Index, Int>;

    Element() = default;
    explicit Element(Basis basis) : basis_(basis) {}
    Element(Basis basis, const Index& key, Int coeff = 1) : basis_(basis) {
        add(key, std::move(coeff));
    }

    static Element unit(Basis basis) { return Element(basis, Index{}); }
    static Element zero(Basis basis) { return Element(basis); }

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Int coeff(const Index& key) const;

    // Accumulates c on key, erasing the term if it cancels to zero.
    void add(const Index& key, Int c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Int& c);

    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
    friend Element operator*(const Int& c, Element e) { return e *= c; }

    bool operator==(const Element& o) const = default;

    // True when all keys share one degree; the zero element is
    // vacuously homogeneous. degree() requires a nonzero homogeneous
    // element.
    bool homogeneous() const;
    int degree() const;

    // Keys in the display order of this element's basis: CD keys sort
    // by (degree, word lex), index keys by canonical index order.
    std::vector<Index> ordered_keys() const;

    std::string str() const;

private:
    void check_same_basis(const Element& o) const;

    Basis basis_ = Basis::cd;
    Terms terms_;
};

/* Element text grammar (ASCII, bit-exact printing):
     element := term (('+'|'-') term)*
     term    := [integer '*'] key
   with an optional leading '-' on the first term. Keys: CD basis
   '<CDCD>' (empty word '<>'), rank basis '{a0:b0,a1:b1,...}',
   counting basis '[a0:b0,...]'. Whitespace around operators is
   optional. print_element and parse_element round-trip exactly. */
std::string print_element(const Element& e);
Element parse_element(const std::string& text);
Element parse_element(const std::string& text, Basis expected);

std::string print_key(const Index& key, Basis basis);
Index parse_key(const std::string& text, Basis basis);

// Detects cd/rank/counting from the first key delimiter ('<', '{', '[').
Basis detect_basis(const std::string& text);

/* Formal sums over body indices: the value space of the merge product.
   Coefficients are exact integers (counting numbers for merge products
   themselves). Printed over '(a0:b0,...)' body keys; the empty body
   prints as '()'. */
using BodySum = std::map<BodyIndex, Int>;

std::string print_body(const BodyIndex& body);
std::string print_body_sum(const BodySum& s);

/* Quasi-simplex keys [a:b~] decorate a single pair; they key the mixed
   degree shadow basis of the rank-zero subspace and are used by tests
   and derivations, never persisted in tables. */
struct QuasiKey {
    PairIdx pair;
    auto operator<=>(const QuasiKey&) const = default;
};

std::string print_quasi_key(const QuasiKey& k);
QuasiKey parse_quasi_key(const std::string& text);

}  // namespace conering
