#pragma once

#include <compare>
#include <string>
#include <vector>

#include "conering/words.hpp"

namespace conering {

/* One segment of a CD-word between consecutive "CD" factors. The segment
   word is D^b C^a (all D's before all C's). */
struct PairIdx {
    int a = 0;  // exponent of C
    int b = 0;  // exponent of D

    auto operator<=>(const PairIdx&) const = default;
};

// Mix operator: (a,b) # (c,d) = (a+c+1, b+d+1). Associative and
// commutative; it has no identity element.
PairIdx mix(PairIdx lhs, PairIdx rhs);

int pair_degree(PairIdx p);  // a + 2b

/* A body index: a possibly-empty sequence of pairs. The operand of the
   merge product and the shadow operator; rank = number of pairs. */
using BodyIndex = std::vector<PairIdx>;

int body_rank(const BodyIndex& body);
int body_degree(const BodyIndex& body);  // sum of pair degrees + 3 * rank

/* An index: a non-empty sequence of pairs, stored as head + body.
   Indices are in bijection with CD-words: the rank-r word
   D^{b0}C^{a0} CD D^{b1}C^{a1} CD ... CD D^{br}C^{ar} has index
   ((a0,b0),...,(ar,br)). Keys of the rank and counting bases. */
class Index {
public:
    Index() = default;  // the pair (0,0); the empty word
    explicit Index(PairIdx head, BodyIndex body = {})
        : head_(head), body_(std::move(body)) {}

    const PairIdx& head() const { return head_; }
    const BodyIndex& body() const { return body_; }

    int rank() const { return body_rank(body_); }
    int degree() const { return pair_degree(head_) + body_degree(body_); }

    // All pairs, head first.
    std::vector<PairIdx> pairs() const;
    static Index from_pairs(const std::vector<PairIdx>& pairs);

    bool operator==(const Index& o) const { return head_ == o.head_ && body_ == o.body_; }

    // Canonical order: degree, then rank, then lexicographic on the
    // flattened pair sequence.
    std::strong_ordering operator<=>(const Index& o) const;

private:
    PairIdx head_{};
    BodyIndex body_{};
};

Index index_of_word(const CDWord& w);
CDWord word_of_index(const Index& idx);

// All indices of degree exactly d, in canonical index order; the count
// matches enumerate_words(d).
std::vector<Index> enumerate_indices(int d);

}  // namespace conering
