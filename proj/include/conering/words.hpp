#pragma once

#include <string>
#include <vector>

#include "conering/integers.hpp"

namespace conering {

/* A CD-word is a finite string over the alphabet {C, D}, the empty word
   included. Words key the CD basis; deg C = 1 and deg D = 2. */
using CDWord = std::string;

bool is_cd_word(const CDWord& w);

int word_degree(const CDWord& w);

// Number of "CD" factors in w. Occurrences are disjoint two-letter
// factors, so the count is scan-order independent.
int word_rank(const CDWord& w);

// Canonical CD-word order: degree first, then lexicographic with C < D.
bool word_less(const CDWord& lhs, const CDWord& rhs);

// All words of degree exactly d, in canonical order. The count is the
// Fibonacci number fibonacci(d + 1).
std::vector<CDWord> enumerate_words(int d);

// fibonacci(1) = fibonacci(2) = 1.
Int fibonacci(int n);

}  // namespace conering
