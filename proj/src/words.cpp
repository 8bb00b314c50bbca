#include "conering/words.hpp"

#include <stdexcept>

namespace conering {

bool is_cd_word(const CDWord& w) {
    for (char c : w)
        if (c != 'C' && c != 'D') return false;
    return true;
}

int word_degree(const CDWord& w) {
    int d = 0;
    for (char c : w) d += (c == 'C') ? 1 : 2;
    return d;
}

int word_rank(const CDWord& w) {
    int r = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == 'C' && w[i + 1] == 'D') ++r;
    return r;
}

bool word_less(const CDWord& lhs, const CDWord& rhs) {
    int dl = word_degree(lhs), dr = word_degree(rhs);
    if (dl != dr) return dl < dr;
    return lhs < rhs;  // 'C' < 'D' in ASCII
}

std::vector<CDWord> enumerate_words(int d) {
    if (d < 0) throw std::invalid_argument("enumerate_words: negative degree");
    // Words of degree d are C·(degree d-1) then D·(degree d-2); prepending
    // preserves lexicographic order within the degree.
    std::vector<std::vector<CDWord>> table(static_cast<std::size_t>(d) + 1);
    table[0] = {""};
    if (d >= 1) table[1] = {"C"};
    for (int k = 2; k <= d; ++k) {
        auto& out = table[static_cast<std::size_t>(k)];
        for (const auto& w : table[static_cast<std::size_t>(k - 1)]) out.push_back("C" + w);
        for (const auto& w : table[static_cast<std::size_t>(k - 2)]) out.push_back("D" + w);
    }
    return table[static_cast<std::size_t>(d)];
}

Int fibonacci(int n) {
    if (n <= 0) return 0;
    Int a = 0, b = 1;  // fib(0), fib(1)
    for (int i = 1; i < n; ++i) {
        Int c = a + b;
        a = b;
        b = c;
    }
    return b;
}

}  // namespace conering
