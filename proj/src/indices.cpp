#include "conering/indices.hpp"

#include <algorithm>
#include <stdexcept>

namespace conering {

PairIdx mix(PairIdx lhs, PairIdx rhs) {
    return PairIdx{lhs.a + rhs.a + 1, lhs.b + rhs.b + 1};
}

int pair_degree(PairIdx p) { return p.a + 2 * p.b; }

int body_rank(const BodyIndex& body) { return static_cast<int>(body.size()); }

int body_degree(const BodyIndex& body) {
    int d = 3 * body_rank(body);
    for (const auto& p : body) d += pair_degree(p);
    return d;
}

std::vector<PairIdx> Index::pairs() const {
    std::vector<PairIdx> out;
    out.reserve(body_.size() + 1);
    out.push_back(head_);
    out.insert(out.end(), body_.begin(), body_.end());
    return out;
}

Index Index::from_pairs(const std::vector<PairIdx>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("Index: empty pair sequence");
    return Index(pairs.front(), BodyIndex(pairs.begin() + 1, pairs.end()));
}

std::strong_ordering Index::operator<=>(const Index& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    if (auto c = rank() <=> o.rank(); c != 0) return c;
    if (auto c = head_ <=> o.head_; c != 0) return c;
    return body_ <=> o.body_;
}

namespace {

// Parses one D^b C^a segment; the segment must contain no "CD" factor.
PairIdx segment_pair(const CDWord& w, std::size_t begin, std::size_t end) {
    PairIdx p;
    std::size_t i = begin;
    while (i < end && w[i] == 'D') ++i;
    p.b = static_cast<int>(i - begin);
    std::size_t cs = i;
    while (i < end && w[i] == 'C') ++i;
    p.a = static_cast<int>(i - cs);
    if (i != end) throw std::invalid_argument("index_of_word: malformed segment");
    return p;
}

void append_segment(CDWord& w, PairIdx p) {
    w.append(static_cast<std::size_t>(p.b), 'D');
    w.append(static_cast<std::size_t>(p.a), 'C');
}

}  // namespace

Index index_of_word(const CDWord& w) {
    if (!is_cd_word(w)) throw std::invalid_argument("index_of_word: not a CD word");
    std::vector<PairIdx> pairs;
    std::size_t start = 0, i = 0;
    while (i + 1 < w.size()) {
        if (w[i] == 'C' && w[i + 1] == 'D') {
            pairs.push_back(segment_pair(w, start, i));
            i += 2;
            start = i;
        } else {
            ++i;
        }
    }
    pairs.push_back(segment_pair(w, start, w.size()));
    return Index::from_pairs(pairs);
}

CDWord word_of_index(const Index& idx) {
    CDWord w;
    append_segment(w, idx.head());
    for (const auto& p : idx.body()) {
        w += "CD";
        append_segment(w, p);
    }
    return w;
}

std::vector<Index> enumerate_indices(int d) {
    auto words = enumerate_words(d);
    std::vector<Index> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(index_of_word(w));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace conering
