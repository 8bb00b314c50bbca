#include "conering/cd_ring.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace conering {
namespace cd {

namespace {

// Word-level workspace: sparse sums keyed by raw words.
using WordSum = std::map<CDWord, Int>;

void add_term(WordSum& s, const CDWord& w, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = s.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) s.erase(it);
    }
}

WordSum prefixed(char letter, int count, const WordSum& s) {
    WordSum out;
    std::string pre(static_cast<std::size_t>(count), letter);
    for (const auto& [w, c] : s) out.emplace(pre + w, c);
    return out;
}

/* Memo table for word-pair products, keyed by the unordered pair.
   Lookups lock briefly; computation runs unlocked; a racing duplicate
   insert is dropped (both computations yield the identical sum). */
class ProductCache {
public:
    const WordSum* find(const std::pair<CDWord, CDWord>& key) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        return it == cache_.end() ? nullptr : &it->second;
    }
    const WordSum& insert(std::pair<CDWord, CDWord> key, WordSum value) {
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = cache_.try_emplace(std::move(key), std::move(value));
        return it->second;
    }

private:
    std::mutex mu_;
    std::map<std::pair<CDWord, CDWord>, WordSum> cache_;
};

ProductCache& product_cache() {
    static ProductCache cache;
    return cache;
}

const WordSum& word_product(const CDWord& u, const CDWord& v);

WordSum word_product_compute(const CDWord& u, const CDWord& v) {
    if (u.empty()) return WordSum{{v, 1}};
    if (v.empty()) return WordSum{{u, 1}};

    std::size_t p = u.find_first_not_of('D');
    std::size_t q = v.find_first_not_of('D');
    if (p == CDWord::npos) p = u.size();
    if (q == CDWord::npos) q = v.size();
    if (p + q > 0) {
        const WordSum& base = word_product(u.substr(p), v.substr(q));
        return prefixed('D', static_cast<int>(p + q), base);
    }

    // Both words start with C: u = Cx, v = Cy.
    CDWord x = u.substr(1), y = v.substr(1);
    const WordSum xy = word_product(x, y);

    // J(X,Y) = X*C(Y) + C(X)*Y - e1*X*Y
    WordSum j = word_product(x, v);
    for (const auto& [w, c] : word_product(u, y)) add_term(j, w, c);
    for (const auto& [w, c] : xy)
        for (const auto& [w2, c2] : word_product("C", w)) add_term(j, w2, -c * c2);

    WordSum out = prefixed('C', 1, j);
    for (const auto& [w, c] : prefixed('D', 1, xy)) add_term(out, w, c);
    return out;
}

const WordSum& word_product(const CDWord& u, const CDWord& v) {
    std::pair<CDWord, CDWord> key = u <= v ? std::make_pair(u, v) : std::make_pair(v, u);
    if (const WordSum* hit = product_cache().find(key)) return *hit;
    WordSum value = word_product_compute(key.first, key.second);
    return product_cache().insert(std::move(key), std::move(value));
}

void require_cd(const Element& e, const char* op) {
    if (e.basis() != Basis::cd)
        throw std::invalid_argument(std::string(op) + ": element is not in the cd basis");
}

}  // namespace

Element multiply(const Element& u, const Element& v) {
    require_cd(u, "cd::multiply");
    require_cd(v, "cd::multiply");
    Element out(Basis::cd);
    for (const auto& [ku, cu] : u.terms()) {
        CDWord wu = word_of_index(ku);
        for (const auto& [kv, cv] : v.terms()) {
            Int c = cu * cv;
            for (const auto& [w, cw] : word_product(wu, word_of_index(kv)))
                out.add(index_of_word(w), c * cw);
        }
    }
    return out;
}

Element cone(const Element& u) {
    require_cd(u, "cd::cone");
    Element out(Basis::cd);
    for (const auto& [k, c] : u.terms()) out.add(index_of_word("C" + word_of_index(k)), c);
    return out;
}

Element d_times(const Element& u) {
    require_cd(u, "cd::d_times");
    Element out(Basis::cd);
    for (const auto& [k, c] : u.terms()) out.add(index_of_word("D" + word_of_index(k)), c);
    return out;
}

Element join(const Element& u, const Element& v) {
    require_cd(u, "cd::join");
    require_cd(v, "cd::join");
    Element out = multiply(u, cone(v));
    out += multiply(cone(u), v);
    out -= multiply(simplex(1), multiply(u, v));
    return out;
}

Element simplex(int n) {
    if (n < 0) throw std::invalid_argument("simplex: negative index");
    return Element(Basis::cd, Index(PairIdx{n, 0}));
}

Element d_element() { return Element(Basis::cd, Index(PairIdx{0, 1})); }

}  // namespace cd
}  // namespace conering
