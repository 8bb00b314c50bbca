#include "conering/rank_basis.hpp"

#include <bit>
#include <mutex>

namespace conering {
namespace rank {

namespace {

void require_basis(const Element& e, Basis b, const char* op) {
    if (e.basis() != b)
        throw std::invalid_argument(std::string(op) + ": element is not in the " +
                                    basis_name(b) + " basis");
}

// Applies the gap-subset mask to the pair sequence of key: a set bit i
// mixes the pair after gap i into the accumulating run.
Index mix_subset(const Index& key, unsigned mask) {
    std::vector<PairIdx> out;
    PairIdx acc = key.head();
    const BodyIndex& body = key.body();
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (mask & (1u << i)) {
            acc = mix(acc, body[i]);
        } else {
            out.push_back(acc);
            acc = body[i];
        }
    }
    out.push_back(acc);
    return Index::from_pairs(out);
}

BodyIndex prepend(PairIdx p, const BodyIndex& body) {
    BodyIndex out;
    out.reserve(body.size() + 1);
    out.push_back(p);
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

class MergeCache {
public:
    const BodySum* find(const std::pair<BodyIndex, BodyIndex>& key) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        return it == cache_.end() ? nullptr : &it->second;
    }
    const BodySum& insert(std::pair<BodyIndex, BodyIndex> key, BodySum value) {
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = cache_.try_emplace(std::move(key), std::move(value));
        return it->second;
    }

private:
    std::mutex mu_;
    std::map<std::pair<BodyIndex, BodyIndex>, BodySum> cache_;
};

MergeCache& merge_cache() {
    static MergeCache cache;
    return cache;
}

void add_body(BodySum& s, const BodyIndex& key, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = s.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) s.erase(it);
    }
}

}  // namespace

Element angle_to_rank(const Index& key) {
    Element out(Basis::rank);
    unsigned subsets = 1u << key.rank();
    for (unsigned mask = 0; mask < subsets; ++mask) out.add(mix_subset(key, mask), 1);
    return out;
}

Element rank_to_angle(const Index& key) {
    Element out(Basis::cd);
    unsigned subsets = 1u << key.rank();
    for (unsigned mask = 0; mask < subsets; ++mask) {
        int sign = (std::popcount(mask) % 2 == 0) ? 1 : -1;
        out.add(mix_subset(key, mask), sign);
    }
    return out;
}

Element to_rank(const Element& e) {
    require_basis(e, Basis::cd, "rank::to_rank");
    Element out(Basis::rank);
    for (const auto& [k, c] : e.terms()) {
        Element part = angle_to_rank(k);
        part *= c;
        out += part;
    }
    return out;
}

Element to_cd(const Element& e) {
    require_basis(e, Basis::rank, "rank::to_cd");
    Element out(Basis::cd);
    for (const auto& [k, c] : e.terms()) {
        Element part = rank_to_angle(k);
        part *= c;
        out += part;
    }
    return out;
}

PairSum head_product(PairIdx lhs, PairIdx rhs) {
    PairSum out;
    int top = std::min(lhs.a, rhs.a);
    for (int k = 0; k <= top; ++k)
        out.emplace(PairIdx{lhs.a + rhs.a - 2 * k, lhs.b + rhs.b + k}, 1);
    return out;
}

const BodySum& merge_product(const BodyIndex& lhs, const BodyIndex& rhs) {
    std::pair<BodyIndex, BodyIndex> key{lhs, rhs};
    if (const BodySum* hit = merge_cache().find(key)) return *hit;

    BodySum value;
    if (lhs.empty()) {
        value.emplace(rhs, 1);
    } else if (rhs.empty()) {
        value.emplace(lhs, 1);
    } else {
        PairIdx a = lhs.front(), b = rhs.front();
        BodyIndex ltail(lhs.begin() + 1, lhs.end());
        BodyIndex rtail(rhs.begin() + 1, rhs.end());
        for (const auto& [m, c] : merge_product(ltail, rhs)) add_body(value, prepend(a, m), c);
        for (const auto& [m, c] : merge_product(lhs, rtail)) add_body(value, prepend(b, m), c);
        for (const auto& [m, c] : merge_product(ltail, rtail))
            add_body(value, prepend(mix(a, b), m), c);
    }
    return merge_cache().insert(std::move(key), std::move(value));
}

Element multiply(const Element& u, const Element& v) {
    require_basis(u, Basis::rank, "rank::multiply");
    require_basis(v, Basis::rank, "rank::multiply");
    Element out(Basis::rank);
    for (const auto& [ku, cu] : u.terms()) {
        for (const auto& [kv, cv] : v.terms()) {
            Int c = cu * cv;
            PairSum heads = head_product(ku.head(), kv.head());
            const BodySum& bodies = merge_product(ku.body(), kv.body());
            for (const auto& [h, hc] : heads)
                for (const auto& [m, mc] : bodies) out.add(Index(h, m), c * hc * mc);
        }
    }
    return out;
}

namespace {

void add_cone_of_key(Element& out, const Index& key, const Int& c, bool preserving,
                     bool raising) {
    PairIdx h = key.head();
    const BodyIndex& body = key.body();
    if (h.b >= 1) {
        if (raising) out.add(Index(PairIdx{0, 0}, prepend(PairIdx{h.a, h.b - 1}, body)), c);
        if (preserving) out.add(Index(PairIdx{h.a + 1, h.b}, body), c);
    } else if (preserving) {
        // Simplex-like key: the whole cone is rank-preserving.
        out.add(Index(PairIdx{h.a + 1, 0}, body), c);
        if (!body.empty()) {
            BodyIndex shifted = body;
            shifted.front().a += h.a + 1;
            out.add(Index(PairIdx{0, 0}, shifted), -c);
        }
    }
}

}  // namespace

Element cone(const Element& u) {
    require_basis(u, Basis::rank, "rank::cone");
    Element out(Basis::rank);
    for (const auto& [k, c] : u.terms()) add_cone_of_key(out, k, c, true, true);
    return out;
}

Element cone_preserving(const Element& u) {
    require_basis(u, Basis::rank, "rank::cone_preserving");
    Element out(Basis::rank);
    for (const auto& [k, c] : u.terms()) add_cone_of_key(out, k, c, true, false);
    return out;
}

Element cone_raising(const Element& u) {
    require_basis(u, Basis::rank, "rank::cone_raising");
    Element out(Basis::rank);
    for (const auto& [k, c] : u.terms()) add_cone_of_key(out, k, c, false, true);
    return out;
}

std::pair<Element, Element> cone_components(const Element& u) {
    return {cone_preserving(u), cone_raising(u)};
}

bool is_point_like(const Element& u) {
    require_basis(u, Basis::rank, "rank::is_point_like");
    for (const auto& [k, c] : u.terms())
        if (k.head() != PairIdx{0, 0}) return false;
    return true;
}

bool is_simplex_like(const Element& u) {
    require_basis(u, Basis::rank, "rank::is_simplex_like");
    for (const auto& [k, c] : u.terms())
        if (k.head().b != 0) return false;
    return true;
}

Element shadow(const Element& u, int n) {
    require_basis(u, Basis::rank, "rank::shadow");
    if (n < 0) throw std::invalid_argument("rank::shadow: negative power");
    if (!is_point_like(u)) throw std::invalid_argument("rank::shadow: element is not point-like");
    Element out(Basis::rank);
    for (const auto& [k, c] : u.terms()) {
        if (k.body().empty())
            throw std::invalid_argument(
                "rank::shadow: rank-zero key " + print_key(k, Basis::rank) +
                " is outside the shadow domain");
        BodyIndex body = k.body();
        body.front().a += n;
        out.add(Index(k.head(), body), c);
    }
    return out;
}

ConePowerParts cone_power_components(int n, const Element& u) {
    require_basis(u, Basis::rank, "rank::cone_power_components");
    if (n < 0) throw std::invalid_argument("rank::cone_power_components: negative power");
    // preserving powers (C[0])^j for j = 0..n
    std::vector<Element> pow0;
    pow0.reserve(static_cast<std::size_t>(n) + 1);
    pow0.push_back(u);
    for (int j = 1; j <= n; ++j) pow0.push_back(cone_preserving(pow0.back()));

    ConePowerParts parts{pow0.back(), Element(Basis::rank)};
    for (int i = 0; i <= n; ++i) {
        Element term = cone_raising(pow0[static_cast<std::size_t>(n - i)]);
        for (int j = 0; j < i; ++j) term = cone_preserving(term);
        parts.raising += term;
    }
    return parts;
}

}  // namespace rank
}  // namespace conering
