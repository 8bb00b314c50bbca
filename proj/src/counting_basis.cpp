#include "conering/counting_basis.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace conering {
namespace counting {

namespace {

void require_basis(const Element& e, Basis b, const char* op) {
    if (e.basis() != b)
        throw std::invalid_argument(std::string(op) + ": element is not in the " +
                                    basis_name(b) + " basis");
}

template <class K, class V>
class Cache {
public:
    const V* find(const K& key) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : &it->second;
    }
    const V& insert(K key, V value) {
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = map_.try_emplace(std::move(key), std::move(value));
        return it->second;
    }

private:
    std::mutex mu_;
    std::map<K, V> map_;
};

Cache<Index, Element>& element_cache() {
    static Cache<Index, Element> cache;
    return cache;
}

Cache<BodyIndex, Element>& point_like_cache() {
    static Cache<BodyIndex, Element> cache;
    return cache;
}

Element rank_key(PairIdx p) { return Element(Basis::rank, Index(p)); }

}  // namespace

Element phi(int n, int b, const Element& point_like) {
    require_basis(point_like, Basis::rank, "counting::phi");
    if (n < 0 || b < 0) throw std::invalid_argument("counting::phi: negative exponent");
    if (!rank::is_point_like(point_like))
        throw std::invalid_argument("counting::phi: argument is not point-like");
    if (b == 0) {
        if (n == 0) return point_like;
        Element out = rank::multiply(rank_key(PairIdx{n, 0}), point_like);
        out -= rank::multiply(rank_key(PairIdx{n - 1, 0}), rank::shadow(point_like));
        return out;
    }
    Element out = rank::multiply(rank_key(PairIdx{0, b}), phi(n, 0, point_like));
    for (int i = 1; i <= b; ++i) out -= phi(n + i, b - i, rank::shadow(point_like, i));
    return out;
}

const Element& counting_element(const Index& key) {
    if (const Element* hit = element_cache().find(key)) return *hit;
    Element value(Basis::rank);
    if (key.rank() == 0) {
        value = Element(Basis::rank, key);
    } else {
        const Element& base = counting_point_like(key.body());
        value = phi(key.head().a, key.head().b, base);
    }
    return element_cache().insert(key, std::move(value));
}

const Element& counting_point_like(const BodyIndex& body) {
    if (const Element* hit = point_like_cache().find(body)) return *hit;
    Element value(Basis::rank);
    if (body.empty()) {
        value = Element::unit(Basis::rank);
    } else {
        PairIdx first = body.front();
        BodyIndex rest(body.begin() + 1, body.end());
        value = rank::cone_raising(counting_element(Index(PairIdx{first.a, first.b + 1}, rest)));
        // The extra term: zero when first.b == 0 since the argument is
        // then simplex-like.
        value -= rank::cone_raising(counting_element(Index(PairIdx{first.a + 2, first.b}, rest)));
    }
    return point_like_cache().insert(body, std::move(value));
}

Element quasi_simplex(QuasiKey key) {
    int a = key.pair.a, b = key.pair.b;
    if (a < 0 || b < 0) throw std::invalid_argument("quasi_simplex: negative exponent");
    if (b == 0) {
        if (a == 0) return Element::unit(Basis::rank);
        Element out(Basis::rank, Index(PairIdx{a, 0}));
        out.add(Index(PairIdx{a - 1, 0}), -1);
        return out;
    }
    Element out = rank::multiply(rank_key(PairIdx{0, b}), quasi_simplex(QuasiKey{{a, 0}}));
    for (int i = 1; i <= b; ++i) out -= quasi_simplex(QuasiKey{{a + i, b - i}});
    return out;
}

namespace {

Cache<int, DegreeBasis>& degree_cache() {
    static Cache<int, DegreeBasis> cache;
    return cache;
}

std::size_t key_position(const std::vector<Index>& keys, const Index& key) {
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || !(*it == key))
        throw std::logic_error("key_position: key not found in degree table");
    return static_cast<std::size_t>(it - keys.begin());
}

DegreeBasis build_degree_basis(int d) {
    DegreeBasis basis;
    basis.degree = d;
    basis.keys = enumerate_indices(d);
    std::size_t n = basis.keys.size();
    basis.to_rank = IntMatrix(n, std::vector<Int>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        const Element& col = counting_element(basis.keys[j]);
        for (const auto& [k, c] : col.terms()) {
            if (k.degree() != d)
                throw construction_defect("counting element " +
                                          print_key(basis.keys[j], Basis::counting) +
                                          " is not homogeneous");
            basis.to_rank[key_position(basis.keys, k)][j] = c;
        }
    }
    basis.det = determinant(basis.to_rank);
    if (basis.det != 1 && basis.det != -1) {
        std::ostringstream os;
        os << "counting change of basis at degree " << d
           << " is not unimodular: determinant = " << basis.det;
        throw construction_defect(os.str());
    }
    basis.from_rank = inverse_unimodular(basis.to_rank);
    return basis;
}

}  // namespace

const DegreeBasis& degree_basis(int d) {
    if (d < 0) throw std::invalid_argument("degree_basis: negative degree");
    if (const DegreeBasis* hit = degree_cache().find(d)) return *hit;
    return degree_cache().insert(d, build_degree_basis(d));
}

Element to_counting(const Element& rank_elem) {
    require_basis(rank_elem, Basis::rank, "counting::to_counting");
    Element out(Basis::counting);
    // Group by degree; each degree converts through its own matrix.
    std::map<int, std::vector<std::pair<Index, Int>>> by_degree;
    for (const auto& [k, c] : rank_elem.terms()) by_degree[k.degree()].push_back({k, c});
    for (const auto& [d, terms] : by_degree) {
        const DegreeBasis& basis = degree_basis(d);
        std::vector<Int> v(basis.keys.size(), 0);
        for (const auto& [k, c] : terms) v[key_position(basis.keys, k)] = c;
        std::vector<Int> coords = mat_vec(basis.from_rank, v);
        for (std::size_t i = 0; i < coords.size(); ++i) out.add(basis.keys[i], coords[i]);
    }
    return out;
}

Element from_counting(const Element& counting_elem) {
    require_basis(counting_elem, Basis::counting, "counting::from_counting");
    Element out(Basis::rank);
    for (const auto& [k, c] : counting_elem.terms()) {
        Element part = counting_element(k);
        part *= c;
        out += part;
    }
    return out;
}

Element convert(const Element& e, Basis target) {
    if (e.basis() == target) return e;
    switch (e.basis()) {
        case Basis::cd:
            return target == Basis::rank ? rank::to_rank(e) : to_counting(rank::to_rank(e));
        case Basis::rank:
            return target == Basis::cd ? rank::to_cd(e) : to_counting(e);
        case Basis::counting: {
            Element r = from_counting(e);
            return target == Basis::rank ? r : rank::to_cd(r);
        }
    }
    throw std::logic_error("convert: bad basis tag");
}

Element betti_coordinates(const Element& e) {
    if (!e.homogeneous())
        throw std::invalid_argument("betti_coordinates: element is not homogeneous");
    return convert(e, Basis::counting);
}

std::vector<std::pair<Index, Int>> betti_vector(const Element& e) {
    Element coords = betti_coordinates(e);
    std::vector<std::pair<Index, Int>> out;
    if (coords.is_zero()) return out;
    const DegreeBasis& basis = degree_basis(coords.degree());
    out.reserve(basis.keys.size());
    for (const auto& k : basis.keys) out.push_back({k, coords.coeff(k)});
    return out;
}

Element multiply(const Element& u, const Element& v) {
    require_basis(u, Basis::counting, "counting::multiply");
    require_basis(v, Basis::counting, "counting::multiply");
    return to_counting(rank::multiply(from_counting(u), from_counting(v)));
}

Element cone(const Element& u) {
    require_basis(u, Basis::counting, "counting::cone");
    return to_counting(rank::cone(from_counting(u)));
}

}  // namespace counting
}  // namespace conering
