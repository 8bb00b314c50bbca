#include "conering/suites.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <optional>
#include <sstream>

#include "conering/cd_ring.hpp"
#include "conering/counting_basis.hpp"
#include "conering/rank_basis.hpp"

namespace conering {

namespace {

using CheckFn = std::function<std::optional<std::string>()>;

struct Check {
    std::string name;
    CheckFn fn;
};

std::string in_cd(const Element& e) {
    return print_element(counting::convert(e, Basis::cd));
}

// Failure payloads show both sides fully expanded in the CD basis, the
// shared ground truth.
std::optional<std::string> expect_equal(const Element& lhs, const Element& rhs,
                                        const std::string& label) {
    if (lhs == rhs) return std::nullopt;
    std::ostringstream os;
    os << label << "\n  lhs = " << in_cd(lhs) << "\n  rhs = " << in_cd(rhs);
    return os.str();
}

std::vector<Index> keys_up_to(int max_degree) {
    std::vector<Index> keys;
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& k : enumerate_indices(d)) keys.push_back(k);
    return keys;
}

std::vector<BodyIndex> bodies_up_to(int max_degree) {
    std::vector<BodyIndex> bodies{{}};
    for (int d = 1; d <= max_degree; ++d)
        for (const auto& k : enumerate_indices(d))
            if (k.head() == PairIdx{0, 0}) bodies.push_back(k.body());
    return bodies;
}

Element cd_key(const Index& k) { return Element(Basis::cd, k); }
Element rank_key(const Index& k) { return Element(Basis::rank, k); }

/* ---------------- ring-axioms ---------------- */

std::optional<std::string> check_dimension_counts(int d) {
    for (int deg = 0; deg <= std::min(d, 20); ++deg) {
        Int expected = fibonacci(deg + 1);
        if (Int(enumerate_words(deg).size()) != expected) {
            std::ostringstream os;
            os << "word count at degree " << deg << " is " << enumerate_words(deg).size()
               << ", expected " << expected;
            return os.str();
        }
        if (enumerate_indices(deg).size() != enumerate_words(deg).size())
            return "index count differs from word count at degree " + std::to_string(deg);
    }
    return std::nullopt;
}

std::optional<std::string> check_unit_law(int d) {
    Element one = Element::unit(Basis::cd);
    for (const auto& k : keys_up_to(d)) {
        auto bad = expect_equal(cd::multiply(one, cd_key(k)), cd_key(k),
                                "1 * " + print_key(k, Basis::cd));
        if (bad) return bad;
    }
    return std::nullopt;
}

std::optional<std::string> check_commutativity(int d) {
    auto keys = keys_up_to(d);
    for (const auto& u : keys)
        for (const auto& v : keys) {
            if (u.degree() + v.degree() > d) continue;
            auto bad = expect_equal(cd::multiply(cd_key(u), cd_key(v)),
                                    cd::multiply(cd_key(v), cd_key(u)),
                                    print_key(u, Basis::cd) + " * " + print_key(v, Basis::cd) +
                                        " commutativity");
            if (bad) return bad;
        }
    return std::nullopt;
}

std::optional<std::string> check_associativity(int d) {
    auto keys = keys_up_to(d);
    for (const auto& u : keys)
        for (const auto& v : keys) {
            if (u.degree() + v.degree() > d) continue;
            Element uv = cd::multiply(cd_key(u), cd_key(v));
            for (const auto& w : keys) {
                if (u.degree() + v.degree() + w.degree() > d) continue;
                Element lhs = cd::multiply(uv, cd_key(w));
                Element rhs = cd::multiply(cd_key(u), cd::multiply(cd_key(v), cd_key(w)));
                auto bad = expect_equal(lhs, rhs,
                                        "associativity on " + print_key(u, Basis::cd) + ", " +
                                            print_key(v, Basis::cd) + ", " +
                                            print_key(w, Basis::cd));
                if (bad) return bad;
            }
        }
    return std::nullopt;
}

std::optional<std::string> check_grading(int d) {
    auto keys = keys_up_to(d);
    for (const auto& u : keys) {
        Element cu = cd::cone(cd_key(u));
        if (!cu.homogeneous() || cu.degree() != u.degree() + 1)
            return "cone degree defect on " + print_key(u, Basis::cd);
        for (const auto& v : keys) {
            if (u.degree() + v.degree() > d) continue;
            Element uv = cd::multiply(cd_key(u), cd_key(v));
            if (uv.is_zero()) return "product vanished on basis keys";
            if (!uv.homogeneous() || uv.degree() != u.degree() + v.degree())
                return "product degree defect on " + print_key(u, Basis::cd) + " * " +
                       print_key(v, Basis::cd);
        }
    }
    return std::nullopt;
}

/* ---------------- simplices ---------------- */

std::optional<std::string> check_join_of_simplices(int d) {
    for (int a = 0; a <= d; ++a)
        for (int b = 0; b <= d; ++b) {
            auto bad = expect_equal(cd::join(cd::simplex(a), cd::simplex(b)),
                                    cd::simplex(a + b + 1),
                                    "J(e_" + std::to_string(a) + ", e_" + std::to_string(b) + ")");
            if (bad) return bad;
        }
    return std::nullopt;
}

std::optional<std::string> check_simplex_product(int d) {
    for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b) {
            Element rhs = cd::simplex(a + b);
            rhs += cd::d_times(cd::multiply(cd::simplex(a - 1), cd::simplex(b - 1)));
            auto bad = expect_equal(cd::multiply(cd::simplex(a), cd::simplex(b)), rhs,
                                    "e_" + std::to_string(a) + " e_" + std::to_string(b));
            if (bad) return bad;
        }
    return std::nullopt;
}

std::optional<std::string> check_simplex_cone_product(int d) {
    auto keys = keys_up_to(d);
    for (int a = 1; a <= std::min(6, d); ++a)
        for (const auto& u : keys) {
            Element cu = cd::cone(cd_key(u));
            Element lhs = cd::multiply(cd::simplex(a), cu);
            Element rhs = cd_key(u);
            for (int i = 0; i <= a; ++i) rhs = cd::cone(rhs);
            rhs += cd::d_times(cd::multiply(cd::simplex(a - 1), cd_key(u)));
            auto bad = expect_equal(lhs, rhs,
                                    "e_" + std::to_string(a) + " C(" + print_key(u, Basis::cd) +
                                        ")");
            if (bad) return bad;
        }
    return std::nullopt;
}

// [ab] = D^b e_a; [ab][cd] = [a+c,b+d] + [01][a-1,b][c-1,d].
std::optional<std::string> check_db_simplex_product(int d) {
    auto bracket = [](int a, int b) {
        return Element(Basis::cd, Index(PairIdx{a, b}));
    };
    for (int a = 1; a <= std::min(6, d); ++a)
        for (int c = 1; c <= std::min(6, d); ++c)
            for (int b = 0; b <= std::min(4, d); ++b)
                for (int e = 0; e <= std::min(4, d); ++e) {
                    Element lhs = cd::multiply(bracket(a, b), bracket(c, e));
                    Element rhs = bracket(a + c, b + e);
                    rhs += cd::multiply(bracket(0, 1),
                                        cd::multiply(bracket(a - 1, b), bracket(c - 1, e)));
                    std::ostringstream label;
                    label << "[" << a << b << "][" << c << e << "]";
                    auto bad = expect_equal(lhs, rhs, label.str());
                    if (bad) return bad;
                }
    return std::nullopt;
}

/* ---------------- rank-product ---------------- */

std::optional<std::string> check_bijection(int d) {
    for (int deg = 0; deg <= d; ++deg)
        for (const auto& w : enumerate_words(deg)) {
            Index i = index_of_word(w);
            if (word_of_index(i) != w) return "bijection defect on word " + w;
            if (i.degree() != word_degree(w) || i.rank() != word_rank(w))
                return "degree/rank defect on word " + w;
        }
    return std::nullopt;
}

std::optional<std::string> check_conversion_round_trip(int d) {
    for (const auto& k : keys_up_to(d)) {
        auto bad = expect_equal(rank::to_rank(rank::to_cd(rank_key(k))), rank_key(k),
                                "rank->cd->rank on " + print_key(k, Basis::rank));
        if (bad) return bad;
        bad = expect_equal(rank::to_cd(rank::to_rank(cd_key(k))), cd_key(k),
                           "cd->rank->cd on " + print_key(k, Basis::cd));
        if (bad) return bad;
    }
    return std::nullopt;
}

std::optional<std::string> check_product_oracle(int d) {
    auto keys = keys_up_to(d);
    for (const auto& i : keys)
        for (const auto& j : keys) {
            if (i.degree() + j.degree() > d) continue;
            Element direct = rank::multiply(rank_key(i), rank_key(j));
            Element oracle =
                rank::to_rank(cd::multiply(rank::to_cd(rank_key(i)), rank::to_cd(rank_key(j))));
            auto bad = expect_equal(direct, oracle,
                                    "{" + print_key(i, Basis::rank) + "}*{" +
                                        print_key(j, Basis::rank) + "} vs CD oracle");
            if (bad) return bad;
        }
    return std::nullopt;
}

std::optional<std::string> check_rank_positivity(int d) {
    auto keys = keys_up_to(d);
    for (const auto& i : keys)
        for (const auto& j : keys) {
            if (i.degree() + j.degree() > d) continue;
            Element p = rank::multiply(rank_key(i), rank_key(j));
            for (const auto& [k, c] : p.terms())
                if (c < 0) {
                    std::ostringstream os;
                    os << "negative coefficient " << c << " on " << print_key(k, Basis::rank)
                       << " in " << print_key(i, Basis::rank) << " * "
                       << print_key(j, Basis::rank);
                    return os.str();
                }
        }
    return std::nullopt;
}

std::optional<std::string> check_point_like_closure(int d) {
    auto keys = keys_up_to(d);
    for (const auto& i : keys) {
        if (i.head() != PairIdx{0, 0}) continue;
        for (const auto& j : keys) {
            if (j.head() != PairIdx{0, 0} || i.degree() + j.degree() > d) continue;
            if (!rank::is_point_like(rank::multiply(rank_key(i), rank_key(j))))
                return "product of point-like keys " + print_key(i, Basis::rank) + ", " +
                       print_key(j, Basis::rank) + " is not point-like";
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_rank_range(int d) {
    auto bodies = bodies_up_to(d);
    for (const auto& l : bodies)
        for (const auto& m : bodies) {
            if (body_degree(l) + body_degree(m) > d) continue;
            int r = body_rank(l), s = body_rank(m);
            int lo = std::max(r, s), hi = r + s;
            for (const auto& [key, c] : rank::merge_product(l, m)) {
                int t = body_rank(key);
                if (t < lo || t > hi) {
                    std::ostringstream os;
                    os << "merge term " << print_body(key) << " of rank " << t
                       << " outside [" << lo << ", " << hi << "] in " << print_body(l) << " * "
                       << print_body(m);
                    return os.str();
                }
                if (c < 0) {
                    std::ostringstream os;
                    os << "negative merge coefficient " << c << " in " << print_body(l) << " * "
                       << print_body(m);
                    return os.str();
                }
            }
        }
    return std::nullopt;
}

// Independent oracle for merge coefficient sums: the Delannoy-style
// recurrence T(r,0) = T(0,s) = 1, T(r,s) = T(r-1,s)+T(r,s-1)+T(r-1,s-1).
Int delannoy(int r, int s) {
    std::vector<std::vector<Int>> t(static_cast<std::size_t>(r) + 1,
                                    std::vector<Int>(static_cast<std::size_t>(s) + 1, 1));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= s; ++j)
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] +
                t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    return t[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
}

std::optional<std::string> check_merge_coefficient_sums(int d) {
    auto bodies = bodies_up_to(d);
    for (const auto& l : bodies)
        for (const auto& m : bodies) {
            if (body_degree(l) + body_degree(m) > d) continue;
            int r = body_rank(l), s = body_rank(m);
            if (r > 4 || s > 4) continue;
            Int sum = 0;
            for (const auto& [key, c] : rank::merge_product(l, m)) sum += c;
            if (sum != delannoy(r, s)) {
                std::ostringstream os;
                os << "coefficient sum of " << print_body(l) << " * " << print_body(m)
                   << " is " << sum << ", expected " << delannoy(r, s) << " for ranks (" << r
                   << ", " << s << ")";
                return os.str();
            }
        }
    return std::nullopt;
}

/* ---------------- rank-cone ---------------- */

std::optional<std::string> check_cone_oracle(int d) {
    for (const auto& k : keys_up_to(d)) {
        Element direct = rank::cone(rank_key(k));
        Element oracle = rank::to_rank(cd::cone(rank::to_cd(rank_key(k))));
        auto bad =
            expect_equal(direct, oracle, "C" + print_key(k, Basis::rank) + " vs CD oracle");
        if (bad) return bad;
    }
    return std::nullopt;
}

std::optional<std::string> check_cone_rank_components(int d) {
    for (const auto& k : keys_up_to(d)) {
        int r = k.rank();
        Element whole = rank::cone(rank_key(k));
        for (const auto& [key, c] : whole.terms())
            if (key.rank() != r && key.rank() != r + 1)
                return "cone of " + print_key(k, Basis::rank) + " leaves ranks {r, r+1}";
        auto [pres, rais] = rank::cone_components(rank_key(k));
        auto bad = expect_equal(pres + rais, whole,
                                "C[0] + C[1] vs C on " + print_key(k, Basis::rank));
        if (bad) return bad;
        for (const auto& [key, c] : pres.terms())
            if (key.rank() != r) return "C[0] changed rank on " + print_key(k, Basis::rank);
        for (const auto& [key, c] : rais.terms())
            if (key.rank() != r + 1)
                return "C[1] did not raise rank on " + print_key(k, Basis::rank);
    }
    return std::nullopt;
}

std::optional<std::string> check_cone_raising_injective(int d) {
    std::map<Index, Index> image;
    for (const auto& k : keys_up_to(d)) {
        if (k.head().b == 0) continue;  // simplex-like keys map to zero
        Element r = rank::cone_raising(rank_key(k));
        if (r.size() != 1)
            return "C[1] of " + print_key(k, Basis::rank) + " is not a single key";
        const Index& target = r.terms().begin()->first;
        auto [it, inserted] = image.emplace(target, k);
        if (!inserted)
            return "C[1] collides on " + print_key(it->second, Basis::rank) + " and " +
                   print_key(k, Basis::rank);
    }
    return std::nullopt;
}

std::optional<std::string> check_point_like_range_kernel(int d) {
    for (const auto& k : keys_up_to(d)) {
        Element raised = rank::cone_raising(rank_key(k));
        if (k.head().b == 0) {
            if (!raised.is_zero())
                return "C[1] nonzero on simplex-like key " + print_key(k, Basis::rank);
        } else {
            if (raised.is_zero())
                return "C[1] zero on non-simplex-like key " + print_key(k, Basis::rank);
            if (!rank::is_point_like(raised))
                return "C[1] image not point-like on " + print_key(k, Basis::rank);
        }
    }
    // Every point-like key of rank >= 1 arises as C[1] of a key.
    for (const auto& k : keys_up_to(d)) {
        if (k.head() != PairIdx{0, 0} || k.body().empty()) continue;
        PairIdx first = k.body().front();
        BodyIndex rest(k.body().begin() + 1, k.body().end());
        Index preimage(PairIdx{first.a, first.b + 1}, rest);
        auto bad = expect_equal(rank::cone_raising(rank_key(preimage)), rank_key(k),
                                "C[1] preimage of " + print_key(k, Basis::rank));
        if (bad) return bad;
    }
    return std::nullopt;
}

/* ---------------- cone-decomposition ---------------- */

std::optional<std::string> check_c1_c0_c1_vanishes(int d) {
    for (int a = 0; a <= std::min(4, d); ++a)
        for (const auto& k : keys_up_to(d)) {
            Element e = rank::cone_raising(rank_key(k));
            for (int i = 0; i < a; ++i) e = rank::cone_preserving(e);
            e = rank::cone_raising(e);
            if (!e.is_zero()) {
                std::ostringstream os;
                os << "C[1] (C[0])^" << a << " C[1] nonzero on " << print_key(k, Basis::rank);
                return os.str();
            }
        }
    return std::nullopt;
}

std::optional<std::string> check_cone_power_formulas(int d) {
    for (int n = 0; n <= std::min(6, d); ++n)
        for (const auto& k : keys_up_to(d)) {
            auto parts = rank::cone_power_components(n, rank_key(k));
            Element whole = rank_key(k);
            for (int i = 0; i < n; ++i) whole = rank::cone(whole);
            auto bad = expect_equal(parts.preserving + parts.raising, whole,
                                    "(C^n)[0] + (C^n)[1] vs C^n on " +
                                        print_key(k, Basis::rank) + ", n=" + std::to_string(n));
            if (bad) return bad;
            for (const auto& [key, c] : parts.preserving.terms())
                if (key.rank() != k.rank()) return "(C^n)[0] changed rank";
            for (const auto& [key, c] : parts.raising.terms())
                if (key.rank() != k.rank() + 1) return "(C^n)[1] rank shift wrong";
        }
    return std::nullopt;
}

std::optional<std::string> check_shadow_well_defined(int d) {
    for (const auto& k : keys_up_to(d)) {
        if (k.head() != PairIdx{0, 0} || k.body().empty()) continue;
        PairIdx first = k.body().front();
        BodyIndex rest(k.body().begin() + 1, k.body().end());
        Element u0 = rank_key(Index(PairIdx{first.a, first.b + 1}, rest));
        // Perturb by a simplex-like element of the same degree.
        Element u1 = u0;
        u1.add(Index(PairIdx{u0.degree(), 0}), 7);
        if (rank::cone_raising(u0) != rank_key(k) || rank::cone_raising(u1) != rank_key(k))
            return "preimage construction failed on " + print_key(k, Basis::rank);
        Element s0 = rank::cone_raising(rank::cone_preserving(u0));
        Element s1 = rank::cone_raising(rank::cone_preserving(u1));
        auto bad = expect_equal(s0, s1, "shadow preimage independence on " +
                                            print_key(k, Basis::rank));
        if (bad) return bad;
        bad = expect_equal(s0, rank::shadow(rank_key(k)),
                           "shadow vs C[1]C[0] on " + print_key(k, Basis::rank));
        if (bad) return bad;
    }
    return std::nullopt;
}

/* ---------------- counting-construction ---------------- */

std::optional<std::string> check_change_of_basis_unimodular(int d) {
    for (int deg = 0; deg <= d; ++deg) {
        try {
            const auto& basis = counting::degree_basis(deg);
            if (basis.det != 1 && basis.det != -1) {
                std::ostringstream os;
                os << "determinant at degree " << deg << " is " << basis.det;
                return os.str();
            }
        } catch (const counting::construction_defect& e) {
            return std::string(e.what());
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_product_displays(int d) {
    int body_bound = std::max(0, d - 1);
    for (const auto& l : bodies_up_to(body_bound)) {
        if (l.empty()) continue;
        const Element& p = counting::counting_point_like(l);
        std::string lname = print_body(l);
        // [a0][00L] = [a0L] + [a-1,0,L^(1)]
        for (int a = 1; a <= 4; ++a) {
            Element lhs = rank::multiply(rank_key(Index(PairIdx{a, 0})), p);
            Element rhs = counting::phi(a, 0, p);
            rhs += counting::phi(a - 1, 0, rank::shadow(p));
            std::ostringstream label;
            label << "[" << a << "0][00" << lname << "]";
            auto bad = expect_equal(lhs, rhs, label.str());
            if (bad) return bad;
        }
        // [0b][n0L] = sum_{i=0}^{b} [n+i, b-i, L^(i)]
        for (int b = 1; b <= 3; ++b)
            for (int n = 0; n <= 3; ++n) {
                Element base = counting::phi(n, 0, p);
                Element lhs = rank::multiply(rank_key(Index(PairIdx{0, b})), base);
                Element rhs(Basis::rank);
                for (int i = 0; i <= b; ++i)
                    rhs += counting::phi(n + i, b - i, rank::shadow(p, i));
                std::ostringstream label;
                label << "[0" << b << "][" << n << "0" << lname << "]";
                auto bad = expect_equal(lhs, rhs, label.str());
                if (bad) return bad;
            }
    }
    return std::nullopt;
}

std::optional<std::string> check_cone_simplex_like_leading(int d) {
    int body_bound = std::max(0, d - 1);
    for (const auto& l : bodies_up_to(body_bound)) {
        if (l.empty()) continue;
        for (int a = 0; a <= 4; ++a) {
            Element lhs = rank::cone(counting::counting_element(Index(PairIdx{a, 0}, l)));
            const Element& rhs = counting::counting_element(Index(PairIdx{a + 1, 0}, l));
            std::ostringstream label;
            label << "C[" << a << "0" << print_body(l) << "] = [" << a + 1 << "0"
                  << print_body(l) << "]";
            auto bad = expect_equal(lhs, rhs, label.str());
            if (bad) return bad;
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_quasi_d_powers(int d) {
    for (int b = 1; b <= std::min(4, d); ++b) {
        Element lhs(Basis::rank, Index(PairIdx{0, b}));
        Element rhs(Basis::rank);
        for (int i = 0; i <= b; ++i) rhs += counting::quasi_simplex(QuasiKey{{i, b - i}});
        auto bad = expect_equal(lhs, rhs, "D^" + std::to_string(b) + " in the shadow basis");
        if (bad) return bad;
    }
    return std::nullopt;
}

std::optional<std::string> check_counting_fixed_values(int d) {
    (void)d;
    // C[00 00] = [10 00]
    Index i0000 = Index(PairIdx{0, 0}, {PairIdx{0, 0}});
    Element lhs = counting::cone(Element(Basis::counting, i0000));
    Element rhs(Basis::counting, Index(PairIdx{1, 0}, {PairIdx{0, 0}}));
    auto bad = expect_equal(counting::from_counting(lhs), counting::from_counting(rhs),
                            "C[00 00] = [10 00]");
    if (bad) return bad;
    // [10][00 00] = [10 00] + [00 10]
    Element lhs2 = counting::multiply(Element(Basis::counting, Index(PairIdx{1, 0})),
                                      Element(Basis::counting, i0000));
    Element rhs2(Basis::counting, Index(PairIdx{1, 0}, {PairIdx{0, 0}}));
    rhs2.add(Index(PairIdx{0, 0}, {PairIdx{1, 0}}), 1);
    return expect_equal(counting::from_counting(lhs2), counting::from_counting(rhs2),
                        "[10][00 00] = [10 00] + [00 10]");
}

/* ---------------- quasi-simplex ---------------- */

std::optional<std::string> check_quasi_product_formula(int d) {
    auto quasi = [](int a, int b) { return counting::quasi_simplex(QuasiKey{{a, b}}); };
    Element dd(Basis::rank, Index(PairIdx{0, 1}));
    for (int a = 1; a <= std::min(5, d); ++a)
        for (int b = 1; b <= std::min(5, d); ++b) {
            Element lhs = rank::multiply(quasi(a, 0), quasi(b, 0));
            Element rhs = quasi(a + b, 0);
            rhs -= quasi(a + b - 1, 0);
            rhs += rank::multiply(dd, rank::multiply(quasi(a - 1, 0), quasi(b - 1, 0)));
            std::ostringstream label;
            label << "[" << a << "0~][" << b << "0~]";
            auto bad = expect_equal(lhs, rhs, label.str());
            if (bad) return bad;
        }
    return std::nullopt;
}

std::optional<std::string> check_quasi_d_expansions(int d) {
    (void)d;
    auto quasi = [](int a, int b) { return counting::quasi_simplex(QuasiKey{{a, b}}); };
    Element dd(Basis::rank, Index(PairIdx{0, 1}));
    auto bad = expect_equal(dd, quasi(0, 1) + quasi(1, 0), "D = [01~] + [10~]");
    if (bad) return bad;
    Element dd2 = rank::multiply(dd, dd);
    return expect_equal(dd2, quasi(0, 2) + quasi(1, 1) + quasi(2, 0),
                        "D^2 = [02~] + [11~] + [20~]");
}

/* ---------------- runner ---------------- */

std::vector<Check> suite_checks(const std::string& id, int d) {
    if (id == "ring-axioms")
        return {{"dimension-counts", [d] { return check_dimension_counts(d); }},
                {"unit-law", [d] { return check_unit_law(d); }},
                {"commutativity", [d] { return check_commutativity(d); }},
                {"associativity", [d] { return check_associativity(d); }},
                {"grading", [d] { return check_grading(d); }}};
    if (id == "simplices")
        return {{"join-of-simplices", [d] { return check_join_of_simplices(d); }},
                {"simplex-product", [d] { return check_simplex_product(d); }},
                {"simplex-cone-product", [d] { return check_simplex_cone_product(d); }},
                {"db-simplex-product", [d] { return check_db_simplex_product(d); }}};
    if (id == "rank-product")
        return {{"word-index-bijection", [d] { return check_bijection(d); }},
                {"conversion-round-trip", [d] { return check_conversion_round_trip(d); }},
                {"product-oracle", [d] { return check_product_oracle(d); }},
                {"positivity", [d] { return check_rank_positivity(d); }},
                {"point-like-closure", [d] { return check_point_like_closure(d); }},
                {"rank-range", [d] { return check_rank_range(d); }},
                {"merge-coefficient-sums", [d] { return check_merge_coefficient_sums(d); }}};
    if (id == "rank-cone")
        return {{"cone-oracle", [d] { return check_cone_oracle(d); }},
                {"cone-rank-components", [d] { return check_cone_rank_components(d); }},
                {"cone-raising-injective", [d] { return check_cone_raising_injective(d); }},
                {"point-like-range-kernel", [d] { return check_point_like_range_kernel(d); }}};
    if (id == "cone-decomposition")
        return {{"c1-c0a-c1-vanishes", [d] { return check_c1_c0_c1_vanishes(d); }},
                {"cone-power-formulas", [d] { return check_cone_power_formulas(d); }},
                {"shadow-well-defined", [d] { return check_shadow_well_defined(d); }}};
    if (id == "counting-construction")
        return {{"change-of-basis-unimodular",
                 [d] { return check_change_of_basis_unimodular(d); }},
                {"product-displays", [d] { return check_product_displays(d); }},
                {"cone-simplex-like-leading",
                 [d] { return check_cone_simplex_like_leading(d); }},
                {"quasi-d-powers", [d] { return check_quasi_d_powers(d); }},
                {"counting-fixed-values", [d] { return check_counting_fixed_values(d); }}};
    if (id == "quasi-simplex")
        return {{"quasi-product-formula", [d] { return check_quasi_product_formula(d); }},
                {"quasi-d-expansions", [d] { return check_quasi_d_expansions(d); }}};
    throw std::invalid_argument("unknown suite id: " + id);
}

}  // namespace

bool SuiteReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<std::string> suite_ids() {
    return {"ring-axioms",        "simplices", "rank-product",          "rank-cone",
            "cone-decomposition", "counting-construction", "quasi-simplex"};
}

SuiteReport run_suite(const std::string& id, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("run_suite: negative degree bound");
    auto checks = suite_checks(id, max_degree);
    SuiteReport report{id, max_degree, {}};

    // Checks run concurrently over the shared idempotent caches; the
    // report keeps the fixed declaration order.
    std::vector<std::future<std::pair<std::optional<std::string>, double>>> futures;
    futures.reserve(checks.size());
    for (const auto& check : checks) {
        futures.push_back(std::async(std::launch::async, [fn = check.fn] {
            auto start = std::chrono::steady_clock::now();
            std::optional<std::string> failure = fn();
            auto stop = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(stop - start).count();
            return std::make_pair(std::move(failure), ms);
        }));
    }
    for (std::size_t i = 0; i < checks.size(); ++i) {
        auto [failure, ms] = futures[i].get();
        report.checks.push_back(
            {checks[i].name, !failure.has_value(), failure.value_or(""), ms});
    }
    return report;
}

std::string suite_report_to_text(const SuiteReport& report) {
    std::ostringstream body;
    for (const auto& c : report.checks) {
        body << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
        if (!c.pass) {
            std::istringstream detail(c.detail);
            std::string line;
            while (std::getline(detail, line)) body << "  " << line << '\n';
        }
    }
    std::string b = body.str();
    std::size_t failures = 0;
    for (const auto& c : report.checks)
        if (!c.pass) ++failures;
    std::ostringstream os;
    os << "conering-suite/1\n"
       << "suite=" << report.suite << '\n'
       << "max_degree=" << report.max_degree << '\n'
       << "checks=" << report.checks.size() << '\n'
       << "failures=" << failures << '\n'
       << "---\n"
       << b;
    return os.str();
}

nlohmann::ordered_json suite_report_to_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["format"] = "conering-suite";
    j["version"] = 1;
    j["suite"] = report.suite;
    j["max_degree"] = report.max_degree;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.pass) cj["counterexample"] = c.detail;
        j["checks"].push_back(cj);
    }
    return j;
}

}  // namespace conering
