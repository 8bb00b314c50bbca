#include "conering/element.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace conering {

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::cd: return "cd";
        case Basis::rank: return "rank";
        case Basis::counting: return "counting";
    }
    throw std::logic_error("basis_name: bad tag");
}

Basis basis_from_name(const std::string& name) {
    if (name == "cd") return Basis::cd;
    if (name == "rank") return Basis::rank;
    if (name == "counting") return Basis::counting;
    throw parse_error("unknown basis: " + name);
}

Int Element::coeff(const Index& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Int(0) : it->second;
}

void Element::add(const Index& key, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, std::move(c));
    if (!inserted) {  // try_emplace left c untouched
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Element::check_same_basis(const Element& o) const {
    if (basis_ != o.basis_)
        throw std::invalid_argument(std::string("basis mismatch: ") + basis_name(basis_) +
                                    " vs " + basis_name(o.basis_));
}

Element& Element::operator+=(const Element& o) {
    check_same_basis(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    check_same_basis(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

Element& Element::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

bool Element::homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [k, c] : terms_)
        if (k.degree() != d) return false;
    return true;
}

int Element::degree() const {
    if (terms_.empty() || !homogeneous())
        throw std::logic_error("degree: element is not nonzero homogeneous");
    return terms_.begin()->first.degree();
}

std::vector<Index> Element::ordered_keys() const {
    std::vector<Index> keys;
    keys.reserve(terms_.size());
    for (const auto& [k, c] : terms_) keys.push_back(k);
    if (basis_ == Basis::cd) {
        std::sort(keys.begin(), keys.end(), [](const Index& x, const Index& y) {
            return word_less(word_of_index(x), word_of_index(y));
        });
    }
    return keys;  // map order is already canonical for index keys
}

std::string Element::str() const { return print_element(*this); }

/* ---------------- printing ---------------- */

std::string print_key(const Index& key, Basis basis) {
    if (basis == Basis::cd) return "<" + word_of_index(key) + ">";
    std::ostringstream os;
    os << (basis == Basis::rank ? '{' : '[');
    bool first = true;
    for (const auto& p : key.pairs()) {
        if (!first) os << ',';
        os << p.a << ':' << p.b;
        first = false;
    }
    os << (basis == Basis::rank ? '}' : ']');
    return os.str();
}

std::string print_element(const Element& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& key : e.ordered_keys()) {
        Int c = e.coeff(key);
        bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mag != 1) os << mag << '*';
        os << print_key(key, e.basis());
        first = false;
    }
    return os.str();
}

std::string print_body(const BodyIndex& body) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (const auto& p : body) {
        if (!first) os << ',';
        os << p.a << ':' << p.b;
        first = false;
    }
    os << ')';
    return os.str();
}

std::string print_body_sum(const BodySum& s) {
    if (s.empty()) return "0";
    std::vector<BodyIndex> keys;
    keys.reserve(s.size());
    for (const auto& [k, c] : s) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const BodyIndex& x, const BodyIndex& y) {
        if (body_degree(x) != body_degree(y)) return body_degree(x) < body_degree(y);
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& key : keys) {
        const Int& c = s.at(key);
        bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mag != 1) os << mag << '*';
        os << print_body(key);
        first = false;
    }
    return os.str();
}

std::string print_quasi_key(const QuasiKey& k) {
    std::ostringstream os;
    os << '[' << k.pair.a << ':' << k.pair.b << "~]";
    return os.str();
}

/* ---------------- parsing ---------------- */

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : s_(text) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of input: " + s_);
        return s_[pos_];
    }
    char get() {
        char c = peek();
        ++pos_;
        return c;
    }
    void expect(char c) {
        char got = get();
        if (got != c)
            throw parse_error(std::string("expected '") + c + "' but found '" + got +
                              "' in: " + s_);
    }
    bool accept(char c) {
        if (done() || peek() != c) return false;
        ++pos_;
        return true;
    }

    std::string digits() {
        skip_ws();
        std::string out;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            out += s_[pos_];
            ++pos_;
        }
        if (out.empty()) throw parse_error("expected an integer in: " + s_);
        return out;
    }

    int small_uint() {
        std::string d = digits();
        if (d.size() > 6) throw parse_error("exponent out of range: " + d);
        return std::stoi(d);
    }

    const std::string& text() const { return s_; }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

PairIdx parse_pair(Cursor& cur) {
    PairIdx p;
    p.a = cur.small_uint();
    cur.expect(':');
    p.b = cur.small_uint();
    return p;
}

Index parse_index_list(Cursor& cur, char close) {
    std::vector<PairIdx> pairs;
    pairs.push_back(parse_pair(cur));
    while (cur.accept(',')) pairs.push_back(parse_pair(cur));
    cur.expect(close);
    return Index::from_pairs(pairs);
}

struct KeyResult {
    Index key;
    Basis basis;
};

KeyResult parse_any_key(Cursor& cur) {
    char open = cur.get();
    if (open == '<') {
        CDWord w;
        while (true) {
            char c = cur.get();
            if (c == '>') break;
            if (c != 'C' && c != 'D')
                throw parse_error(std::string("invalid CD letter '") + c + "' in: " + cur.text());
            w += c;
        }
        return {index_of_word(w), Basis::cd};
    }
    if (open == '{') return {parse_index_list(cur, '}'), Basis::rank};
    if (open == '[') return {parse_index_list(cur, ']'), Basis::counting};
    throw parse_error(std::string("expected a key, found '") + open + "' in: " + cur.text());
}

}  // namespace

Element parse_element(const std::string& text) {
    Cursor cur(text);
    if (cur.done()) throw parse_error("empty element text");

    if (cur.peek() == '0') {
        cur.get();
        if (!cur.done()) throw parse_error("trailing input after 0: " + text);
        return Element(Basis::cd);
    }

    bool have_basis = false;
    Basis basis = Basis::cd;
    Element out(basis);

    bool negative = cur.accept('-');
    if (!negative) cur.accept('+');
    while (true) {
        Int coeff = 1;
        char c = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = Int(cur.digits());
            cur.expect('*');
        }
        auto [key, key_basis] = parse_any_key(cur);
        if (!have_basis) {
            basis = key_basis;
            out = Element(basis);
            have_basis = true;
        } else if (key_basis != basis) {
            throw parse_error("mixed basis keys in element: " + text);
        }
        out.add(key, negative ? Int(-coeff) : coeff);
        if (cur.done()) break;
        char op = cur.get();
        if (op == '-')
            negative = true;
        else if (op == '+')
            negative = false;
        else
            throw parse_error(std::string("expected '+' or '-', found '") + op + "' in: " + text);
    }
    return out;
}

Element parse_element(const std::string& text, Basis expected) {
    Cursor probe(text);
    if (!probe.done() && probe.peek() == '0') {
        parse_element(text);  // validates the zero literal
        return Element(expected);
    }
    Element e = parse_element(text);
    if (!e.is_zero() && e.basis() != expected)
        throw parse_error(std::string("element is in the ") + basis_name(e.basis()) +
                          " basis, expected " + basis_name(expected));
    return e;
}

Index parse_key(const std::string& text, Basis basis) {
    Cursor cur(text);
    auto [key, got] = parse_any_key(cur);
    if (!cur.done()) throw parse_error("trailing input after key: " + text);
    if (got != basis)
        throw parse_error(std::string("key is in the ") + basis_name(got) + " basis, expected " +
                          basis_name(basis));
    return key;
}

Basis detect_basis(const std::string& text) {
    Cursor cur(text);
    if (cur.done()) throw parse_error("empty element text");
    char c = cur.peek();
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
        // skip a leading sign/coefficient to reach the first key
        if (!cur.accept('-')) cur.accept('+');
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            cur.digits();
            if (!cur.accept('*'))
                throw parse_error("cannot detect basis of: " + text);
        }
        c = cur.peek();
    }
    switch (c) {
        case '<': return Basis::cd;
        case '{': return Basis::rank;
        case '[': return Basis::counting;
        default: throw parse_error("cannot detect basis of: " + text);
    }
}

QuasiKey parse_quasi_key(const std::string& text) {
    Cursor cur(text);
    cur.expect('[');
    PairIdx p = parse_pair(cur);
    cur.expect('~');
    cur.expect(']');
    if (!cur.done()) throw parse_error("trailing input after quasi key: " + text);
    return QuasiKey{p};
}

}  // namespace conering
