#include "conering/structure_table.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "conering/cd_ring.hpp"
#include "conering/counting_basis.hpp"
#include "conering/rank_basis.hpp"

namespace conering {

namespace {

Element key_product(Basis basis, const Index& i, const Index& j) {
    Element u(basis, i), v(basis, j);
    switch (basis) {
        case Basis::cd: return cd::multiply(u, v);
        case Basis::rank: return rank::multiply(u, v);
        case Basis::counting: return counting::multiply(u, v);
    }
    throw std::logic_error("key_product: bad basis");
}

Element key_cone(Basis basis, const Index& i) {
    Element u(basis, i);
    switch (basis) {
        case Basis::cd: return cd::cone(u);
        case Basis::rank: return rank::cone(u);
        case Basis::counting: return counting::cone(u);
    }
    throw std::logic_error("key_cone: bad basis");
}

// Keys of degree 0..max in the display order of the basis.
std::vector<Index> basis_keys_up_to(Basis basis, int max_degree) {
    std::vector<Index> keys;
    for (int d = 0; d <= max_degree; ++d) {
        if (basis == Basis::cd) {
            for (const auto& w : enumerate_words(d)) keys.push_back(index_of_word(w));
        } else {
            for (const auto& k : enumerate_indices(d)) keys.push_back(k);
        }
    }
    return keys;
}

}  // namespace

StructureTable build_structure_table(Basis basis, int max_degree) {
    if (max_degree < 0)
        throw std::invalid_argument("build_structure_table: negative degree bound");
    StructureTable table;
    table.basis = basis;
    table.max_degree = max_degree;
    auto keys = basis_keys_up_to(basis, max_degree);
    for (const auto& i : keys) {
        for (const auto& j : keys) {
            if (i.degree() + j.degree() > max_degree) continue;
            table.product.emplace(std::make_pair(i, j), key_product(basis, i, j));
        }
        if (i.degree() <= max_degree - 1) table.cone.emplace(i, key_cone(basis, i));
    }
    return table;
}

/* ---------------- serialization ---------------- */

namespace {

// Element terms as space-separated "<coeff>*<key>" tokens, canonical
// key order, explicit coefficient (sign included); zero prints as "0".
std::string terms_token_string(const Element& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& key : e.ordered_keys()) {
        if (!first) os << ' ';
        os << e.coeff(key) << '*' << print_key(key, e.basis());
        first = false;
    }
    return os.str();
}

Element parse_terms_token_string(const std::string& text, Basis basis) {
    Element out(basis);
    std::istringstream is(text);
    std::string token;
    while (is >> token) {
        if (token == "0") continue;
        auto star = token.find('*');
        if (star == std::string::npos)
            throw table_io_error("malformed coefficient token: " + token);
        Int coeff(token.substr(0, star));
        out.add(parse_key(token.substr(star + 1), basis), coeff);
    }
    return out;
}

std::string table_body(const StructureTable& table) {
    std::ostringstream os;
    // map order is canonical for index keys; cd tables re-sort by word
    // order for display.
    std::vector<std::pair<Index, Index>> pairs;
    pairs.reserve(table.product.size());
    for (const auto& [k, v] : table.product) pairs.push_back(k);
    std::vector<Index> cone_keys;
    cone_keys.reserve(table.cone.size());
    for (const auto& [k, v] : table.cone) cone_keys.push_back(k);
    if (table.basis == Basis::cd) {
        auto wl = [](const Index& x, const Index& y) {
            return word_less(word_of_index(x), word_of_index(y));
        };
        std::sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
            if (wl(x.first, y.first)) return true;
            if (wl(y.first, x.first)) return false;
            return wl(x.second, y.second);
        });
        std::sort(cone_keys.begin(), cone_keys.end(), wl);
    }
    for (const auto& [i, j] : pairs) {
        os << "P " << print_key(i, table.basis) << ' ' << print_key(j, table.basis) << " -> "
           << terms_token_string(table.product.at({i, j})) << '\n';
    }
    for (const auto& i : cone_keys) {
        os << "C " << print_key(i, table.basis) << " -> "
           << terms_token_string(table.cone.at(i)) << '\n';
    }
    return os.str();
}

}  // namespace

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xF);
    return os.str();
}

std::string table_to_text(const StructureTable& table) {
    std::string body = table_body(table);
    std::ostringstream os;
    os << "conering-table/1\n"
       << "engine=" << table.engine << '\n'
       << "basis=" << basis_name(table.basis) << '\n'
       << "max_degree=" << table.max_degree << '\n'
       << "checksum=fnv1a64:" << fnv1a64_hex(body) << '\n'
       << "---\n"
       << body;
    return os.str();
}

nlohmann::ordered_json table_to_json(const StructureTable& table) {
    nlohmann::ordered_json j;
    j["format"] = "conering-table";
    j["version"] = 1;
    j["engine"] = table.engine;
    j["basis"] = basis_name(table.basis);
    j["max_degree"] = table.max_degree;
    auto terms_json = [](const Element& e) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& key : e.ordered_keys())
            out.push_back({{"key", print_key(key, e.basis())}, {"coeff", e.coeff(key).str()}});
        return out;
    };
    j["product"] = nlohmann::ordered_json::array();
    for (const auto& [pair, value] : table.product)
        j["product"].push_back({{"i", print_key(pair.first, table.basis)},
                                {"j", print_key(pair.second, table.basis)},
                                {"terms", terms_json(value)}});
    j["cone"] = nlohmann::ordered_json::array();
    for (const auto& [key, value] : table.cone)
        j["cone"].push_back(
            {{"i", print_key(key, table.basis)}, {"terms", terms_json(value)}});
    return j;
}

void write_table(const StructureTable& table, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw table_io_error("cannot open for writing: " + path.string());
    os << table_to_text(table);
    if (!os) throw table_io_error("write failed: " + path.string());
}

namespace {

std::string header_value(const std::string& line, const std::string& key) {
    std::string prefix = key + "=";
    if (line.rfind(prefix, 0) != 0)
        throw table_io_error("malformed table header, expected '" + key + "=': " + line);
    return line.substr(prefix.size());
}

}  // namespace

StructureTable read_table(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw table_io_error("cannot open for reading: " + path.string());
    std::string line;
    if (!std::getline(is, line)) throw table_io_error("empty table file: " + path.string());
    if (line.rfind("conering-table/", 0) != 0)
        throw table_io_error("not a conering table file: " + path.string());
    std::string version = line.substr(std::string("conering-table/").size());
    if (version != "1")
        throw table_io_error("unsupported table format version " + version + ": " +
                             path.string());

    StructureTable table;
    if (!std::getline(is, line)) throw table_io_error("truncated header");
    table.engine = header_value(line, "engine");
    if (!std::getline(is, line)) throw table_io_error("truncated header");
    table.basis = basis_from_name(header_value(line, "basis"));
    if (!std::getline(is, line)) throw table_io_error("truncated header");
    table.max_degree = std::stoi(header_value(line, "max_degree"));
    if (!std::getline(is, line)) throw table_io_error("truncated header");
    std::string checksum = header_value(line, "checksum");
    if (!std::getline(is, line) || line != "---")
        throw table_io_error("missing '---' separator");

    std::string body((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    if (checksum != "fnv1a64:" + fnv1a64_hex(body))
        throw table_io_error("checksum mismatch: " + path.string());

    std::istringstream bs(body);
    while (std::getline(bs, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        std::string iword, jword, arrow;
        if (tag == "P") {
            ls >> iword >> jword >> arrow;
        } else if (tag == "C") {
            ls >> iword >> arrow;
        } else {
            throw table_io_error("malformed table line: " + line);
        }
        if (arrow != "->") throw table_io_error("malformed table line: " + line);
        std::string rest;
        std::getline(ls, rest);
        Element value = parse_terms_token_string(rest, table.basis);
        if (tag == "P") {
            table.product.emplace(std::make_pair(parse_key(iword, table.basis),
                                                 parse_key(jword, table.basis)),
                                  std::move(value));
        } else {
            table.cone.emplace(parse_key(iword, table.basis), std::move(value));
        }
    }
    return table;
}

/* ---------------- negativity scan ---------------- */

NegativityReport scan_table(const StructureTable& counting_table) {
    if (counting_table.basis != Basis::counting)
        throw std::invalid_argument("scan_table: table is not in the counting basis");
    NegativityReport report;
    report.max_degree = counting_table.max_degree;
    report.engine = counting_table.engine;
    for (const auto& [pair, value] : counting_table.product)
        for (const auto& [k, c] : value.terms())
            if (c < 0) report.product_negatives.push_back({pair.first, pair.second, k, c});
    for (const auto& [i, value] : counting_table.cone)
        for (const auto& [k, c] : value.terms())
            if (c < 0) report.cone_negatives.push_back({i, k, c});
    std::sort(report.product_negatives.begin(), report.product_negatives.end());
    std::sort(report.cone_negatives.begin(), report.cone_negatives.end());
    return report;
}

NegativityReport negativity_scan(int max_degree) {
    return scan_table(build_structure_table(Basis::counting, max_degree));
}

std::string report_to_text(const NegativityReport& report) {
    std::ostringstream body;
    for (const auto& e : report.product_negatives)
        body << "P " << print_key(e.i, Basis::counting) << ' '
             << print_key(e.j, Basis::counting) << " -> " << e.coeff << '*'
             << print_key(e.k, Basis::counting) << '\n';
    for (const auto& e : report.cone_negatives)
        body << "C " << print_key(e.i, Basis::counting) << " -> " << e.coeff << '*'
             << print_key(e.j, Basis::counting) << '\n';
    std::string b = body.str();
    std::ostringstream os;
    os << "conering-scan/1\n"
       << "engine=" << report.engine << '\n'
       << "basis=counting\n"
       << "max_degree=" << report.max_degree << '\n'
       << "negative_product_coefficients=" << report.product_negatives.size() << '\n'
       << "negative_cone_coefficients=" << report.cone_negatives.size() << '\n'
       << "checksum=fnv1a64:" << fnv1a64_hex(b) << '\n'
       << "---\n"
       << b;
    return os.str();
}

nlohmann::ordered_json report_to_json(const NegativityReport& report) {
    nlohmann::ordered_json j;
    j["format"] = "conering-scan";
    j["version"] = 1;
    j["engine"] = report.engine;
    j["basis"] = "counting";
    j["max_degree"] = report.max_degree;
    j["negative_product_coefficients"] = nlohmann::ordered_json::array();
    for (const auto& e : report.product_negatives)
        j["negative_product_coefficients"].push_back({{"i", print_key(e.i, Basis::counting)},
                                                      {"j", print_key(e.j, Basis::counting)},
                                                      {"k", print_key(e.k, Basis::counting)},
                                                      {"coeff", e.coeff.str()}});
    j["negative_cone_coefficients"] = nlohmann::ordered_json::array();
    for (const auto& e : report.cone_negatives)
        j["negative_cone_coefficients"].push_back({{"i", print_key(e.i, Basis::counting)},
                                                   {"j", print_key(e.j, Basis::counting)},
                                                   {"coeff", e.coeff.str()}});
    return j;
}

}  // namespace conering
