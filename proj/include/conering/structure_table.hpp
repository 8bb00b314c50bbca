#pragma once

#include <filesystem>
#include <string>
#include <tuple>

#include "conering/element.hpp"

#include "json.hpp"

namespace conering {

inline constexpr const char* kEngineId = "conering/1.0.0";

class table_io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Structure coefficients of one basis up to a degree bound: product
   entries for every ordered key pair with degree sum <= max_degree,
   cone entries for every key of degree <= max_degree - 1. Entries are
   exact and complete; serialization is deterministic (canonical key
   order, no timestamps). */
struct StructureTable {
    Basis basis = Basis::cd;
    int max_degree = 0;
    std::string engine = kEngineId;
    std::map<std::pair<Index, Index>, Element> product;
    std::map<Index, Element> cone;

    bool operator==(const StructureTable&) const = default;
};

StructureTable build_structure_table(Basis basis, int max_degree);

/* Line-oriented text format:

     conering-table/1
     engine=conering/1.0.0
     basis=rank
     max_degree=4
     checksum=fnv1a64:<16 hex digits>
     ---
     P {0:0} {0:0} -> 1*{0:0}
     C {0:0} -> 1*{1:0}

   The checksum covers the canonicalized body (everything after the
   '---' line). Keys appear in the canonical order of the basis. */
std::string table_to_text(const StructureTable& table);
nlohmann::ordered_json table_to_json(const StructureTable& table);

void write_table(const StructureTable& table, const std::filesystem::path& path);
StructureTable read_table(const std::filesystem::path& path);

/* Negativity scan over the counting basis: every negative product
   coefficient lambda_ijk and cone coefficient mu_ij with key degrees
   within the bound, listed in canonical order. The scan reports and
   never aborts: a nonempty report is a finding about the candidate
   basis, not an error. */
struct NegativityReport {
    int max_degree = 0;
    std::string engine = kEngineId;

    struct ProductEntry {
        Index i, j, k;
        Int coeff;
        bool operator==(const ProductEntry&) const = default;
        bool operator<(const ProductEntry& o) const {
            return std::tie(i, j, k) < std::tie(o.i, o.j, o.k);
        }
    };
    struct ConeEntry {
        Index i, j;
        Int coeff;
        bool operator==(const ConeEntry&) const = default;
        bool operator<(const ConeEntry& o) const { return std::tie(i, j) < std::tie(o.i, o.j); }
    };
    std::vector<ProductEntry> product_negatives;
    std::vector<ConeEntry> cone_negatives;

    bool empty() const { return product_negatives.empty() && cone_negatives.empty(); }
    bool operator==(const NegativityReport&) const = default;
};

NegativityReport negativity_scan(int max_degree);
NegativityReport scan_table(const StructureTable& counting_table);

std::string report_to_text(const NegativityReport& report);
nlohmann::ordered_json report_to_json(const NegativityReport& report);

// FNV-1a 64-bit, printed as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace conering
