#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "conering/cd_ring.hpp"
#include "conering/counting_basis.hpp"
#include "conering/rank_basis.hpp"
#include "conering/structure_table.hpp"
#include "conering/suites.hpp"

namespace {

using namespace conering;

Element read_element(const std::string& text, const std::string& basis_flag) {
    bool detected_ok = true;
    Basis detected = Basis::cd;
    try {
        detected = detect_basis(text);
    } catch (const parse_error&) {
        detected_ok = false;
    }
    if (!basis_flag.empty()) {
        Basis requested = basis_from_name(basis_flag);
        if (detected_ok && detected != requested)
            throw parse_error("--basis " + basis_flag + " does not match the element literal '" +
                              text + "'");
        return parse_element(text, requested);
    }
    if (!detected_ok)
        throw parse_error("cannot detect the basis of '" + text + "'; pass --basis");
    return parse_element(text, detected);
}

Element basis_multiply(const Element& u, const Element& v) {
    switch (u.basis()) {
        case Basis::cd: return cd::multiply(u, v);
        case Basis::rank: return rank::multiply(u, v);
        case Basis::counting: return counting::multiply(u, v);
    }
    throw std::logic_error("basis_multiply: bad basis");
}

Element basis_cone(const Element& u) {
    switch (u.basis()) {
        case Basis::cd: return cd::cone(u);
        case Basis::rank: return rank::cone(u);
        case Basis::counting: return counting::cone(u);
    }
    throw std::logic_error("basis_cone: bad basis");
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw table_io_error("cannot open for writing: " + path);
    os << text;
    if (!os) throw table_io_error("write failed: " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conering: exact-integer engine for the cone product ring"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string basis_flag, lhs_text, rhs_text, elem_text;
    std::string from_basis, to_basis, suite_id, out_path;
    int max_degree = 0;
    bool as_json = false, strict = false;

    auto* mul = app.add_subcommand("mul", "Multiply two elements (same basis)");
    mul->add_option("--basis", basis_flag, "cd|rank|counting (checked against the literals)");
    mul->add_option("lhs", lhs_text, "first element")->required();
    mul->add_option("rhs", rhs_text, "second element")->required();
    mul->callback([&] {
        Element u = read_element(lhs_text, basis_flag);
        Element v = read_element(rhs_text, basis_flag);
        if (u.basis() != v.basis())
            throw parse_error("operands are in different bases");
        std::cout << print_element(basis_multiply(u, v)) << '\n';
    });

    auto* cone_cmd = app.add_subcommand("cone", "Cone operator on an element");
    cone_cmd->add_option("--basis", basis_flag, "cd|rank|counting");
    cone_cmd->add_option("elem", elem_text, "element")->required();
    cone_cmd->callback([&] {
        Element u = read_element(elem_text, basis_flag);
        std::cout << print_element(basis_cone(u)) << '\n';
    });

    auto* join_cmd = app.add_subcommand("join", "Join J(U,V) of two CD-basis elements");
    join_cmd->add_option("lhs", lhs_text, "first element")->required();
    join_cmd->add_option("rhs", rhs_text, "second element")->required();
    join_cmd->callback([&] {
        Element u = parse_element(lhs_text, Basis::cd);
        Element v = parse_element(rhs_text, Basis::cd);
        std::cout << print_element(cd::join(u, v)) << '\n';
    });

    auto* convert_cmd = app.add_subcommand("convert", "Change of basis");
    convert_cmd->add_option("--from", from_basis, "source basis")->required();
    convert_cmd->add_option("--to", to_basis, "target basis")->required();
    convert_cmd->add_option("elem", elem_text, "element")->required();
    convert_cmd->callback([&] {
        Element e = parse_element(elem_text, basis_from_name(from_basis));
        std::cout << print_element(counting::convert(e, basis_from_name(to_basis))) << '\n';
    });

    auto* dims_cmd = app.add_subcommand("dims", "Per-degree dimension table");
    dims_cmd->add_option("--max-degree", max_degree, "degree bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    dims_cmd->callback([&] {
        for (int d = 0; d <= max_degree; ++d) {
            if (d) std::cout << ' ';
            std::cout << enumerate_words(d).size();
        }
        std::cout << '\n';
    });

    auto* table_cmd = app.add_subcommand("table", "Generate a structure-coefficient table");
    table_cmd->add_option("--basis", basis_flag, "cd|rank|counting")->required();
    table_cmd->add_option("--max-degree", max_degree, "degree bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--out", out_path, "output path")->required();
    table_cmd->add_flag("--json", as_json, "emit JSON instead of the text format");
    table_cmd->callback([&] {
        StructureTable table = build_structure_table(basis_from_name(basis_flag), max_degree);
        if (as_json)
            write_text_file(out_path, table_to_json(table).dump(2) + "\n");
        else
            write_table(table, out_path);
        std::cerr << "wrote " << out_path << " (" << table.product.size() << " product, "
                  << table.cone.size() << " cone entries)\n";
    });

    auto* verify_cmd = app.add_subcommand("verify", "Run an identity suite");
    verify_cmd->add_option("--suite", suite_id, "suite id")->required();
    verify_cmd->add_option("--max-degree", max_degree, "degree bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_flag("--json", as_json, "emit JSON report");
    verify_cmd->callback([&] {
        SuiteReport report = run_suite(suite_id, max_degree);
        if (as_json)
            std::cout << suite_report_to_json(report).dump(2) << '\n';
        else
            std::cout << suite_report_to_text(report);
        for (const auto& c : report.checks)
            std::cerr << c.name << ": " << c.millis << " ms\n";
        if (!report.all_pass()) exit_code = 1;
    });

    auto* scan_cmd = app.add_subcommand("scan", "Counting-basis negativity scan");
    scan_cmd->add_option("--max-degree", max_degree, "degree bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    scan_cmd->add_option("--out", out_path, "write the report to this path");
    scan_cmd->add_flag("--json", as_json, "emit JSON report");
    scan_cmd->add_flag("--strict", strict, "exit 1 when the report is nonempty");
    scan_cmd->callback([&] {
        NegativityReport report = negativity_scan(max_degree);
        std::string text =
            as_json ? report_to_json(report).dump(2) + "\n" : report_to_text(report);
        if (out_path.empty())
            std::cout << text;
        else
            write_text_file(out_path, text);
        std::cerr << "negative coefficients: " << report.product_negatives.size()
                  << " product, " << report.cone_negatives.size() << " cone\n";
        if (strict && !report.empty()) exit_code = 1;
    });

    auto* betti_cmd = app.add_subcommand("betti", "Counting-basis coordinates of a "
                                                  "homogeneous element");
    betti_cmd->add_option("elem", elem_text, "element (any basis)")->required();
    betti_cmd->add_flag("--json", as_json, "emit the dense coordinate vector as JSON");
    betti_cmd->callback([&] {
        Element e = read_element(elem_text, basis_flag);
        if (as_json) {
            auto coords = counting::betti_vector(e);
            nlohmann::ordered_json j;
            j["degree"] = e.is_zero() ? 0 : e.degree();
            j["coordinates"] = nlohmann::ordered_json::array();
            for (const auto& [key, coeff] : coords)
                j["coordinates"].push_back(
                    {{"key", print_key(key, Basis::counting)}, {"coeff", coeff.str()}});
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << print_element(counting::betti_coordinates(e)) << '\n';
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const counting::construction_defect& e) {
        std::cerr << "finding: " << e.what() << '\n';
        return 1;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const table_io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
