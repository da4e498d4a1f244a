#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtoric/bfk.hpp"
#include "qtoric/error.hpp"
#include "qtoric/json_io.hpp"
#include "qtoric/quasitoric.hpp"

namespace {

using namespace qtoric;

// Exit codes: 0 success, 1 domain/validation error, 2 parse error,
// 3 check failure.
constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kParseError = 2;
constexpr int kCheckFailure = 3;

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(item, &pos);
            if (pos != item.size())
                throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ArgumentError(what + ": bad integer '" + item + "'");
        }
    }
    if (out.empty())
        throw ArgumentError(what + ": empty list");
    return out;
}

QuasitoricData apply_permutation(const QuasitoricData& d, const std::vector<int>& perm) {
    const int v = d.vertex_count();
    if (static_cast<int>(perm.size()) != v)
        throw ArgumentError("--permute: length must equal the vertex count");
    std::vector<int> inverse(v, -1);
    for (int k = 0; k < v; ++k) {
        if (perm[k] < 0 || perm[k] >= v || inverse[perm[k]] != -1)
            throw ArgumentError("--permute: not a permutation of 0.." + std::to_string(v - 1));
        inverse[perm[k]] = k;
    }
    QuasitoricData out = d;
    for (int k = 0; k < v; ++k) {
        out.vertices[k] = d.vertices[perm[k]];
        out.lambda[k] = d.lambda[perm[k]];
    }
    for (auto& facet : out.facets)
        for (int& vert : facet)
            vert = inverse[vert];
    return out;
}

nlohmann::ordered_json json_integer(const Integer& x) {
    static const Integer lo = std::numeric_limits<long long>::min();
    static const Integer hi = std::numeric_limits<long long>::max();
    if (x >= lo && x <= hi)
        return x.convert_to<long long>();
    return x.str();  // exact, as a decimal string
}

int cmd_validate(const std::string& path) {
    const QuasitoricData d = parse_input_file(path);
    const ValidationReport rep = validate(d);
    if (rep.valid) {
        std::ostringstream dets;
        for (std::size_t i = 0; i < rep.facet_dets.size(); ++i)
            dets << (i ? "," : "") << rep.facet_dets[i];
        std::cerr << "valid; " << d.facet_count() << " facets; dets [" << dets.str() << "]\n";
        return kOk;
    }
    std::cerr << "invalid:\n";
    for (const auto& issue : rep.issues)
        std::cerr << "  " << issue << "\n";
    return kDomainError;
}

int cmd_charnums(const std::string& path, const std::string& composition, bool all, bool json,
                 const std::string& permute) {
    if (all == !composition.empty())
        throw ArgumentError("charnums: pass exactly one of --composition or --all");
    QuasitoricData d = parse_input_file(path);
    if (!permute.empty())
        d = apply_permutation(d, parse_int_list(permute, "--permute"));
    const ValidationReport rep = validate(d);
    if (!rep.valid) {
        std::cerr << "invalid input:\n";
        for (const auto& issue : rep.issues)
            std::cerr << "  " << issue << "\n";
        return kDomainError;
    }

    std::vector<Composition> comps;
    if (all) {
        comps = compositions_of(d.m);
    } else {
        const Composition alpha{parse_int_list(composition, "--composition")};
        if (alpha.weight() != d.m)
            throw ArgumentError("composition weight " + std::to_string(alpha.weight()) +
                                " does not match m = " + std::to_string(d.m));
        comps.push_back(alpha);
    }

    if (json) {
        nlohmann::ordered_json out;
        out["name"] = d.name;
        out["m"] = d.m;
        nlohmann::ordered_json values;
        for (const Composition& alpha : comps)
            values[alpha.str()] = json_integer(char_number(d, alpha));
        out["values"] = std::move(values);
        std::cout << out.dump(2) << "\n";
    } else {
        for (const Composition& alpha : comps)
            std::cout << alpha.str() << "\t" << char_number(d, alpha) << "\n";
    }
    return kOk;
}

int cmd_preset(const std::string& kind, const std::vector<std::string>& args,
               const std::string& out_path) {
    QuasitoricData d;
    if (kind == "cpn") {
        if (args.size() != 1)
            throw ArgumentError("preset cpn takes exactly one argument: n");
        d = preset_cpn(parse_int_list(args[0], "n").at(0));
    } else if (kind == "hirzebruch") {
        if (args.size() != 1)
            throw ArgumentError("preset hirzebruch takes exactly one argument: a");
        d = preset_hirzebruch(parse_int_list(args[0], "a").at(0));
    } else if (kind == "product") {
        if (args.size() != 2)
            throw ArgumentError("preset product takes exactly two input files");
        d = product(parse_input_file(args[0]), parse_input_file(args[1]));
    } else {
        throw ArgumentError("unknown preset kind '" + kind + "' (cpn|hirzebruch|product)");
    }
    write_input_file(d, out_path);
    std::cerr << "wrote " << out_path << " (" << d.vertex_count() << " vertices, "
              << d.facet_count() << " facets)\n";
    return kOk;
}

int cmd_coproduct(int degree, bool want_antipode) {
    if (degree < 0)
        throw ArgumentError("--degree must be >= 0");
    if (want_antipode)
        std::cout << format_nsymm(antipode_generator(degree)) << "\n";
    else
        std::cout << format_tensor(delta_bfk_generator(degree)) << "\n";
    return kOk;
}

int cmd_check(const std::string& which, int max_degree, std::optional<int> fault) {
    if (max_degree < 1)
        throw ArgumentError("--max-degree must be >= 1");
    GeneratorTable table(max_degree);
    if (fault)
        table.drop_one_term(*fault);
    CheckReport report;
    if (which == "conjecture15")
        report = check_conjecture15(max_degree, table);
    else if (which == "coassoc")
        report = check_coassociativity(max_degree, table);
    else
        throw ArgumentError("unknown check '" + which + "' (conjecture15|coassoc)");
    for (const auto& deg : report.degrees)
        std::cout << deg.degree << "\t" << (deg.ok ? "ok" : "FAIL") << "\n";
    if (const DegreeCheck* fail = report.first_failure()) {
        std::cerr << "first discrepancy at degree " << fail->degree << ": " << fail->detail
                  << "\n";
        return kCheckFailure;
    }
    return kOk;
}

int cmd_kernel(const std::string& path) {
    const QuasitoricData d = parse_input_file(path);
    const KernelLattice k = kernel_lattice(d);
    std::cout << "rank\t" << k.rank << "\n";
    for (int i = 0; i < k.basis.rows(); ++i) {
        for (int j = 0; j < k.basis.cols(); ++j)
            std::cout << (j ? "\t" : "") << k.basis.at(i, j);
        std::cout << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact characteristic numbers of quasitoric manifolds and the residue\n"
                 "coproduct on noncommutative symmetric functions"};
    app.require_subcommand(1);

    std::string file, composition, permute, out_path, preset_kind, check_kind;
    std::vector<std::string> preset_args;
    bool all = false, json = false;
    int degree = 0, max_degree = 1;
    std::optional<int> fault;

    CLI::App* validate_cmd = app.add_subcommand("validate", "check an input file");
    validate_cmd->add_option("file", file)->required();

    CLI::App* charnums_cmd =
        app.add_subcommand("charnums", "characteristic numbers [alpha]_P");
    charnums_cmd->add_option("file", file)->required();
    charnums_cmd->add_option("--composition", composition, "comma-separated parts");
    charnums_cmd->add_flag("--all", all, "all compositions of m in canonical order");
    charnums_cmd->add_flag("--json", json, "JSON output");
    charnums_cmd->add_option("--permute", permute, "relabel vertices by a permutation");

    CLI::App* preset_cmd = app.add_subcommand("preset", "write a built-in example");
    preset_cmd->add_option("kind", preset_kind, "cpn|hirzebruch|product")->required();
    preset_cmd->add_option("args", preset_args, "kind-specific arguments");
    preset_cmd->add_option("-o,--output", out_path)->required();

    CLI::App* coproduct_cmd = app.add_subcommand("coproduct", "print Delta_BFK(Z_n)");
    coproduct_cmd->add_option("--degree", degree)->required();

    CLI::App* antipode_cmd = app.add_subcommand("antipode", "print S(Z_n)");
    antipode_cmd->add_option("--degree", degree)->required();

    CLI::App* check_cmd = app.add_subcommand("check", "verify coproduct identities");
    check_cmd->add_option("which", check_kind, "conjecture15|coassoc")->required();
    check_cmd->add_option("--max-degree", max_degree)->required();
    check_cmd->add_option("--inject-fault", fault)->group("");  // test harness hook

    CLI::App* kernel_cmd = app.add_subcommand("kernel", "kernel lattice of lambda");
    kernel_cmd->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }

    try {
        if (validate_cmd->parsed())
            return cmd_validate(file);
        if (charnums_cmd->parsed())
            return cmd_charnums(file, composition, all, json, permute);
        if (preset_cmd->parsed())
            return cmd_preset(preset_kind, preset_args, out_path);
        if (coproduct_cmd->parsed())
            return cmd_coproduct(degree, false);
        if (antipode_cmd->parsed())
            return cmd_coproduct(degree, true);
        if (check_cmd->parsed())
            return cmd_check(check_kind, max_degree, fault);
        if (kernel_cmd->parsed())
            return cmd_kernel(file);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kDomainError;
}
