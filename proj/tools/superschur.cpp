// superschur — exact-arithmetic toolkit for finite-dimensional Lie
// superalgebras over the rationals: axiom validation, Schur multipliers
// (two independent engines), dimension-bound invariants, a catalog of
// published nilpotent examples, and a claimed-vs-computed report.
//
// Exit codes: 0 success, 1 axiom failure (or failed report checks),
//             2 parse/input failure, 3 engine disagreement.
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "superschur/cli_commands.hpp"

int main(int argc, char** argv) {
    using namespace superschur::cli;

    CLI::App app{"exact Schur-multiplier toolkit for Lie superalgebras over Q"};
    app.require_subcommand(1);

    std::string path;
    bool representatives = false;
    std::vector<std::string> candidates;
    std::string catalog_key;
    std::optional<std::string> p_value;
    std::optional<std::size_t> m_dim, n_dim;
    std::string out_path;
    std::vector<std::string> scan_values;
    std::string verify_out = "verify_report";

    auto* validate = app.add_subcommand("validate", "check the graded Lie axioms");
    validate->add_option("file", path, "algebra JSON file")->required();

    auto* info = app.add_subcommand("info", "dimensions, series, center, class");
    info->add_option("file", path, "algebra JSON file")->required();

    auto* multiplier = app.add_subcommand("multiplier", "Schur multiplier M(L), both engines");
    multiplier->add_option("file", path, "algebra JSON file")->required();
    multiplier->add_flag("--representatives", representatives,
                         "print 2-cycle representatives of a basis of M(L)");

    auto* invariants = app.add_subcommand("invariants", "t(L), s(L) and dimension bounds");
    invariants->add_option("file", path, "algebra JSON file")->required();

    auto* capability = app.add_subcommand("capability", "central-quotient capability analysis");
    capability->add_option("file", path, "algebra JSON file")->required();
    capability->add_option("--candidate", candidates,
                           "extra central element to test, e.g. \"a - 2*b\" (repeatable)");

    auto* classify = app.add_subcommand("classify", "match against the published classification");
    classify->add_option("file", path, "algebra JSON file")->required();

    auto* catalog = app.add_subcommand("catalog", "built-in catalog of published algebras");
    catalog->require_subcommand(1);
    auto* cat_list = catalog->add_subcommand("list", "list catalog keys and published claims");
    auto* cat_emit = catalog->add_subcommand("emit", "write a catalog algebra as JSON");
    cat_emit->add_option("key", catalog_key, "catalog key, e.g. \"L_{2,2}^{(11)}\"")->required();
    std::string p_raw;
    auto* p_opt = cat_emit->add_option("--p", p_raw, "parameter p (rational, p > 0)");
    cat_emit->add_option("--m", m_dim, "even dimension (families taking dims)");
    cat_emit->add_option("--n", n_dim, "odd dimension (families taking dims)");
    cat_emit->add_option("-o,--out", out_path, "output file (default: stdout)");
    auto* cat_scan = catalog->add_subcommand("scan", "multiplier dims across parameter values");
    cat_scan->add_option("key", catalog_key, "catalog key of a p-family")->required();
    cat_scan->add_option("--p", scan_values, "p values to scan (repeatable)");

    auto* verify = app.add_subcommand("verify-paper",
                                      "recompute every published table value and compare");
    verify->add_option("--out", verify_out, "report base name (writes .txt and .csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParseFailure;
    }

    if (p_opt->count() > 0) p_value = p_raw;

    if (*validate) return cmd_validate(path);
    if (*info) return cmd_info(path);
    if (*multiplier) return cmd_multiplier(path, representatives);
    if (*invariants) return cmd_invariants(path);
    if (*capability) return cmd_capability(path, candidates);
    if (*classify) return cmd_classify(path);
    if (*cat_list) return cmd_catalog_list();
    if (*cat_emit) return cmd_catalog_emit(catalog_key, p_value, m_dim, n_dim, out_path);
    if (*cat_scan) return cmd_catalog_scan(catalog_key, scan_values);
    if (*verify) return cmd_verify_paper(verify_out);

    return kParseFailure;
}
