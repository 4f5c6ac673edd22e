#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "udbound/errors.hpp"
#include "udbound/report.hpp"

namespace {

std::size_t group_cap_from_env() {
    const char* env = std::getenv("UDBOUND_GROUP_CAP");
    if (!env) return udbound::kDefaultGroupCap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return udbound::kDefaultGroupCap;
    return static_cast<std::size_t>(v);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unimodular-degree certificates and canonical-dimension bounds"};
    app.require_subcommand(1);

    std::string spec, monomial, word, poly;
    bool json_out = false;
    bool no_ctype = false;
    int max_rank = 8;
    int max_degree = -1;

    auto* bound =
        app.add_subcommand("bound", "ud lower bound and cd upper bound for a group spec");
    bound->add_option("spec", spec, "e.g. E8, F4, E6:adjoint, D8:hs, D6:pgo, E6^2/mu3")
        ->required();
    bound->add_flag("--json", json_out, "emit JSON");
    bound->add_flag("--no-ctype", no_ctype, "restrict the search to plain 1-chains");

    auto* table = app.add_subcommand("table", "reproduce the ud and cd(G^sc) tables");
    table->add_option("--max-rank", max_rank, "largest classical rank (default 8)")
        ->check(CLI::Range(2, 12));
    table->add_flag("--json", json_out, "emit JSON");

    auto* verify = app.add_subcommand("verify", "check partial_w(p) = 1 and print the trace");
    verify->add_option("spec", spec, "diagram, e.g. C3")->required();
    verify->add_option("--monomial", monomial, "monic monomial, e.g. x1^5*x2^3*x3")->required();
    verify->add_option("--word", word, "comma-separated word, e.g. 1,2,3,2,1,2,3,2,3")->required();
    verify->add_flag("--json", json_out, "emit JSON");

    auto* brute = app.add_subcommand("brute", "exact ud by exhaustive search (small ranks)");
    brute->add_option("spec", spec, "diagram, e.g. C3")->required();
    brute->add_option("--max-degree", max_degree, "degree cap (default: positive-root count)");
    brute->add_flag("--json", json_out, "emit JSON");

    auto* schubert = app.add_subcommand("schubert", "Schubert-basis expansion of c(p)");
    schubert->add_option("spec", spec, "diagram, e.g. C3")->required();
    schubert->add_option("--poly", poly, "homogeneous polynomial in x1..xn")->required();
    schubert->add_flag("--json", json_out, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    const std::size_t cap = group_cap_from_env();
    try {
        if (table->parsed()) {
            if (json_out)
                std::cout << udbound::tables_to_json(max_rank).dump(2) << "\n";
            else
                std::cout << udbound::render_tables(max_rank);
            return 0;
        }
        udbound::ResultDocument doc;
        if (bound->parsed())
            doc = udbound::cmd_bound(spec, !no_ctype, cap);
        else if (verify->parsed())
            doc = udbound::cmd_verify(spec, monomial, word);
        else if (brute->parsed())
            doc = udbound::cmd_brute(spec, max_degree, cap);
        else
            doc = udbound::cmd_schubert(spec, poly, cap);
        if (json_out)
            std::cout << doc.doc.dump(2) << "\n";
        else
            std::cout << doc.human;
        return doc.exit_code;
    } catch (const udbound::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const udbound::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const udbound::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
