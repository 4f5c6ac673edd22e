#ifndef UDBOUND_REPORT_HPP
#define UDBOUND_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "udbound/isogeny.hpp"
#include "udbound/search.hpp"
#include "udbound/weyl.hpp"

namespace udbound {

// Parsed form of the CLI group grammar:
//   spec    := simple (":" lattice)? | simple "^" m "/mu" k
//   simple  := type ("+" type)*          e.g. "E8", "C3", "A2+A2"
//   lattice := "sc" (default) | "adjoint" | "hs" | "pgo"
struct ParsedGroup {
    std::vector<SimpleType> types;
    Lattice lattice = Lattice::SimplyConnected;
    bool is_product = false;
    int m = 1;
    int mu = 1;
    std::string text;  // canonical echo of the input
};

ParsedGroup parse_group_text(std::string_view text);

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

// One command outcome: machine document, human rendering, and the
// process exit code (0 verified, 1 verification failure, 2 usage/parse,
// 3 resource cap).
struct ResultDocument {
    nlohmann::json doc;
    std::string human;
    int exit_code = 0;
};

ResultDocument cmd_bound(std::string_view spec_text, bool allow_ctype = true,
                         std::size_t group_cap = kDefaultGroupCap);
ResultDocument cmd_verify(std::string_view spec_text, std::string_view monomial_text,
                          std::string_view word_csv);
ResultDocument cmd_brute(std::string_view spec_text, int max_degree = -1,
                         std::size_t group_cap = kDefaultGroupCap);
ResultDocument cmd_schubert(std::string_view spec_text, std::string_view poly_text,
                            std::size_t group_cap = kDefaultGroupCap);

// Reproduces the ud lower-bound table (1-chains only, plus the combined
// F4 row) and the simply-connected cd table for ranks up to `max_rank`.
std::string render_tables(int max_rank);
nlohmann::json tables_to_json(int max_rank);

// Row values backing the tables; exposed for the test suites.
struct TableRow {
    std::string type;
    int ud_chain = 0;        // 1-chains only
    int ud_best = 0;         // refined by C-type steps (F4) and towers (C_n)
    long long positive_roots = 0;
    long long cd_sc = 0;     // positive_roots - ud_best
    std::string monomial;    // chain certificate display
};
TableRow table_row(const SimpleType& type);

}  // namespace udbound

#endif
