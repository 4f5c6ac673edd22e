#include "udbound/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "udbound/errors.hpp"
#include "udbound/weyl.hpp"

namespace udbound {

using nlohmann::json;

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

int parse_int_at(std::string_view text, std::size_t& pos, const char* what) {
    std::size_t start = pos;
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > 1000000) throw ParseError(std::string(what) + " out of range", start);
        ++pos;
    }
    if (pos == start) throw ParseError(std::string("expected ") + what, pos);
    return static_cast<int>(v);
}

}  // namespace

ParsedGroup parse_group_text(std::string_view text) {
    ParsedGroup out;
    out.text = std::string(text);

    std::size_t caret = text.find('^');
    std::size_t colon = text.find(':');
    if (caret != std::string_view::npos && colon != std::string_view::npos)
        throw ParseError("a product quotient takes no lattice suffix", colon);

    std::string_view simple = text.substr(0, std::min(caret, colon));
    if (simple.empty()) throw ParseError("expected a group type", 0);
    {
        std::size_t start = 0;
        while (start <= simple.size()) {
            std::size_t plus = simple.find('+', start);
            std::string_view chunk = plus == std::string_view::npos
                                         ? simple.substr(start)
                                         : simple.substr(start, plus - start);
            try {
                out.types.push_back(SimpleType::parse(chunk));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), start + e.position);
            }
            if (plus == std::string_view::npos) break;
            start = plus + 1;
        }
    }

    if (caret != std::string_view::npos) {
        if (out.types.size() != 1)
            throw ParseError("product quotients take a single simple type", caret);
        out.is_product = true;
        std::size_t pos = caret + 1;
        out.m = parse_int_at(text, pos, "copy count");
        if (out.m < 1) throw ParseError("copy count must be >= 1", caret + 1);
        if (text.substr(pos, 3) != "/mu") throw ParseError("expected '/mu<k>'", pos);
        pos += 3;
        std::size_t mu_at = pos;
        out.mu = parse_int_at(text, pos, "center order");
        if (pos != text.size()) throw ParseError("trailing input after product spec", pos);

        RootSystem rs = build(out.types);
        CenterData cd = center(rs);
        if (cd.factor_orders.size() != 1 || cd.factor_orders[0] != out.mu)
            throw ParseError("mu" + std::to_string(out.mu) + " is not the full cyclic center of " +
                                 out.types[0].to_string() +
                                 (cd.factor_orders.size() > 1 ? " (center is not cyclic)" : ""),
                             mu_at);
        return out;
    }

    if (colon != std::string_view::npos) {
        std::string lat = lower(text.substr(colon + 1));
        if (lat == "sc") {
            out.lattice = Lattice::SimplyConnected;
        } else if (lat == "adjoint") {
            out.lattice = Lattice::Adjoint;
        } else if (lat == "hs") {
            if (out.types.size() != 1 || out.types[0].family != Family::D ||
                out.types[0].rank % 2 != 0)
                throw ParseError("half-spin requires a single D type of even rank", colon + 1);
            out.lattice = Lattice::HalfSpin;
        } else if (lat == "pgo") {
            if (out.types.size() != 1 || out.types[0].family != Family::D)
                throw ParseError("pgo requires a single D type", colon + 1);
            out.lattice = Lattice::Adjoint;
        } else {
            throw ParseError("unknown lattice '" + lat + "' (expected sc, adjoint, hs or pgo)",
                             colon + 1);
        }
    }
    return out;
}

json certificate_to_json(const Certificate& cert) {
    json j;
    j["nvars"] = cert.nvars;
    j["degree"] = cert.degree;
    json mono = json::array();
    for (std::size_t k = 0; k < cert.monomial.exps.size(); ++k)
        if (cert.monomial.exps[k] > 0)
            mono.push_back({k + 1, cert.monomial.exps[k]});
    j["monomial"] = mono;
    j["word"] = cert.word;
    json steps = json::array();
    for (const auto& s : cert.steps) {
        steps.push_back({{"kind", s.kind == StepKind::OneChain ? "one_chain" : "c_type"},
                         {"path", s.path},
                         {"target", s.target},
                         {"exponent", s.exponent},
                         {"word", s.word}});
    }
    j["steps"] = steps;
    return j;
}

Certificate certificate_from_json(const json& j) {
    Certificate cert;
    cert.nvars = j.at("nvars").get<int>();
    cert.degree = j.at("degree").get<int>();
    cert.monomial = Monomial::one(cert.nvars);
    for (const auto& pair : j.at("monomial")) {
        int v = pair.at(0).get<int>();
        int e = pair.at(1).get<int>();
        if (v < 1 || v > cert.nvars) throw Error("certificate JSON: variable out of range");
        cert.monomial.exps[v - 1] = static_cast<std::uint16_t>(e);
    }
    cert.word = j.at("word").get<std::vector<int>>();
    for (const auto& js : j.at("steps")) {
        Step s;
        s.kind = js.at("kind").get<std::string>() == "one_chain" ? StepKind::OneChain
                                                                 : StepKind::CType;
        s.path = js.at("path").get<std::vector<int>>();
        s.target = js.at("target").get<int>();
        s.exponent = js.at("exponent").get<int>();
        s.word = js.at("word").get<std::vector<int>>();
        cert.steps.push_back(std::move(s));
    }
    return cert;
}

namespace {

std::string monomial_text(const Monomial& m) {
    return Polynomial::from_monomial(m).format();
}

std::string word_text(const std::vector<int>& word) {
    std::string out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(word[k]);
    }
    return out;
}

json substitution_to_json(const Substitution& subst) {
    json j;
    j["removed"] = subst.removed;
    json z = json::array();
    for (const auto& [i, a] : subst.coeffs) {
        json plus = json::array();
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != 0) plus.push_back({subst.removed[k], a[k]});
        if (!plus.empty()) z.push_back({{"variable", i}, {"plus", plus}});
    }
    j["z"] = z;
    return j;
}

std::string substitution_text(const Substitution& subst) {
    std::string out;
    for (const auto& [i, a] : subst.coeffs) {
        std::string extra;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != 0) {
                extra += " + ";
                if (a[k] != 1) extra += std::to_string(a[k]) + "*";
                extra += "x" + std::to_string(subst.removed[k]);
            }
        if (extra.empty()) continue;
        if (!out.empty()) out += ", ";
        out += "z" + std::to_string(i) + " = x" + std::to_string(i) + extra;
    }
    return out.empty() ? "(identity)" : out;
}

std::string z_monomial_text(const Certificate& cert, const Substitution& subst) {
    std::string out;
    for (std::size_t k = 0; k < cert.monomial.exps.size(); ++k) {
        if (cert.monomial.exps[k] == 0) continue;
        if (!out.empty()) out += "*";
        bool substituted = false;
        auto it = subst.coeffs.find(static_cast<int>(k) + 1);
        if (it != subst.coeffs.end())
            for (int v : it->second) substituted = substituted || v != 0;
        out += (substituted ? "z" : "x") + std::to_string(k + 1);
        if (cert.monomial.exps[k] > 1) out += "^" + std::to_string(cert.monomial.exps[k]);
    }
    return out.empty() ? "1" : out;
}

std::vector<std::string> annotations_for(const ParsedGroup& parsed) {
    std::vector<std::string> notes;
    if (!parsed.is_product && parsed.lattice == Lattice::SimplyConnected) {
        bool all_ac = true;
        for (const auto& t : parsed.types)
            all_ac = all_ac && (t.family == Family::A || t.family == Family::C);
        if (all_ac)
            notes.push_back("known exact value: cd(G^sc) = 0 for types A and C"
                            " (torsion index 1)");
    }
    return notes;
}

}  // namespace

ResultDocument cmd_bound(std::string_view spec_text, bool allow_ctype, std::size_t group_cap) {
    (void)group_cap;
    ParsedGroup parsed = parse_group_text(spec_text);
    ResultDocument out;
    std::ostringstream human;

    if (parsed.is_product) {
        ProductQuotientResult pq = product_quotient_bound(parsed.types[0], parsed.m);
        {
            // verified is re-computed at output time, never copied
            RootSystem rs = build(std::vector<SimpleType>{parsed.types[0]});
            OperatorContext ctx = OperatorContext::make(rs.cartan);
            pq.verified = verify_certificate(ctx, pq.full_certificate).valid &&
                          verify_z_certificate(ctx, pq.substitution, pq.sub_certificate);
        }
        out.doc["group"] = parsed.text;
        out.doc["dim_flag"] = pq.dim;
        out.doc["ud_lower_bound"] = pq.ud_full;
        out.doc["ud_sub"] = pq.ud_sub;
        out.doc["removed_vertices"] = pq.removed;
        out.doc["subdiagram"] = pq.sub_name;
        out.doc["cd_upper_bound"] = pq.bound;
        out.doc["certificate"] = certificate_to_json(pq.full_certificate);
        out.doc["sub_certificate"] = certificate_to_json(pq.sub_certificate);
        out.doc["substitution"] = substitution_to_json(pq.substitution);
        out.doc["verified"] = pq.verified;
        out.doc["annotations"] = json::array();
        human << parsed.text << ": cd <= " << pq.bound << "   [m|S+| = " << pq.dim << ", ud("
              << parsed.types[0].to_string() << ") >= " << pq.ud_full << ", ud("
              << (pq.sub_name.empty() ? "empty" : pq.sub_name) << ") >= " << pq.ud_sub
              << ", removed {" << word_text(pq.removed) << "}]\n"
              << "  verified: " << (pq.verified ? "yes" : "NO") << "\n";
        out.human = human.str();
        out.exit_code = pq.verified ? 0 : 1;
        return out;
    }

    GroupSpec spec;
    spec.rs = build(parsed.types);
    spec.lattice = parsed.lattice;
    spec.chain.allow_ctype = allow_ctype;
    CdBoundResult cd = cd_upper_bound(spec);

    // verified is re-computed at output time, never copied
    {
        OperatorContext ctx = OperatorContext::make(spec.rs.cartan);
        cd.verified = cd.removed.empty()
                          ? verify_certificate(ctx, cd.certificate).valid
                          : verify_z_certificate(ctx, cd.substitution, cd.certificate);
    }

    out.doc["group"] = parsed.text;
    out.doc["dim_flag"] = cd.dim;
    out.doc["ud_lower_bound"] = cd.ud_degree;
    out.doc["cd_upper_bound"] = cd.bound;
    out.doc["removed_vertices"] = cd.removed;
    out.doc["subdiagram"] = cd.sub_name;
    out.doc["certificate"] = certificate_to_json(cd.certificate);
    // plain certificate in the subdiagram's own numbering; re-feeds to
    // `verify <subdiagram>` directly
    if (!cd.removed.empty()) out.doc["certificate_local"] = certificate_to_json(cd.certificate_local);
    out.doc["substitution"] = substitution_to_json(cd.substitution);
    out.doc["verified"] = cd.verified;
    json alts = json::array();
    for (const auto& [removal, degree] : cd.alternatives)
        alts.push_back({{"removed", removal}, {"ud", degree}});
    out.doc["alternatives"] = alts;
    auto notes = annotations_for(parsed);
    out.doc["annotations"] = notes;

    human << cd.group << ": cd <= " << cd.bound << "   [|S+| = " << cd.dim
          << ", ud >= " << cd.ud_degree;
    if (!cd.removed.empty())
        human << " on " << cd.sub_name << " after removing {" << word_text(cd.removed) << "}";
    human << "]\n";
    human << "  certificate: p = " << monomial_text(cd.certificate.monomial) << ", word = ("
          << word_text(cd.certificate.word) << ")\n";
    if (!cd.removed.empty()) {
        human << "  substitution: " << substitution_text(cd.substitution) << "\n";
        human << "  z-monomial: " << z_monomial_text(cd.certificate, cd.substitution) << "\n";
    }
    human << "  verified: " << (cd.verified ? "yes" : "NO") << "\n";
    for (const auto& n : notes) human << "  note: " << n << "\n";
    out.human = human.str();
    out.exit_code = cd.verified ? 0 : 1;
    return out;
}

ResultDocument cmd_verify(std::string_view spec_text, std::string_view monomial_text_in,
                          std::string_view word_csv) {
    ParsedGroup parsed = parse_group_text(spec_text);
    if (parsed.is_product) throw ParseError("verify expects a plain diagram spec", 0);
    RootSystem rs = build(parsed.types);
    OperatorContext ctx = OperatorContext::make(rs.cartan);

    Polynomial p = Polynomial::parse(monomial_text_in, rs.diagram.rank);
    if (!p.is_monic_monomial())
        throw ParseError("expected a monic monomial", 0);
    Monomial mono = p.terms().begin()->first;

    std::vector<int> word;
    {
        std::size_t pos = 0;
        std::string_view text = word_csv;
        while (pos < text.size()) {
            while (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) ++pos;
            if (pos >= text.size()) break;
            int v = parse_int_at(text, pos, "word letter");
            if (v < 1 || v > rs.diagram.rank)
                throw ParseError("word letter out of range", pos);
            word.push_back(v);
        }
    }

    ResultDocument out;
    std::ostringstream human;
    out.doc["group"] = parsed.text;
    out.doc["monomial"] = monomial_text(mono);
    out.doc["word"] = word;

    bool valid = false;
    if (mono.degree() != static_cast<int>(word.size())) {
        human << "not verified: monomial degree " << mono.degree() << " != word length "
              << word.size() << "\n";
        out.doc["reason"] = "degree/word-length mismatch";
    } else {
        Polynomial cur = Polynomial::from_monomial(mono);
        human << "p = " << cur.format() << "\n";
        for (std::size_t k = word.size(); k-- > 0;) {
            cur = ddiff(ctx, word[k], cur);
            std::string line = cur.format();
            if (line.size() > 120)
                line = line.substr(0, 117) + "... (" + std::to_string(cur.term_count()) + " terms)";
            human << "  d_" << word[k] << " -> " << line << "\n";
        }
        valid = cur.is_one();
        human << (valid ? "verified: partial_w(p) = 1" : "not verified: result != 1") << "\n";
    }
    out.doc["verified"] = valid;
    out.human = human.str();
    out.exit_code = valid ? 0 : 1;
    return out;
}

ResultDocument cmd_brute(std::string_view spec_text, int max_degree, std::size_t group_cap) {
    ParsedGroup parsed = parse_group_text(spec_text);
    if (parsed.is_product) throw ParseError("brute expects a plain diagram spec", 0);
    RootSystem rs = build(parsed.types);
    OperatorContext ctx = OperatorContext::make(rs.cartan);

    BruteLimits limits;
    limits.max_degree = max_degree;
    limits.group_cap = group_cap;
    BruteResult res = brute_force_ud(ctx, rs, limits);
    UdBound chain = ud_lower_bound(ctx, rs);

    ResultDocument out;
    out.doc["group"] = parsed.text;
    out.doc["ud_exact"] = res.ud;
    out.doc["chain_method_bound"] = chain.degree;
    out.doc["chain_method_is_sharp"] = chain.degree == res.ud;
    out.doc["certificate"] = certificate_to_json(res.witness);
    bool verified = verify_certificate(ctx, res.witness).valid;
    out.doc["verified"] = verified;

    std::ostringstream human;
    human << parsed.text << ": ud = " << res.ud << " (exact, brute force)\n"
          << "  witness: p = " << monomial_text(res.witness.monomial) << ", word = ("
          << word_text(res.witness.word) << ")\n"
          << "  chain-method bound: " << chain.degree
          << (chain.degree == res.ud ? " (sharp)" : " (not sharp)") << "\n";
    out.human = human.str();
    out.exit_code = verified ? 0 : 1;
    return out;
}

ResultDocument cmd_schubert(std::string_view spec_text, std::string_view poly_text,
                            std::size_t group_cap) {
    ParsedGroup parsed = parse_group_text(spec_text);
    if (parsed.is_product) throw ParseError("schubert expects a plain diagram spec", 0);
    RootSystem rs = build(parsed.types);
    OperatorContext ctx = OperatorContext::make(rs.cartan);

    Polynomial p = Polynomial::parse(poly_text, rs.diagram.rank);
    auto degree = p.homogeneous_degree();
    if (!degree) throw Error("schubert expansion requires a homogeneous polynomial");

    std::vector<WeylElement> elements = elements_of_length(ctx, *degree, group_cap);
    auto coeffs = schubert_expand(ctx, p, elements);

    ResultDocument out;
    out.doc["group"] = parsed.text;
    out.doc["polynomial"] = p.format();
    out.doc["degree"] = *degree;
    out.doc["elements_of_length"] = elements.size();
    json rows = json::array();
    std::ostringstream human;
    human << parsed.text << ": c(" << p.format() << ") in degree " << *degree << " ("
          << elements.size() << " Weyl elements of that length)\n";
    for (const auto& [idx, c] : coeffs) {
        rows.push_back({{"word", elements[idx].word}, {"coefficient", c.to_decimal()}});
        human << "  [V^w], w = s(" << word_text(elements[idx].word) << "): " << c.to_decimal()
              << "\n";
    }
    out.doc["coefficients"] = rows;
    if (coeffs.empty()) human << "  (zero slice)\n";
    out.human = human.str();
    out.exit_code = 0;
    return out;
}

TableRow table_row(const SimpleType& type) {
    RootSystem rs = build(std::vector<SimpleType>{type});
    OperatorContext ctx = OperatorContext::make(rs.cartan);

    ChainOptions chains_only;
    chains_only.allow_ctype = false;
    Certificate chain = chain_method_bound(ctx, rs, chains_only);

    TableRow row;
    row.type = type.to_string();
    row.ud_chain = chain.degree;
    row.positive_roots = positive_root_count(rs.diagram);
    row.monomial = monomial_text(chain.monomial);

    // the two documented refinements: C-type steps for F4, towers for C_n
    row.ud_best = chain.degree;
    if (type.family == Family::F) {
        row.ud_best = chain_method_bound(ctx, rs, ChainOptions{}).degree;
    } else if (type.family == Family::C) {
        TowerReport tower = c_tower_check(ctx, rs);
        if (tower.holds) row.ud_best = tower.certificate->degree;
    }
    row.cd_sc = row.positive_roots - row.ud_best;
    return row;
}

namespace {

std::vector<SimpleType> table_types(int max_rank) {
    std::vector<SimpleType> types;
    for (int n = 1; n <= max_rank; ++n) types.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) types.push_back({Family::B, n});
    for (int n = 2; n <= max_rank; ++n) types.push_back({Family::C, n});
    for (int n = 4; n <= max_rank; ++n) types.push_back({Family::D, n});
    for (int n = 6; n <= std::min(max_rank, 8); ++n) types.push_back({Family::E, n});
    if (max_rank >= 4) types.push_back({Family::F, 4});
    if (max_rank >= 2) types.push_back({Family::G, 2});
    return types;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string render_tables(int max_rank) {
    std::ostringstream out;
    out << "ud lower bounds (1-chain method)\n";
    out << pad("type", 6) << pad("ud>=", 6) << pad("|S+|", 6) << "p\n";
    std::vector<TableRow> rows;
    for (const auto& t : table_types(max_rank)) rows.push_back(table_row(t));
    for (const auto& r : rows)
        out << pad(r.type, 6) << pad(std::to_string(r.ud_chain), 6)
            << pad(std::to_string(r.positive_roots), 6) << r.monomial << "\n";
    {
        // the combined F4 certificate (C-type step across the double bond)
        RootSystem rs = build("F4");
        OperatorContext ctx = OperatorContext::make(rs.cartan);
        Certificate cert = chain_method_bound(ctx, rs, ChainOptions{});
        out << pad("F4*", 6) << pad(std::to_string(cert.degree), 6) << pad("24", 6)
            << monomial_text(cert.monomial) << "   (C-type steps enabled)\n";
    }
    out << "\ncd upper bounds, simply connected\n";
    out << pad("type", 6) << pad("cd<=", 6) << "notes\n";
    for (const auto& r : rows) {
        std::string note;
        if (r.type[0] == 'A') note = "exact: torsion index 1";
        if (r.type[0] == 'C')
            note = r.cd_sc == 0 ? "exact: torsion index 1; C-type tower certificate"
                                : "C-type tower incomplete";
        if (r.type[0] == 'F') note = "uses the combined ud(F4) >= 11";
        out << pad(r.type, 6) << pad(std::to_string(r.cd_sc), 6) << note << "\n";
    }
    return out.str();
}

json tables_to_json(int max_rank) {
    json rows = json::array();
    for (const auto& t : table_types(max_rank)) {
        TableRow r = table_row(t);
        rows.push_back({{"type", r.type},
                        {"ud_chain", r.ud_chain},
                        {"ud_best", r.ud_best},
                        {"positive_roots", r.positive_roots},
                        {"cd_sc", r.cd_sc},
                        {"monomial", r.monomial}});
    }
    return rows;
}

}  // namespace udbound
