// Command-line front end: invariants, enumeration, case tables, tangent
// dimensions and the reference-table audit for pretzel knots and links.
//
// Exit codes: 0 success, 2 argument error, 3 ambiguous rank decision or
// internal inconsistency.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knotrep/closure.hpp"
#include "knotrep/errors.hpp"
#include "knotrep/report.hpp"

namespace {

using namespace knotrep;

PretzelKnot parse_knot(std::string arg) {
    if (arg.rfind("p=", 0) == 0)
        arg = arg.substr(2);
    std::vector<std::int64_t> p;
    std::size_t pos = 0;
    while (pos <= arg.size()) {
        const std::size_t comma = arg.find(',', pos);
        const std::string tok = arg.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos);
        if (tok.empty())
            throw ZeroParameter("empty pretzel parameter");
        std::size_t used = 0;
        const std::int64_t v = std::stoll(tok, &used);
        if (used != tok.size())
            throw ZeroParameter("malformed pretzel parameter '" + tok + "'");
        p.push_back(v);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return PretzelKnot(p);
}

void print_invariants(const PretzelKnot& k, const std::string& format) {
    if (format == "json") {
        std::cout << invariants_json(k).dump(2) << "\n";
        return;
    }
    const KnotDeterminant d = determinant(k);
    std::cout << "knot " << k.str() << "\n";
    std::cout << "determinant " << d.absolute << " (signed " << d.signed_value << ")\n";
    std::cout << "components " << component_count(k) << "\n";
    if (is_knot(k))
        std::cout << "klassen_bd_count " << klassen_bd_count(k) << "\n";
    if (has_seifert_form(k)) {
        std::cout << "signature " << signature(k) << "\n";
        std::cout << "lin_invariant " << lin_invariant(k) << "\n";
    }
    if (k.strands() == 3)
        std::cout << "bridge_number " << to_string(bridge_number_estimate(k)) << "\n";
    if (two_bridge_pathology(k))
        std::cout << "note: some |p_i| = 1, bridge number at most 2\n";
}

void print_enumerate(const PretzelKnot& k, const std::string& format, bool solve, int attempts,
                     std::uint64_t seed) {
    RepSpaceReport report = enumerate_all(k);
    if (format == "csv") {
        std::cout << classes_csv(report);
        return;
    }
    json j = to_json(report);
    if (solve && k.strands() >= 4) {
        // Numeric exploration of the central cases; no completeness claim.
        json families = json::array();
        for (CentralCase c : {CentralCase::PlusOne, CentralCase::MinusOne}) {
            std::vector<std::vector<RationalAngle>> lists;
            for (std::int64_t p : k.p())
                lists.push_back(solve_edge_congruence(p, c));
            std::vector<RationalAngle> tuple(k.strands());
            auto rec = [&](auto&& self, std::size_t i) -> void {
                if (i == k.strands()) {
                    bool all_central = true;
                    for (const RationalAngle& a : tuple)
                        if (!a.is_zero_or_pi())
                            all_central = false;
                    if (all_central)
                        return;
                    const auto sols = solve_closure_numeric(tuple, attempts, seed);
                    json fam;
                    fam["case"] = c == CentralCase::PlusOne ? "+1" : "-1";
                    fam["tuple"] = to_json(tuple);
                    fam["solutions_found"] = sols.size();
                    json dims = json::array();
                    for (const auto& pts : sols) {
                        try {
                            dims.push_back(family_dimension_estimate(pts, tuple));
                        } catch (const DegenerateConfiguration&) {
                            dims.push_back(nullptr);
                        } catch (const NumericalInconsistency&) {
                            dims.push_back(nullptr);
                        }
                    }
                    fam["family_dimensions"] = dims;
                    families.push_back(fam);
                    return;
                }
                for (const RationalAngle& a : lists[i]) {
                    tuple[i] = a;
                    self(self, i + 1);
                }
            };
            rec(rec, 0);
        }
        j["numeric_families"] = families;
    }
    if (format == "markdown") {
        std::cout << "# " << k.str() << "\n\n";
        std::cout << "abelian classes: " << report.counts.abelian << "\n";
        std::cout << "binary dihedral classes: " << report.counts.binary_dihedral << "\n";
        std::cout << "non binary dihedral classes: " << report.counts.non_binary_dihedral
                  << "\n\n";
        std::cout << classes_csv(report);
        return;
    }
    std::cout << j.dump(2) << "\n";
}

void print_table(const PretzelKnot& k, CentralCase c, const std::string& format) {
    const std::vector<CaseTableRow> rows = case_table(k, c);
    if (format == "json") {
        json arr = json::array();
        for (const CaseTableRow& r : rows)
            arr.push_back(to_json(r));
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << table_csv(rows);
    } else {
        std::cout << table_markdown(rows);
    }
}

void print_tangent(const PretzelKnot& k, const std::string& format) {
    const RepSpaceReport report = enumerate_all(k);
    const std::vector<TangentRow> rows = tangent_rows(report);
    if (format == "json")
        std::cout << to_json(rows).dump(2) << "\n";
    else if (format == "csv")
        std::cout << tangent_csv(rows);
    else
        std::cout << tangent_markdown(rows);
}

void print_report(const PretzelKnot& k, int attempts, std::uint64_t seed) {
    const RepSpaceReport report = enumerate_all(k);
    json j = to_json(report);
    j["tangent"] = to_json(tangent_rows(report));
    if (k.strands() == 3 && std::abs(k.p()[0]) == 3 && std::abs(k.p()[1]) == 5 &&
        std::abs(k.p()[2]) == 7) {
        json arr = json::array();
        for (const AuditRow& a : audit_rows(k, attempts, seed))
            arr.push_back(to_json(a));
        j["audit"] = arr;
    }
    std::cout << j.dump(2) << "\n";
}

void print_audit(const PretzelKnot& k, int attempts, std::uint64_t seed,
                 const std::string& format) {
    const std::vector<AuditRow> rows = audit_rows(k, attempts, seed);
    if (format == "json") {
        json arr = json::array();
        for (const AuditRow& a : rows)
            arr.push_back(to_json(a));
        std::cout << arr.dump(2) << "\n";
        return;
    }
    std::size_t planar_disagreements = 0, gram_solver_disagreements = 0;
    for (const AuditRow& a : rows) {
        const CaseTableRow& r = a.computed;
        std::cout << (a.central_case == CentralCase::PlusOne ? "+1" : "-1") << " ("
                  << r.a12.str() << "," << r.a23.str() << "," << r.a31.str() << ")"
                  << " paper=" << (a.paper_verdict ? "yes" : "no")
                  << " planar=" << (r.planar ? "yes" : "no") << " gram=" << to_string(r.gram)
                  << " gram_det=" << fmt_double(r.gram_det)
                  << " solver=" << (a.solver_found ? "found" : "none");
        if (!a.planar_matches_paper || !a.gram_matches_paper)
            std::cout << "  <-- disagrees with printed verdict";
        std::cout << "\n";
        if (!a.planar_matches_paper)
            ++planar_disagreements;
        if (!a.gram_matches_solver)
            ++gram_solver_disagreements;
    }
    std::cout << "planar/printed disagreements: " << planar_disagreements << "\n";
    std::cout << "gram/solver disagreements: " << gram_solver_disagreements << "\n";
    const RepSpaceReport rep = enumerate_all(k);
    std::cout << "non binary dihedral classes: reference "
              << golden::p357_reference_non_bd_classes << ", computed "
              << rep.counts.non_binary_dihedral << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SU(2) traceless-meridian representation spaces of pretzel knots"};
    app.require_subcommand(1);

    std::string knot_arg, format = "markdown", case_arg = "+1";
    std::uint64_t seed = 0;
    int attempts = 1000;
    bool solve = false;

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("knot", knot_arg,
                        "comma-separated nonzero strand parameters, e.g. 3,5,7 or p=-3,5,7")
            ->required();
        if (with_format)
            sub->add_option("--format", format, "json, csv or markdown");
        sub->add_option("--seed", seed, "random seed for the numeric solver");
        sub->add_option("--attempts", attempts, "restart budget of the numeric solver");
    };

    CLI::App* inv = app.add_subcommand("invariants", "classical invariants");
    add_common(inv);
    CLI::App* enu = app.add_subcommand("enumerate", "representation classes up to conjugacy");
    add_common(enu);
    enu->add_flag("--solve", solve, "numeric closure exploration for four or more strands");
    CLI::App* tab = app.add_subcommand("table", "candidate angle table of a central case");
    add_common(tab);
    tab->add_option("--case", case_arg, "+1 or -1");
    CLI::App* tan = app.add_subcommand("tangent", "tangent space dimensions per class");
    add_common(tan);
    CLI::App* rep = app.add_subcommand("report", "full JSON report");
    add_common(rep, false);
    CLI::App* aud = app.add_subcommand("audit", "compare against the bundled reference tables");
    add_common(aud);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const PretzelKnot k = parse_knot(knot_arg);
        if (inv->parsed())
            print_invariants(k, format);
        else if (enu->parsed())
            print_enumerate(k, format == "markdown" && enu->count("--format") == 0 ? "json" : format,
                            solve, attempts, seed);
        else if (tab->parsed()) {
            if (case_arg != "+1" && case_arg != "-1") {
                std::cerr << "error: --case must be +1 or -1\n";
                return 2;
            }
            print_table(k, case_arg == "+1" ? CentralCase::PlusOne : CentralCase::MinusOne,
                        format);
        } else if (tan->parsed())
            print_tangent(k, format);
        else if (rep->parsed())
            print_report(k, attempts, seed);
        else if (aud->parsed())
            print_audit(k, attempts, seed, format == "markdown" ? "text" : format);
        return 0;
    } catch (const RankAmbiguous& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NumericalInconsistency& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
