#pragma once

/**
 * @file report.hpp
 * @brief JSON / CSV / markdown serialization of reports. The JSON schema and
 *        CSV column order are documented in docs/formats.md; JSON output
 *        round-trips through report_from_json.
 */

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "knotrep/presentation.hpp"
#include "knotrep/pretzel.hpp"
#include "knotrep/rep_class.hpp"
#include "knotrep/rep_enum.hpp"
#include "knotrep/table.hpp"
#include "knotrep/tangent.hpp"

namespace knotrep {

using nlohmann::json;

inline std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

inline RationalAngle angle_from_str(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        return RationalAngle::exact_pi_multiple(std::stoll(s), 1);
    return RationalAngle::exact_pi_multiple(std::stoll(s.substr(0, slash)),
                                            std::stoll(s.substr(slash + 1)));
}

inline json to_json(const RationalAngle& a) { return a.str(); }

inline json to_json(const std::vector<RationalAngle>& as) {
    json arr = json::array();
    for (const RationalAngle& a : as)
        arr.push_back(a.str());
    return arr;
}

inline std::vector<RationalAngle> angles_from_json(const json& arr) {
    std::vector<RationalAngle> out;
    for (const auto& v : arr)
        out.push_back(angle_from_str(v.get<std::string>()));
    return out;
}

inline json to_json(const ImVector& v) { return json::array({v.x, v.y, v.z}); }

inline json to_json(const RepClass& rc) {
    json j;
    j["id"] = rc.id;
    j["case"] = to_string(rc.tag);
    if (rc.beta)
        j["beta"] = rc.beta->str();
    j["angles"] = to_json(rc.angles);
    if (!rc.chain.empty())
        j["chain"] = to_json(rc.chain);
    json pts = json::array();
    for (const ImVector& p : rc.points)
        pts.push_back(to_json(p));
    j["points"] = pts;
    j["abelian"] = rc.abelian;
    j["binary_dihedral"] = rc.binary_dihedral;
    if (rc.mirror_pair_id)
        j["mirror_pair_id"] = *rc.mirror_pair_id;
    if (rc.mirror_sign != 0)
        j["mirror_sign"] = rc.mirror_sign;
    j["orbit"] = to_string(rc.orbit);
    return j;
}

inline CaseTag case_from_str(const std::string& s) {
    if (s == "+1")
        return CaseTag::PlusOne;
    if (s == "-1")
        return CaseTag::MinusOne;
    if (s == "beta")
        return CaseTag::BinaryDihedral;
    return CaseTag::Abelian;
}

inline RepClass rep_class_from_json(const json& j) {
    RepClass rc;
    rc.id = j.at("id").get<std::string>();
    rc.tag = case_from_str(j.at("case").get<std::string>());
    if (j.contains("beta"))
        rc.beta = angle_from_str(j.at("beta").get<std::string>());
    rc.angles = angles_from_json(j.at("angles"));
    if (j.contains("chain"))
        rc.chain = angles_from_json(j.at("chain"));
    for (const auto& p : j.at("points"))
        rc.points.push_back(ImVector{p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
    rc.abelian = j.at("abelian").get<bool>();
    rc.binary_dihedral = j.at("binary_dihedral").get<bool>();
    if (j.contains("mirror_pair_id"))
        rc.mirror_pair_id = j.at("mirror_pair_id").get<int>();
    if (j.contains("mirror_sign"))
        rc.mirror_sign = j.at("mirror_sign").get<int>();
    rc.orbit = j.at("orbit").get<std::string>() == "S2" ? OrbitType::Sphere
                                                        : OrbitType::ProjectiveSpace;
    return rc;
}

inline json to_json(const Presentation& p) {
    json j;
    j["generators"] = p.generators;
    json rel = json::array();
    for (const Word& w : p.relators)
        rel.push_back(w);
    j["relators"] = rel;
    return j;
}

inline json invariants_json(const PretzelKnot& k) {
    json j;
    j["name"] = k.str();
    j["p"] = k.p();
    const KnotDeterminant d = determinant(k);
    j["determinant"] = {{"signed", d.signed_value}, {"absolute", d.absolute}};
    j["components"] = component_count(k);
    j["is_knot"] = is_knot(k);
    j["two_bridge_pathology"] = two_bridge_pathology(k);
    if (is_knot(k))
        j["klassen_bd_count"] = klassen_bd_count(k);
    if (has_seifert_form(k)) {
        const SeifertMatrix v = seifert_matrix(k);
        j["seifert_matrix_doubled"] = {{v.twice[0][0], v.twice[0][1]},
                                       {v.twice[1][0], v.twice[1][1]}};
        j["signature"] = signature(k);
        j["lin_invariant"] = lin_invariant(k);
    }
    if (k.strands() == 3)
        j["bridge_number"] = to_string(bridge_number_estimate(k));
    return j;
}

inline json to_json(const PaperDiscrepancy& d) {
    json j;
    j["case"] = d.central_case == CentralCase::PlusOne ? "+1" : "-1";
    j["tuple"] = json::array({d.tuple[0].str(), d.tuple[1].str(), d.tuple[2].str()});
    j["paper_verdict"] = d.paper_verdict;
    j["planar_verdict"] = d.planar_verdict;
    j["gram_verdict"] = to_string(d.gram_verdict);
    j["gram_det"] = d.gram_det;
    return j;
}

inline json to_json(const RepSpaceReport& r) {
    json j;
    j["knot"] = invariants_json(r.knot);
    j["counts"] = {{"abelian", r.counts.abelian},
                   {"binary_dihedral", r.counts.binary_dihedral},
                   {"non_binary_dihedral", r.counts.non_binary_dihedral}};
    auto dump = [](const std::vector<RepClass>& cs) {
        json arr = json::array();
        for (const RepClass& rc : cs)
            arr.push_back(to_json(rc));
        return arr;
    };
    j["classes"] = {{"abelian", dump(r.abelian_classes)},
                    {"binary_dihedral", dump(r.binary_dihedral_classes)},
                    {"non_binary_dihedral", dump(r.non_bd_classes)}};
    json disc = json::array();
    for (const PaperDiscrepancy& d : r.paper_discrepancies)
        disc.push_back(to_json(d));
    j["paper_discrepancies"] = disc;
    if (r.knot.strands() == 3 && std::abs(r.knot.p()[0]) == 3 && std::abs(r.knot.p()[1]) == 5 &&
        std::abs(r.knot.p()[2]) == 7)
        j["non_bd_count"] = {{"reference", golden::p357_reference_non_bd_classes},
                             {"computed", r.counts.non_binary_dihedral}};
    j["presentation"] = {{"knot_group", to_json(emit_presentation(r.knot, PresentationKind::KnotGroup))},
                         {"quotient_group",
                          to_json(emit_presentation(r.knot, PresentationKind::QuotientGroup))}};
    return j;
}

inline RepSpaceReport report_from_json(const json& j) {
    std::vector<std::int64_t> p;
    for (const auto& v : j.at("knot").at("p"))
        p.push_back(v.get<std::int64_t>());
    RepSpaceReport r{PretzelKnot(p)};
    r.two_bridge = j.at("knot").at("two_bridge_pathology").get<bool>();
    for (const auto& c : j.at("classes").at("abelian"))
        r.abelian_classes.push_back(rep_class_from_json(c));
    for (const auto& c : j.at("classes").at("binary_dihedral"))
        r.binary_dihedral_classes.push_back(rep_class_from_json(c));
    for (const auto& c : j.at("classes").at("non_binary_dihedral"))
        r.non_bd_classes.push_back(rep_class_from_json(c));
    for (const auto& dj : j.at("paper_discrepancies")) {
        PaperDiscrepancy d;
        d.central_case =
            dj.at("case").get<std::string>() == "+1" ? CentralCase::PlusOne : CentralCase::MinusOne;
        const auto& t = dj.at("tuple");
        d.tuple = {angle_from_str(t[0].get<std::string>()), angle_from_str(t[1].get<std::string>()),
                   angle_from_str(t[2].get<std::string>())};
        d.paper_verdict = dj.at("paper_verdict").get<bool>();
        d.planar_verdict = dj.at("planar_verdict").get<bool>();
        const std::string gv = dj.at("gram_verdict").get<std::string>();
        d.gram_verdict = gv == "non-degenerate" ? Verdict::NonDegenerate
                         : gv == "degenerate"   ? Verdict::Degenerate
                                                : Verdict::Infeasible;
        d.gram_det = dj.at("gram_det").get<double>();
        r.paper_discrepancies.push_back(d);
    }
    r.counts.abelian = r.abelian_classes.size();
    r.counts.binary_dihedral = r.binary_dihedral_classes.size();
    r.counts.non_binary_dihedral = r.non_bd_classes.size();
    return r;
}

// ---------------------------------------------------------------------------
// Case tables and tangent rows in the three output formats

inline json to_json(const CaseTableRow& row) {
    json j;
    j["a12"] = row.a12.str();
    j["a23"] = row.a23.str();
    j["a31"] = row.a31.str();
    j["lo"] = row.lo.str();
    j["hi"] = row.hi.str();
    j["planar"] = row.planar;
    j["gram_verdict"] = to_string(row.gram);
    j["gram_det"] = row.gram_det;
    return j;
}

inline std::string table_csv(const std::vector<CaseTableRow>& rows) {
    std::string s = "a12,a23,a31,lo,hi,delta_inequality,gram_verdict,gram_det\n";
    for (const CaseTableRow& r : rows) {
        s += r.a12.str() + "," + r.a23.str() + "," + r.a31.str() + "," + r.lo.str() + "," +
             r.hi.str() + "," + (r.planar ? "yes" : "no") + "," + to_string(r.gram) + "," +
             fmt_double(r.gram_det) + "\n";
    }
    return s;
}

inline std::string table_markdown(const std::vector<CaseTableRow>& rows) {
    std::string s = "| a12 | a23 | a31 | \\|a23-a31\\| | a23+a31 | Delta-inequality | gram "
                    "verdict | gram det |\n";
    s += "|---|---|---|---|---|---|---|---|\n";
    for (const CaseTableRow& r : rows) {
        s += "| " + r.a12.str() + " | " + r.a23.str() + " | " + r.a31.str() + " | " +
             r.lo.str() + " | " + r.hi.str() + " | " + (r.planar ? "yes" : "no") + " | " +
             to_string(r.gram) + " | " + fmt_double(r.gram_det) + " |\n";
    }
    return s;
}

inline json to_json(const std::vector<TangentRow>& rows) {
    json arr = json::array();
    for (const TangentRow& r : rows) {
        json j;
        j["class"] = r.class_id;
        j["z1_dim"] = r.z1_dim;
        j["b1_dim"] = r.b1_dim;
        j["h1_dim"] = r.h1_dim;
        j["min_nonzero_sv"] = r.min_nonzero_sv;
        arr.push_back(j);
    }
    return arr;
}

inline std::string tangent_csv(const std::vector<TangentRow>& rows) {
    std::string s = "class,z1_dim,b1_dim,h1_dim,min_nonzero_sv\n";
    for (const TangentRow& r : rows)
        s += r.class_id + "," + std::to_string(r.z1_dim) + "," + std::to_string(r.b1_dim) + "," +
             std::to_string(r.h1_dim) + "," + fmt_double(r.min_nonzero_sv) + "\n";
    return s;
}

inline std::string tangent_markdown(const std::vector<TangentRow>& rows) {
    std::string s = "| class | z1 | b1 | h1 | min nonzero sv |\n|---|---|---|---|---|\n";
    for (const TangentRow& r : rows)
        s += "| " + r.class_id + " | " + std::to_string(r.z1_dim) + " | " +
             std::to_string(r.b1_dim) + " | " + std::to_string(r.h1_dim) + " | " +
             fmt_double(r.min_nonzero_sv) + " |\n";
    return s;
}

inline std::string classes_csv(const RepSpaceReport& r) {
    std::string s = "kind,id,case,beta,angles,chain,abelian,binary_dihedral,mirror_pair_id,"
                    "mirror_sign,orbit\n";
    auto emit = [&](const char* kind, const std::vector<RepClass>& cs) {
        for (const RepClass& rc : cs) {
            s += std::string(kind) + "," + rc.id + "," + to_string(rc.tag) + "," +
                 (rc.beta ? rc.beta->str() : "") + "," + angles_str(rc.angles) + "," +
                 angles_str(rc.chain) + "," + (rc.abelian ? "1" : "0") + "," +
                 (rc.binary_dihedral ? "1" : "0") + "," +
                 (rc.mirror_pair_id ? std::to_string(*rc.mirror_pair_id) : "") + "," +
                 std::to_string(rc.mirror_sign) + "," + to_string(rc.orbit) + "\n";
        }
    };
    emit("abelian", r.abelian_classes);
    emit("binary_dihedral", r.binary_dihedral_classes);
    emit("non_binary_dihedral", r.non_bd_classes);
    return s;
}

inline json to_json(const AuditRow& a) {
    json j;
    j["case"] = a.central_case == CentralCase::PlusOne ? "+1" : "-1";
    j["row"] = to_json(a.computed);
    j["paper_lo"] = a.paper_lo.str();
    j["paper_hi"] = a.paper_hi.str();
    j["paper_verdict"] = a.paper_verdict;
    j["solver_found"] = a.solver_found;
    j["planar_matches_paper"] = a.planar_matches_paper;
    j["gram_matches_paper"] = a.gram_matches_paper;
    j["gram_matches_solver"] = a.gram_matches_solver;
    return j;
}

} // namespace knotrep
