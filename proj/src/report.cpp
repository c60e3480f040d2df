#include "report.hpp"

#include "textform.hpp"

namespace mwplet {

Json section_json(const Section& s) {
    if (s.is_zero()) return Json("O");
    Json j;
    j["x"] = ratfunc_string(s.x());
    j["y"] = ratfunc_string(s.y());
    return j;
}

Json fibers_json(const std::vector<FiberPlace>& fibers) {
    Json out = Json::array();
    for (const auto& f : fibers) {
        Json j;
        j["place"] = f.place.is_infinity() ? "inf" : canonical_string(f.place.pi());
        j["type"] = "I" + std::to_string(f.n);
        j["degree"] = f.residue_degree;
        if (f.node) {
            Json n;
            n["x"] = fieldelem_string(f.node->first);
            n["y"] = fieldelem_string(f.node->second);
            j["node"] = n;
        }
        out.push_back(j);
    }
    return out;
}

Json height_json(const HeightReport& rep) {
    Json j;
    j["value"] = rational_string(rep.value);
    j["chi_term"] = rational_string(rep.chi_term);
    j["zero_terms"] = rational_string(rep.zero_terms);
    j["cross_term"] = rational_string(rep.cross_term);
    Json contr = Json::array();
    for (const auto& [fp, val] : rep.contributions) {
        Json c;
        c["place"] = fp.place.is_infinity() ? "inf" : canonical_string(fp.place.pi());
        c["value"] = rational_string(val);
        contr.push_back(c);
    }
    j["contributions"] = contr;
    return j;
}

Json profile_json(const IntersectionProfile& prof) {
    Json out;
    out["total"] = prof.total;
    Json entries = Json::array();
    for (const auto& e : prof.entries) {
        Json j;
        j["multiplicity"] = e.multiplicity;
        j["degree"] = e.degree;
        if (e.point) j["point"] = proj_string(*e.point);
        if (e.parameter_factor) {
            j["conjugate_cluster"] = canonical_string(*e.parameter_factor);
        }
        entries.push_back(j);
    }
    out["points"] = entries;
    return out;
}

Json member_json(const ArrangementMember& m) {
    Json j;
    j["family"] = m.group;
    j["parameter"] = rational_string(m.parameter);
    j["conic"] = m.conic.str();
    return j;
}

Json arrangement_json(const NTArrangement& arr) {
    Json j;
    j["k"] = arr.partition.k();
    j["partition"] = {arr.partition.k1, arr.partition.k2, arr.partition.k3};
    j["kind"] = arr.kind == ArrangementKind::Full ? "full" : "weak";
    Json ms = Json::array();
    for (const auto& m : arr.members) ms.push_back(member_json(m));
    j["members"] = ms;
    Json c;
    c["quartic_nodes"] = arr.census.quartic_nodes;
    c["tacnodes"] = arr.census.tacnodes;
    c["member_nodes"] = arr.census.member_nodes;
    c["other"] = arr.census.other;
    j["census"] = c;
    return j;
}

Json plet_json(const PletCertificate& cert) {
    Json j;
    j["k"] = cert.k;
    j["prime"] = cert.prime;
    j["count"] = cert.entries.size();
    j["pairwise_distinct"] = cert.pairwise_distinct;
    Json entries = Json::array();
    for (const auto& e : cert.entries) {
        Json ej;
        ej["partition"] = {e.partition.k1, e.partition.k2, e.partition.k3};
        ej["invariant"] = e.invariant;
        ej["arrangement"] = arrangement_json(e.arrangement);
        entries.push_back(ej);
    }
    j["entries"] = entries;
    return j;
}

Json check_json(const Check& c) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (c.criterion > 0) j["criterion"] = c.criterion;
    if (!c.expected.empty()) j["expected"] = c.expected;
    if (!c.actual.empty()) j["actual"] = c.actual;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

Json checks_json(const std::vector<Check>& checks, const std::string& command) {
    Json j;
    j["command"] = command;
    j["all_pass"] = all_pass(checks);
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back(check_json(c));
    j["checks"] = arr;
    return j;
}

bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

} // namespace mwplet
