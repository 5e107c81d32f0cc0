#include "report.hpp"

#include <fmt/format.h>

namespace functorlab {

std::string verdict_from(bool hyps_ok, bool all_rows_ok, bool sized_out) {
    if (sized_out)
        return "inconclusive-sizing";
    if (!hyps_ok)
        return "hypotheses-unmet";
    return all_rows_ok ? "confirmed" : "refuted-at-instance";
}

void TheoremReport::finalize() {
    bool hyps_ok = true;
    for (const auto& h : hypotheses)
        hyps_ok = hyps_ok && h.verified;
    bool rows_ok = true;
    for (const auto& d : degrees)
        rows_ok = rows_ok && d.as_predicted;
    verdict = verdict_from(hyps_ok, rows_ok, false);
}

Json TheoremReport::to_json() const {
    Json j;
    j["check"] = check;
    j["instance"] = instance;
    j["hypotheses"] = Json::array();
    for (const auto& h : hypotheses) {
        Json hj;
        hj["name"] = h.name;
        hj["verified"] = h.verified;
        if (!h.witness.empty())
            hj["witness"] = h.witness;
        j["hypotheses"].push_back(hj);
    }
    j["degrees"] = Json::array();
    for (const auto& d : degrees) {
        Json dj;
        dj["degree"] = d.degree;
        dj["lhs_dim"] = d.lhs_dim;
        dj["rhs_dim"] = d.rhs_dim;
        dj["map"] = d.map_verdict;
        dj["as_predicted"] = d.as_predicted;
        if (!d.note.empty())
            dj["note"] = d.note;
        j["degrees"].push_back(dj);
    }
    j["truncation"] = truncation;
    j["certified_range"] = certified_range;
    j["caveats"] = caveats;
    if (!stabilization.empty())
        j["stabilization"] = stabilization;
    j["verdict"] = verdict;
    if (!detail.empty())
        j["detail"] = detail;
    return j;
}

std::string TheoremReport::table() const {
    std::string s;
    s += fmt::format("check: {}\ninstance: {}\n", check, instance);
    s += fmt::format("truncation: {}   range: {}\n", truncation, certified_range);
    for (const auto& h : hypotheses)
        s += fmt::format("  hyp {:<38} {}{}\n", h.name, h.verified ? "ok" : "FAILS",
                         h.witness.empty() ? "" : "  witness: " + h.witness);
    if (!degrees.empty()) {
        s += fmt::format("  {:>6} {:>9} {:>9} {:<15} {}\n", "degree", "lhs", "rhs", "map", "ok");
        for (const auto& d : degrees)
            s += fmt::format("  {:>6} {:>9} {:>9} {:<15} {}{}\n", d.degree, d.lhs_dim, d.rhs_dim,
                             d.map_verdict, d.as_predicted ? "yes" : "NO",
                             d.note.empty() ? "" : "  (" + d.note + ")");
    }
    for (const auto& c : caveats)
        s += "  caveat: " + c + "\n";
    if (!stabilization.empty())
        s += "  stabilization: " + stabilization + "\n";
    s += "verdict: " + verdict + (detail.empty() ? "" : " (" + detail + ")") + "\n";
    return s;
}

} // namespace functorlab
