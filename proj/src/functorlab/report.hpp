#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "chain.hpp"
#include "fcomplex.hpp"

namespace functorlab {

using Json = nlohmann::ordered_json;

/* Structured result of one theorem check. The wall-clock never enters the
 * JSON body (reruns must be byte-identical); the CLI writes timings to a
 * sidecar file instead. */
struct TheoremReport {
    std::string check;    // e.g. "excision", "separation"
    std::string instance; // human-readable instance description

    struct Hypothesis {
        std::string name;
        bool verified = false;
        std::string witness; // failure witness, empty when verified
    };
    std::vector<Hypothesis> hypotheses;

    struct DegreeRow {
        int degree = 0;
        uint64_t lhs_dim = 0, rhs_dim = 0;
        std::string map_verdict = "n/a"; // iso / injective-only / ...
        bool as_predicted = false;
        std::string note;
    };
    std::vector<DegreeRow> degrees;

    std::string truncation;               // e.g. "N=1 (rerun N=2)"
    std::string certified_range;          // e.g. "degrees 0..2"
    std::vector<std::string> caveats;     // e.g. "truncated instance"
    std::string verdict = "inconclusive-sizing";
    std::string detail;

    // stabilization rerun outcome (empty when not attempted)
    std::string stabilization;

    double wall_ms = 0.0; // sidecar only

    bool confirmed() const { return verdict == "confirmed"; }
    void finalize(); // derive the verdict from hypotheses + degree rows

    Json to_json() const;
    std::string table() const; // aligned human-readable block
};

std::string verdict_from(bool hyps_ok, bool all_rows_ok, bool sized_out);

} // namespace functorlab
