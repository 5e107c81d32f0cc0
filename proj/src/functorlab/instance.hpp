#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace functorlab {

/* Batch front door: parse a JSON instance file, run its jobs, write one JSON
 * report per job plus an aligned text table. Reruns are byte-identical: no
 * wall clock enters the report bodies (timings go to a sidecar). */

struct RunFlags {
    int n_max_override = -1;   // --n-max
    int64_t cap_override = -1; // --cap (also FUNCTORLAB_CAP)
    uint32_t jobs = 1;         // worker pool width
};

struct RunOutcome {
    int exit_code = 0; // 0 ok, 2 parse, 3 sizing, 4 refuted, 5 hypotheses-unmet
    std::string table;
    std::vector<std::string> job_files;
};

RunOutcome run_instance(const std::string& instance_path, const std::string& out_dir,
                        const RunFlags& flags);

/* per-job size forecast without computing anything */
struct EstimateOutcome {
    int exit_code = 0;
    std::string table;
    Json json;
};
EstimateOutcome estimate_instance(const std::string& instance_path, const RunFlags& flags);

} // namespace functorlab
