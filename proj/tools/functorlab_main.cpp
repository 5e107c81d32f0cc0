#include <CLI11.hpp>
#include <cstdio>

#include <functorlab/instance.hpp>

using namespace functorlab;

int main(int argc, char** argv) {
    CLI::App app{"functorlab: exact Hom/Tor/Ext and theorem checks on finite "
                 "truncated matrix categories"};
    app.require_subcommand(1);

    std::string instance, out_dir = "out";
    RunFlags flags;

    auto* run = app.add_subcommand("run", "run an instance file and write reports");
    run->add_option("instance", instance, "instance JSON file")->required();
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--n-max", flags.n_max_override, "override n_max for every job");
    run->add_option("--cap", flags.cap_override, "override the enumeration cap");
    run->add_option("--jobs", flags.jobs, "worker pool width");

    auto* est = app.add_subcommand("estimate", "forecast bar ranks without computing");
    est->add_option("instance", instance, "instance JSON file")->required();
    est->add_option("--n-max", flags.n_max_override, "override n_max for every job");
    est->add_option("--cap", flags.cap_override, "override the enumeration cap");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        RunOutcome out = run_instance(instance, out_dir, flags);
        fputs(out.table.c_str(), stdout);
        return out.exit_code;
    }
    EstimateOutcome out = estimate_instance(instance, flags);
    fputs(out.table.c_str(), stdout);
    if (!out.json.is_null())
        printf("%s\n", out.json.dump(2).c_str());
    return out.exit_code;
}
