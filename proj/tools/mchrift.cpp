#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "mchrift/mchrift.hpp"

int main(int argc, char** argv) {
    CLI::App app{"mchrift: scattering, soliton, Painleve II and transition-zone "
                 "asymptotics for a cubic peakon-family flow"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", vii_sign = "theorem";
    int threads = 1;
    bool close_orbits = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key=value config file")->required();
        sub->add_option("--out", out_dir, "output directory (default: cwd)");
        sub->add_option("--threads", threads, "worker threads (currently single threaded)");
        sub->add_flag("--close-orbits", close_orbits,
                      "complete discrete records to full symmetry orbits");
        sub->add_option("--vii-sign", vii_sign,
                        "sign of the second local-model amplitude: theorem = -|r|, eq475 = +|r|")
            ->check(CLI::IsMember({"theorem", "eq475"}));
    };

    const char* modes[] = {"scatter", "soliton", "painleve", "asymptotic", "direct", "compare"};
    for (const char* m : modes) add_common(app.add_subcommand(m));

    CLI11_PARSE(app, argc, argv);
    const std::string mode = app.get_subcommands().front()->get_name();

    try {
        std::filesystem::create_directories(out_dir);
        mchrift::RunOptions opt;
        opt.out_dir = out_dir;
        opt.threads = threads;
        opt.close_orbits = close_orbits;
        opt.vii_plus = (vii_sign == "eq475");
        mchrift::Config cfg = mchrift::parse_config(config_path);
        mchrift::json summary = mchrift::run_experiment(cfg, mode, opt);
        std::printf("%s\n", summary.dump(2).c_str());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
