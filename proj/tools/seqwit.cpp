// seqwit command-line front end.
//
//   seqwit thresholds --entanglement 1.0
//   seqwit sweep-lambda --entanglement 1.0 --lambda-grid 0.30:0.70:0.01 -o fig3.csv
//   seqwit verify --seed 7

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "seqwit/cli.hpp"

int main(int argc, char** argv) {
    using namespace seqwit::cli;

    CLI::App app{"Sequential entanglement witnessing by unsharp observers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version));

    run_config cfg;
    std::string lambda_grid;
    std::string entanglement_grid;
    std::string convention;
    std::string fmt_name = "csv";

    const std::map<std::string, format> formats{{"csv", format::csv}, {"json", format::json}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-o,--output", cfg.output_path, "Output file (default: $SEQWIT_OUTPUT_DIR or stdout)");
        sub->add_option("--format", fmt_name, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_entanglement = [&](CLI::App* sub) {
        sub->add_option("-e,--entanglement", cfg.entanglement, "Initial entanglement in ebits")->capture_default_str();
    };

    const std::map<std::string, command> commands{
        {"thresholds", command::thresholds},
        {"max-bobs", command::max_bobs},
        {"sweep-entanglement", command::sweep_entanglement},
        {"sweep-lambda", command::sweep_lambda},
        {"discord-final", command::discord_final},
        {"verify", command::verify},
    };

    auto* thresholds = app.add_subcommand("thresholds", "Per-stage sharpness thresholds and witness values");
    add_entanglement(thresholds);
    thresholds->add_option("--epsilon", cfg.epsilon, "Margin around each threshold")->capture_default_str();
    add_common(thresholds);

    auto* max_bobs = app.add_subcommand("max-bobs", "Maximal number of Bobs with unequal sharpness");
    add_entanglement(max_bobs);
    add_common(max_bobs);

    auto* sweep_e = app.add_subcommand("sweep-entanglement", "Bob count against initial entanglement");
    sweep_e->add_option("--entanglement-grid", entanglement_grid, "start:stop:step in ebits");
    add_common(sweep_e);

    auto* sweep_l = app.add_subcommand("sweep-lambda", "Bob count against a common sharpness");
    add_entanglement(sweep_l);
    sweep_l->add_option("--lambda-grid", lambda_grid, "start:stop:step");
    add_common(sweep_l);

    auto* disc = app.add_subcommand("discord-final", "Discord and negativity of the post-cascade state");
    add_entanglement(disc);
    disc->add_option("--convention", convention, "all-threshold, last-sharp or post-alice (default: all three)")
        ->check(CLI::IsMember({"all-threshold", "last-sharp", "post-alice"}));
    add_common(disc);

    auto* verify = app.add_subcommand("verify", "Cross-validate the closed forms against dense simulation");
    verify->add_option("--seed", cfg.seed, "Seed for the random suites")->capture_default_str();
    verify->add_option("--epsilon", cfg.epsilon, "Threshold bracketing margin")->capture_default_str();
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code::bad_config;
    }

    try {
        for (const auto& [name, cmd] : commands)
            if (app.got_subcommand(name)) cfg.cmd = cmd;
        if (!lambda_grid.empty()) cfg.lambda_grid = parse_grid(lambda_grid);
        if (!entanglement_grid.empty()) cfg.entanglement_grid = parse_grid(entanglement_grid);
        if (!convention.empty()) cfg.convention = parse_convention(convention);
        cfg.output_format = formats.at(fmt_name);
    } catch (const config_error& e) {
        std::cerr << "seqwit: " << e.what() << '\n';
        return exit_code::bad_config;
    }

    return run(cfg);
}
