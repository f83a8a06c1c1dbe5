// Command-line front end: similarity profiles and space-time fields to CSV,
// audit suites with pass/warn/fail report lines, and named plot-data presets.
// Exit codes: 0 ok, 1 audit failure, 2 configuration error, 3 evaluation
// error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "telheat/config.hpp"

namespace {

int write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "config error: cannot open output file '" << out_path << "'\n";
        return 2;
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    return out ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"self-similar solutions of the time-decaying-damping telegraph model"};
    app.require_subcommand(1);

    std::string config_path, family, out_path, projection;
    std::string suite = "all", preset_name;
    std::vector<std::string> sets;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "flat key=value configuration file");
        cmd->add_option("--family", family, "solution family name");
        cmd->add_option("--set", sets, "key=value override (repeatable)")->type_size(1);
        cmd->add_option("--out", out_path, "output path (default: stdout)");
        cmd->add_option("--projection", projection, "complex | real-part | magnitude");
    };

    CLI::App* profile = app.add_subcommand("profile", "emit a similarity profile as CSV");
    add_common(profile);
    CLI::App* field = app.add_subcommand("field", "emit a space-time field as CSV");
    add_common(field);
    CLI::App* verify = app.add_subcommand("verify", "run an audit suite and report");
    add_common(verify);
    verify->add_option("suite", suite,
                       "specfun | ode | scaling | conservation | oracle | all");
    CLI::App* preset = app.add_subcommand("preset", "emit plot-ready data for a named figure");
    preset->add_option("name", preset_name, "fig1 .. fig10")->required();
    preset->add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    try {
        telheat::RunConfig cfg;
        if (!config_path.empty()) telheat::load_config_file(cfg, config_path);
        for (const std::string& kv : sets) {
            const size_t eq = kv.find('=');
            if (eq == std::string::npos)
                throw telheat::ConfigError("config: --set expects key=value, got '" + kv + "'");
            telheat::apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
        }
        if (!family.empty()) telheat::apply_setting(cfg, "family", family);
        if (!projection.empty()) telheat::apply_setting(cfg, "projection", projection);

        if (profile->parsed()) return write_output(out_path, telheat::cmd_profile(cfg));
        if (field->parsed()) return write_output(out_path, telheat::cmd_field(cfg));
        if (preset->parsed()) return write_output(out_path, telheat::cmd_preset(preset_name));
        // verify
        if (verify->count("suite") != 0) cfg.suite = suite;
        std::string report;
        const int verdict = telheat::cmd_verify(cfg, report);
        const int io = write_output(out_path, report);
        return io != 0 ? io : verdict;
    } catch (const telheat::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const telheat::Error& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return 3;
    }
}
