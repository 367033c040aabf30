#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "reversive/catalog_cli.hpp"

namespace cli = reversive::cli;

int main(int argc, char** argv) {
    CLI::App app{"Reversive symbols: dissection counts by series reversion"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<int> exhaustive_cap;
    std::optional<int> chord_cap;
    app.add_option("--config", config_path, "key=value config file");
    app.add_option("--exhaustive-cap", exhaustive_cap, "largest n for exhaustive dissection counts");
    app.add_option("--chord-cap", chord_cap, "largest p for exhaustive chord-diagram counts");

    std::optional<std::size_t> count;
    std::string target;
    std::string method = "reversion";
    std::string out_path;

    auto* list = app.add_subcommand("list", "print the catalogued symbols");

    auto* terms = app.add_subcommand("terms", "print n a(n) for n = 0..count-1");
    terms->add_option("target", target, "catalog name or symbol text")->required();
    terms->add_option("--count", count, "number of terms");
    terms->add_option("--method", method, "reversion | closed | series")
        ->check(CLI::IsMember({"reversion", "closed", "series"}));

    auto* verify = app.add_subcommand("verify", "cross-check every computation path");
    verify->add_option("name", target, "catalog name")->required();
    verify->add_option("--count", count, "number of terms");

    auto* from_tiles = app.add_subcommand("from-tiles", "build the symbol for a tile rule");
    from_tiles->add_option("spec", target, "e.g. 4+, 3,5, odd, even, any")->required();
    from_tiles->add_option("--count", count, "number of terms");

    auto* bfile = app.add_subcommand("bfile", "write a b-file");
    bfile->add_option("target", target, "catalog name or symbol text")->required();
    bfile->add_option("--count", count, "number of terms");
    bfile->add_option("--out", out_path, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e);
        return status == 0 ? cli::kExitSuccess : cli::kExitUsage;
    }

    try {
        cli::Config config;
        if (!config_path.empty()) {
            config = cli::load_config(config_path);
        }
        if (exhaustive_cap) config.exhaustive_cap_n = *exhaustive_cap;
        if (chord_cap) config.chord_cap_p = *chord_cap;
        const std::size_t n = count.value_or(static_cast<std::size_t>(config.default_count));

        if (list->parsed()) return cli::cmd_list(std::cout);
        if (terms->parsed()) return cli::cmd_terms(std::cout, target, n, cli::parse_method(method));
        if (verify->parsed()) return cli::cmd_verify(std::cout, target, n, config);
        if (from_tiles->parsed()) return cli::cmd_from_tiles(std::cout, target, n);
        if (bfile->parsed()) return cli::cmd_bfile(std::cout, target, n, out_path);
    } catch (const reversive::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_status_for(e);
    }
    return cli::kExitUsage;
}
