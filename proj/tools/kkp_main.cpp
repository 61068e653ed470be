#include <CLI11.hpp>
#include <iostream>

#include "kkp/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"kkp: Kawahara-KP soliton laboratory"};
    app.require_subcommand(1);

    std::string out_dir = ".";
    app.add_option("--out", out_dir, "output directory")->capture_default_str();

    kkp::SolitonOptions sol;
    auto* soliton = app.add_subcommand("soliton", "line soliton profile sweep");
    soliton->add_option("--beta", sol.betas, "beta values (< 0)");
    auto* kopt = soliton->add_option("--kappa", sol.kappa, "common kappa for the sweep");
    auto* zb = soliton->add_flag("--zero-background", sol.zero_background,
                                 "pick nu so the background vanishes");
    kopt->excludes(zb);
    soliton->add_option("--xi-min", sol.xi_min)->capture_default_str();
    soliton->add_option("--xi-max", sol.xi_max)->capture_default_str();
    soliton->add_option("-n", sol.n, "sample count")->capture_default_str();

    kkp::KinematicsOptions kin;
    auto* kinematics = app.add_subcommand("kinematics", "speed-angle curves c(theta)");
    kinematics->add_option("--b2", kin.b2, "values of (6 beta/13)^2");
    kinematics->add_option("--sigma", kin.sigma, "+1 or -1")->capture_default_str();
    kinematics->add_option("--theta-max", kin.theta_max)->capture_default_str();
    kinematics->add_option("-n", kin.n, "sample count")->capture_default_str();

    app.add_subcommand("verify-ansatz", "exact certification of the sech^4 family");
    app.add_subcommand("verify-claws", "conservation-law divergence residual study");

    kkp::StabilityOptions stab;
    auto* stability = app.add_subcommand("stability", "rescaled-operator stability integral");
    stability->add_option("-n", stab.n, "grid points")->capture_default_str();
    stability->add_option("-L", stab.lengths, "domain lengths");

    std::string config_path;
    auto* simulate = app.add_subcommand("simulate", "pseudospectral evolution run");
    simulate->add_option("config", config_path, "key=value config file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        (void)kkp::max_threads();  // validate KKP_THREADS early
        if (soliton->parsed()) {
            if (!sol.zero_background && kopt->count() == 0)
                throw std::invalid_argument("soliton needs --kappa or --zero-background");
            return kkp::cmd_soliton(sol, out_dir, std::cout);
        }
        if (kinematics->parsed()) return kkp::cmd_kinematics(kin, out_dir, std::cout);
        if (app.get_subcommand("verify-ansatz")->parsed())
            return kkp::cmd_verify_ansatz(std::cout);
        if (app.get_subcommand("verify-claws")->parsed())
            return kkp::cmd_verify_claws(out_dir, std::cout);
        if (stability->parsed()) return kkp::cmd_stability(stab, out_dir, std::cout);
        if (simulate->parsed())
            return kkp::cmd_simulate(kkp::parse_config(config_path), out_dir, std::cout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
