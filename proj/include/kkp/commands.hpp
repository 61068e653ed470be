#ifndef KKP_COMMANDS_HPP
#define KKP_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

#include "kkp/config.hpp"

namespace kkp {

/// Data-parallel width cap from KKP_THREADS (>= 1); 0 means "not set".
int max_threads();

struct SolitonOptions {
    std::vector<double> betas = {-4.0, -3.0, -2.0, -1.0};
    double kappa = 0.0;
    bool zero_background = false;
    double xi_min = -40.0, xi_max = 40.0;
    int n = 801;
};

/// Writes soliton.csv: columns xi, U_beta=<b>... for the requested sweep.
int cmd_soliton(const SolitonOptions& opt, const std::string& out_dir, std::ostream& log);

struct KinematicsOptions {
    std::vector<double> b2 = {1.0, 2.0, 4.0, 10.0};  // values of (6 beta / 13)^2
    int sigma = 1;
    double theta_max = 1.47;  // < pi/2
    int n = 589;
};

/// Writes kinematics.csv: columns theta, c_b2=<g>... per the speed-angle law.
int cmd_kinematics(const KinematicsOptions& opt, const std::string& out_dir, std::ostream& log);

/// Exact-arithmetic certification of the sech^4 family; prints the derived
/// integration constants and flags the literature discrepancy.
int cmd_verify_ansatz(std::ostream& log);

/// h-refinement study of all five conservation-law divergence residuals.
int cmd_verify_claws(const std::string& out_dir, std::ostream& log);

struct StabilityOptions {
    int n = 16384;
    std::vector<double> lengths = {100.0, 200.0};
};

int cmd_stability(const StabilityOptions& opt, const std::string& out_dir, std::ostream& log);

/// Full run: run_manifest.txt, diagnostics.csv, snapshot_NNNN files.
int cmd_simulate(RunConfig config, const std::string& out_dir, std::ostream& log);

}  // namespace kkp

#endif
