#ifndef KKP_CONFIG_HPP
#define KKP_CONFIG_HPP

#include <string>

#include "kkp/spectral.hpp"

namespace kkp {

enum class WaveInit { soliton, zero_background };

/// Flat key=value run description; see README for the schema.
struct RunConfig {
    ModelParams params;
    SolverMode mode = SolverMode::kkp2d;
    int nx = 0, ny = 0;
    double lx = 0.0, ly = 0.0;
    double dt = 0.0, t_end = 0.0;
    int snapshot_every = 1;
    bool dealias = true;
    WaveInit wave = WaveInit::soliton;
    double mu = 0.0;
    double nu = 0.0;      // filled from zero_background_nu when wave = zero_background
    bool has_nu = false;  // nu was given or derived
    double x0 = -1.0;     // initial crest offset; defaults to lx/2
    std::string output_dir;

    Grid2D grid() const { return Grid2D(nx, ny, lx, ly); }
    SolverConfig solver_config() const;
    LineWave line_wave() const;
    void validate();  // also fills derived defaults (nu, x0)
};

/// Parses `key = value` lines with `#` comments. Unknown keys, missing
/// required keys and malformed values are errors naming the line number.
RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& origin = "<string>");

}  // namespace kkp

#endif
