#ifndef KKP_OUTPUT_HPP
#define KKP_OUTPUT_HPP

#include <string>
#include <vector>

#include "kkp/spectral.hpp"

namespace kkp {

/// Shortest decimal that round-trips the exact double (to_chars).
std::string format_double(double v);

/// Writes to a temp file in the same directory, then renames into place.
void write_file_atomic(const std::string& path, const std::string& content);

/// Header row + data rows; every cell formatted with format_double.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows);

/// Snapshot format: ASCII line "KKP1 nx ny lx ly t\n" followed by nx*ny
/// little-endian float64 samples, x-major (u(ix,iy) at offset ix*ny+iy).
struct Snapshot {
    Grid2D grid;
    double t = 0.0;
    Field u;
};

void write_snapshot(const std::string& path, const Grid2D& grid, double t, const Field& u);
Snapshot read_snapshot(const std::string& path);

}  // namespace kkp

#endif
