#include "kkp/output.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kkp {

static_assert(std::endian::native == std::endian::little,
              "snapshot writer assumes a little-endian host");

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed: " + tmp + " -> " + path);
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
    std::ostringstream os;
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) os << ",";
        os << header[i];
    }
    os << "\n";
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("csv row width does not match header");
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << format_double(row[i]);
        }
        os << "\n";
    }
    return os.str();
}

void write_snapshot(const std::string& path, const Grid2D& grid, double t, const Field& u) {
    if (static_cast<int>(u.size()) != grid.size())
        throw std::invalid_argument("field size does not match grid");
    std::ostringstream os;
    os << "KKP1 " << grid.nx << " " << grid.ny << " " << format_double(grid.lx) << " "
       << format_double(grid.ly) << " " << format_double(t) << "\n";
    std::string body = os.str();
    const size_t head = body.size();
    body.resize(head + u.size() * sizeof(double));
    std::memcpy(body.data() + head, u.data(), u.size() * sizeof(double));
    write_file_atomic(path, body);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open snapshot: " + path);
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("truncated snapshot: " + path);
    std::istringstream hs(header);
    std::string magic;
    int nx, ny;
    double lx, ly, t;
    if (!(hs >> magic >> nx >> ny >> lx >> ly >> t) || magic != "KKP1")
        throw std::runtime_error("bad snapshot header: " + path);
    Snapshot snap;
    snap.grid = Grid2D(nx, ny, lx, ly);
    snap.t = t;
    snap.u.resize(snap.grid.size());
    in.read(reinterpret_cast<char*>(snap.u.data()),
            static_cast<std::streamsize>(snap.u.size() * sizeof(double)));
    if (in.gcount() != static_cast<std::streamsize>(snap.u.size() * sizeof(double)))
        throw std::runtime_error("truncated snapshot payload: " + path);
    return snap;
}

}  // namespace kkp
