#include "kkp/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kkp {

SolverConfig RunConfig::solver_config() const {
    SolverConfig cfg;
    cfg.params = params;
    cfg.dt = dt;
    cfg.t_end = t_end;
    cfg.dealias = dealias;
    cfg.snapshot_every = snapshot_every;
    cfg.mode = mode;
    return cfg;
}

LineWave RunConfig::line_wave() const { return LineWave(params, mu, nu); }

void RunConfig::validate() {
    params.validate();
    grid();  // throws on bad nx/ny/lx/ly
    solver_config().validate();
    if (wave == WaveInit::zero_background) {
        nu = zero_background_nu(params, mu);
        has_nu = true;
    }
    if (!has_nu) throw std::invalid_argument("nu is required unless wave = zero_background");
    if (x0 < 0.0) x0 = lx / 2.0;
}

namespace {

struct Entry {
    std::string value;
    int line;
};

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    std::ostringstream os;
    os << origin << ":" << line << ": " << msg;
    throw std::invalid_argument(os.str());
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& origin, const std::string& key, const Entry& e) {
    double v = 0.0;
    const char* begin = e.value.data();
    const char* end = begin + e.value.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end)
        fail(origin, e.line, key + " expects a number, got '" + e.value + "'");
    return v;
}

int parse_int(const std::string& origin, const std::string& key, const Entry& e) {
    int v = 0;
    const char* begin = e.value.data();
    const char* end = begin + e.value.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end)
        fail(origin, e.line, key + " expects an integer, got '" + e.value + "'");
    return v;
}

bool parse_bool(const std::string& origin, const std::string& key, const Entry& e) {
    if (e.value == "true" || e.value == "1") return true;
    if (e.value == "false" || e.value == "0") return false;
    fail(origin, e.line, key + " expects true or false, got '" + e.value + "'");
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    static const std::set<std::string> known = {
        "beta", "sigma", "mode", "nx", "ny", "lx", "ly", "dt", "t_end",
        "snapshot_every", "dealias", "wave", "mu", "nu", "x0", "output_dir"};

    std::map<std::string, Entry> entries;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(origin, lineno, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!known.count(key)) fail(origin, lineno, "unknown key '" + key + "'");
        if (entries.count(key)) fail(origin, lineno, "duplicate key '" + key + "'");
        if (value.empty()) fail(origin, lineno, "empty value for '" + key + "'");
        entries[key] = {value, lineno};
    }

    RunConfig cfg;

    // validate values of whatever keys are present first, so a bad value is
    // reported with its line number even when other keys are missing
    if (entries.count("beta")) {
        const Entry& e = entries.at("beta");
        cfg.params.beta = parse_double(origin, "beta", e);
        if (cfg.params.beta == 0.0) fail(origin, e.line, "beta must be nonzero");
    }
    if (entries.count("sigma")) {
        const Entry& e = entries.at("sigma");
        const int s = parse_int(origin, "sigma", e);
        if (s != 1 && s != -1) fail(origin, e.line, "sigma must be +1 or -1");
        cfg.params.sigma = s;
    }
    if (entries.count("nx")) cfg.nx = parse_int(origin, "nx", entries.at("nx"));
    if (entries.count("ny")) cfg.ny = parse_int(origin, "ny", entries.at("ny"));
    if (entries.count("lx")) cfg.lx = parse_double(origin, "lx", entries.at("lx"));
    if (entries.count("ly")) cfg.ly = parse_double(origin, "ly", entries.at("ly"));
    if (entries.count("dt")) cfg.dt = parse_double(origin, "dt", entries.at("dt"));
    if (entries.count("t_end")) cfg.t_end = parse_double(origin, "t_end", entries.at("t_end"));

    auto get = [&](const char* key) -> const Entry& { return entries.at(key); };
    if (entries.count("mode")) {
        const Entry& e = get("mode");
        if (e.value == "kkp2d")
            cfg.mode = SolverMode::kkp2d;
        else if (e.value == "kawahara1d")
            cfg.mode = SolverMode::kawahara1d;
        else
            fail(origin, e.line, "mode must be kkp2d or kawahara1d");
    }
    if (entries.count("snapshot_every"))
        cfg.snapshot_every = parse_int(origin, "snapshot_every", get("snapshot_every"));
    if (entries.count("dealias")) cfg.dealias = parse_bool(origin, "dealias", get("dealias"));
    if (entries.count("wave")) {
        const Entry& e = get("wave");
        if (e.value == "soliton")
            cfg.wave = WaveInit::soliton;
        else if (e.value == "zero_background")
            cfg.wave = WaveInit::zero_background;
        else
            fail(origin, e.line, "wave must be soliton or zero_background");
    }
    if (entries.count("mu")) cfg.mu = parse_double(origin, "mu", get("mu"));
    if (entries.count("nu")) {
        cfg.nu = parse_double(origin, "nu", get("nu"));
        cfg.has_nu = true;
    }
    if (entries.count("x0")) cfg.x0 = parse_double(origin, "x0", get("x0"));
    if (entries.count("output_dir")) cfg.output_dir = get("output_dir").value;

    for (const char* req : {"beta", "sigma", "nx", "ny", "lx", "ly", "dt", "t_end"})
        if (!entries.count(req))
            fail(origin, lineno, std::string("missing required key '") + req + "'");

    try {
        cfg.validate();
    } catch (const std::exception& e) {
        throw std::invalid_argument(origin + ": " + e.what());
    }
    return cfg;
}

RunConfig parse_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream body;
    body << in.rdbuf();
    return parse_config_text(body.str(), path);
}

}  // namespace kkp
