#include "timobeam/trace_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "timobeam/errors.hpp"
#include "timobeam/run_config.hpp"

namespace timobeam {

namespace {

constexpr const char* kTraceHeader = "step,t,E_paper,E_phys,dissipation_rate,identity_residual";

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path.string() + "' for writing");
    return out;
}

double parse_field(const std::string& field, const std::filesystem::path& path) {
    double out = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError(path.string() + ": malformed numeric field '" + field + "'");
    return out;
}

}  // namespace

int output_precision() {
    int digits = 17;
    if (const char* env = std::getenv("TIMOBEAM_PRECISION")) {
        char* tail = nullptr;
        const long v = std::strtol(env, &tail, 10);
        if (tail != env && *tail == '\0') digits = static_cast<int>(v);
    }
    return std::clamp(digits, 6, 17);
}

std::string render_real(double x, int digits) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::scientific,
                                   digits - 1);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

void write_trace_csv(const std::filesystem::path& path, const EnergyTrace& trace, int digits) {
    std::ofstream out = open_out(path);
    out << kTraceHeader << '\n';
    for (const EnergySample& s : trace.samples) {
        out << s.step << ',' << render_real(s.t, digits) << ','
            << render_real(s.e_diagonal, digits) << ',' << render_real(s.e_physical, digits)
            << ',' << render_real(s.dissipation_rate, digits) << ','
            << render_real(s.identity_residual, digits) << '\n';
    }
}

EnergyTrace read_trace_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open trace file '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string bytes = buffer.str();

    EnergyTrace trace;
    trace.fingerprint = fnv1a_hex(bytes);

    std::istringstream lines(bytes);
    std::string line;
    if (!std::getline(lines, line) || line != kTraceHeader)
        throw ConfigError(path.string() + ": missing trace header '" + std::string(kTraceHeader) +
                          "'");
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 6)
            throw ConfigError(path.string() + ": expected 6 fields per row, got " +
                              std::to_string(fields.size()));
        EnergySample s;
        s.step = static_cast<long>(parse_field(fields[0], path));
        s.t = parse_field(fields[1], path);
        s.e_diagonal = parse_field(fields[2], path);
        s.e_physical = parse_field(fields[3], path);
        s.dissipation_rate = parse_field(fields[4], path);
        s.identity_residual = parse_field(fields[5], path);
        trace.samples.push_back(s);
    }
    return trace;
}

void write_snapshot_csv(const std::filesystem::path& path, const Mesh& mesh,
                        const StateLevel& level, int digits) {
    std::ofstream out = open_out(path);
    out << "x,phi,psi,u,v\n";
    const std::size_t nx = mesh.n_interior;
    auto at = [&](const Vector& w, std::size_t i) {
        return (i == 0 || i > nx) ? 0.0 : w[i - 1];
    };
    for (std::size_t i = 0; i <= nx + 1; ++i) {
        out << render_real(mesh.node(i), digits) << ',' << render_real(at(level.phi, i), digits)
            << ',' << render_real(at(level.psi, i), digits) << ','
            << render_real(at(level.u, i), digits) << ',' << render_real(at(level.v, i), digits)
            << '\n';
    }
}

void write_fit_report(const std::filesystem::path& path, const FitReport& report) {
    std::ofstream out = open_out(path);
    for (const std::string& line : report.summary_lines()) out << line << '\n';
}

void write_plot_data(const std::filesystem::path& dir, const EnergyTrace& trace,
                     double window_fraction, double floor_factor, EnergyColumn column,
                     int digits) {
    const auto window = fit_window(trace, window_fraction, floor_factor, column);

    struct Series {
        const char* file;
        const char* header;
        DecayModel model;
    };
    const Series all_series[] = {
        {"plot_exponential.csv", "t,logE", DecayModel::exponential},
        {"plot_polynomial.csv", "logt,logE", DecayModel::polynomial},
        {"plot_logarithmic.csv", "loglogt,logE", DecayModel::logarithmic},
    };
    for (const Series& series : all_series) {
        std::ofstream out = open_out(dir / series.file);
        out << series.header << '\n';
        for (const auto& [t, log_e] : window) {
            double x;
            if (series.model == DecayModel::exponential) {
                x = t;
            } else if (series.model == DecayModel::polynomial) {
                if (t <= 0.0) continue;
                x = std::log(t);
            } else {
                if (t <= 1.0) continue;
                x = std::log(std::log(t));
            }
            out << render_real(x, digits) << ',' << render_real(log_e, digits) << '\n';
        }
    }
}

}  // namespace timobeam
