#pragma once

#include "qha/op_core.hpp"
#include "qha/report.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qha {

static_assert(std::endian::native == std::endian::little,
              "binary dumps are little-endian; this platform is not");

namespace detail {

/// Shortest decimal form that parses back to exactly the same double.
inline std::string full_precision(double v) {
    char buf[32];
    const std::to_chars_result r =
        std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

/// Renders a complex cell in the "re+imj" form, e.g. "1.5-0.25j".
inline std::string complex_cell(cplx v) {
    const double im = v.imag();
    return full_precision(v.real()) + (im < 0.0 ? "-" : "+") +
           full_precision(std::abs(im)) + "j";
}

/// Parses a "re+imj" cell; the separator is the last sign character that
/// does not belong to a leading sign or an exponent.
inline cplx parse_complex_cell(const std::string& cell) {
    if (cell.empty() || cell.back() != 'j') {
        throw std::runtime_error("phase CSV: malformed cell '" + cell + "'");
    }
    const std::string body = cell.substr(0, cell.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        const char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' &&
            body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        throw std::runtime_error("phase CSV: malformed cell '" + cell + "'");
    }
    const double re = std::stod(body.substr(0, split));
    const double im = std::stod(body.substr(split));
    return {re, im};
}

inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) out.push_back(field);
    return out;
}

inline std::ofstream open_out(const std::string& path, bool binary) {
    std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

inline std::ifstream open_in(const std::string& path, bool binary) {
    std::ifstream is(path, binary ? std::ios::binary : std::ios::in);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return is;
}

}  // namespace detail

/**
 * Writes a phase-space table as CSV: the header row carries the frequency
 * values, the first column the position values, and each cell is a complex
 * number in the "re+imj" form.
 */
inline void write_phase_csv(const PhaseFunction& F, const std::string& path) {
    std::ofstream os = detail::open_out(path, false);
    const int n = F.grid.n();
    for (int k = 0; k < n; ++k) {
        os << ',' << detail::full_precision(F.grid.xi.point(k));
    }
    os << '\n';
    for (int a = 0; a < n; ++a) {
        os << detail::full_precision(F.grid.x.point(a));
        for (int k = 0; k < n; ++k) {
            os << ',' << detail::complex_cell(F.values(a, k));
        }
        os << '\n';
    }
}

/**
 * Reads a phase-space table written by write_phase_csv onto the given
 * grid; the table must match the grid in size and in its axis values.
 */
inline PhaseFunction read_phase_csv(const std::string& path,
                                    const PhaseGrid& grid) {
    std::ifstream is = detail::open_in(path, false);
    std::string line;
    if (!std::getline(is, line)) {
        throw std::runtime_error("phase CSV: empty file " + path);
    }
    const std::vector<std::string> header = detail::split_csv_row(line);
    const int n = grid.n();
    if (static_cast<int>(header.size()) != n + 1) {
        throw std::runtime_error("phase CSV: header width does not match n=" +
                                 std::to_string(n));
    }
    const double scale = std::max(1.0, grid.x.length());
    for (int k = 0; k < n; ++k) {
        if (std::abs(std::stod(header[k + 1]) - grid.xi.point(k)) >
            1e-9 * scale) {
            throw std::runtime_error("phase CSV: frequency axis mismatch");
        }
    }
    PhaseFunction F(grid);
    for (int a = 0; a < n; ++a) {
        if (!std::getline(is, line)) {
            throw std::runtime_error("phase CSV: truncated at row " +
                                     std::to_string(a));
        }
        const std::vector<std::string> row = detail::split_csv_row(line);
        if (static_cast<int>(row.size()) != n + 1) {
            throw std::runtime_error("phase CSV: bad row width at row " +
                                     std::to_string(a));
        }
        if (std::abs(std::stod(row[0]) - grid.x.point(a)) > 1e-9 * scale) {
            throw std::runtime_error("phase CSV: position axis mismatch");
        }
        for (int k = 0; k < n; ++k) {
            F.values(a, k) = detail::parse_complex_cell(row[k + 1]);
        }
    }
    return F;
}

namespace detail {

constexpr char kPhaseMagic[9] = "QHAPHF01";
constexpr char kOperatorMagic[9] = "QHAOPK01";

inline void write_complex_rows(std::ofstream& os,
                               const Eigen::MatrixXcd& table) {
    for (Eigen::Index r = 0; r < table.rows(); ++r) {
        for (Eigen::Index c = 0; c < table.cols(); ++c) {
            const double re = table(r, c).real();
            const double im = table(r, c).imag();
            os.write(reinterpret_cast<const char*>(&re), sizeof(double));
            os.write(reinterpret_cast<const char*>(&im), sizeof(double));
        }
    }
}

inline void read_complex_rows(std::ifstream& is, Eigen::MatrixXcd& table,
                              const std::string& path) {
    for (Eigen::Index r = 0; r < table.rows(); ++r) {
        for (Eigen::Index c = 0; c < table.cols(); ++c) {
            double re = 0.0, im = 0.0;
            is.read(reinterpret_cast<char*>(&re), sizeof(double));
            is.read(reinterpret_cast<char*>(&im), sizeof(double));
            if (!is) {
                throw std::runtime_error("binary dump truncated: " + path);
            }
            table(r, c) = {re, im};
        }
    }
}

inline void check_magic(std::ifstream& is, const char* expected,
                        const std::string& path) {
    char got[8] = {};
    is.read(got, 8);
    if (!is || std::string(got, 8) != std::string(expected, 8)) {
        throw std::runtime_error("bad magic in " + path);
    }
}

}  // namespace detail

/// Binary dump of a phase table: 8-byte magic then row-major complex
/// doubles; the size is implied by the payload length.
inline void write_phase_binary(const PhaseFunction& F,
                               const std::string& path) {
    std::ofstream os = detail::open_out(path, true);
    os.write(detail::kPhaseMagic, 8);
    detail::write_complex_rows(os, F.values);
}

/// Reads a phase-table dump, inferring the table size from the payload and
/// checking it against the supplied grid.
inline PhaseFunction read_phase_binary(const std::string& path,
                                       const PhaseGrid& grid) {
    std::ifstream is = detail::open_in(path, true);
    is.seekg(0, std::ios::end);
    const std::int64_t bytes = static_cast<std::int64_t>(is.tellg()) - 8;
    is.seekg(0, std::ios::beg);
    detail::check_magic(is, detail::kPhaseMagic, path);
    if (bytes < 0 || bytes % 16 != 0) {
        throw std::runtime_error("phase dump has a malformed payload: " +
                                 path);
    }
    const std::int64_t cells = bytes / 16;
    const int n = static_cast<int>(std::llround(std::sqrt(
        static_cast<double>(cells))));
    if (static_cast<std::int64_t>(n) * n != cells || n != grid.n()) {
        throw std::runtime_error("phase dump size does not match the grid: " +
                                 path);
    }
    PhaseFunction F(grid);
    detail::read_complex_rows(is, F.values, path);
    return F;
}

/// Binary dump of an operator kernel: magic, the size as a little-endian
/// 64-bit count, then row-major complex doubles.
inline void write_operator_binary(const OperatorMatrix& T,
                                  const std::string& path) {
    std::ofstream os = detail::open_out(path, true);
    os.write(detail::kOperatorMagic, 8);
    const std::uint64_t n = static_cast<std::uint64_t>(T.kernel.rows());
    os.write(reinterpret_cast<const char*>(&n), sizeof(n));
    detail::write_complex_rows(os, T.kernel);
}

/// Reads an operator-kernel dump onto the supplied grid.
inline OperatorMatrix read_operator_binary(const std::string& path,
                                           const LineGrid& grid) {
    std::ifstream is = detail::open_in(path, true);
    detail::check_magic(is, detail::kOperatorMagic, path);
    std::uint64_t n = 0;
    is.read(reinterpret_cast<char*>(&n), sizeof(n));
    if (!is || n != static_cast<std::uint64_t>(grid.n)) {
        throw std::runtime_error(
            "operator dump size does not match the grid: " + path);
    }
    OperatorMatrix T = OperatorMatrix::zero(grid);
    detail::read_complex_rows(is, T.kernel, path);
    return T;
}

/// Singular spectrum as a two-column CSV.
inline void write_spectrum_csv(const SingularSpectrum& s,
                               const std::string& path) {
    std::ofstream os = detail::open_out(path, false);
    os << "index,singular_value\n";
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        os << i << ',' << detail::full_precision(s(i)) << '\n';
    }
}

/// Plot-ready CSV of a report's series block: one column per series, rows
/// aligned by index.
inline void write_series_csv(const ExperimentReport& rep,
                             const std::string& path) {
    std::ofstream os = detail::open_out(path, false);
    std::vector<std::string> keys;
    std::size_t rows = 0;
    for (const auto& item : rep.series.items()) {
        keys.push_back(item.key());
        rows = std::max(rows, item.value().size());
    }
    for (std::size_t i = 0; i < keys.size(); ++i) {
        os << (i ? "," : "") << keys[i];
    }
    os << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            os << (i ? "," : "");
            const auto& col = rep.series[keys[i]];
            if (r < col.size()) {
                os << detail::full_precision(col[r].get<double>());
            }
        }
        os << '\n';
    }
}

}  // namespace qha
