#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "djcm/geometry.hpp"
#include "djcm/trace.hpp"

namespace djcm {

/// Shortest-safe text form of a double: 17 significant digits, round-trips binary64.
std::string format_double(double x);

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// '#'-prefixed "key: value" lines, then header, then one row per gt node.
/// Columns: gt, c_AB, c_ab, c_Aa, c_Bb, c_Ab, c_aB, p0, sum_sq.
void write_trace_csv(std::ostream& os, const TraceTable& trace, const Metadata& meta = {});

/// Columns alpha, gt, c_first, c_second, c_third; a "# pairs: AB,Aa,Ab" line names them.
void write_surface_csv(std::ostream& os, const SurfaceMesh& mesh, const Metadata& meta = {});

struct CsvTable {
    Metadata meta;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string& name) const;
    const std::string* find_meta(const std::string& key) const;
};

CsvTable read_csv(std::istream& is);

/// Writes `content` to `path`, or to stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& content);

}  // namespace djcm
