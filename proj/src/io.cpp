#include "djcm/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "djcm/error.hpp"

namespace djcm {

std::string format_double(double x) {
    char buf[32];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf, static_cast<std::size_t>(n));
}

namespace {

void write_meta(std::ostream& os, const Metadata& meta) {
    for (const auto& [k, v] : meta) os << "# " << k << ": " << v << '\n';
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

void write_trace_csv(std::ostream& os, const TraceTable& trace, const Metadata& meta) {
    write_meta(os, meta);
    os << "gt,c_AB,c_ab,c_Aa,c_Bb,c_Ab,c_aB,p0,sum_sq\n";
    for (const TraceRow& r : trace.rows) {
        os << format_double(r.gt);
        for (Pair p : {Pair::AB, Pair::ab, Pair::Aa, Pair::Bb, Pair::Ab, Pair::aB}) {
            os << ',' << format_double(r.c[p]);
        }
        os << ',' << format_double(trace.p0) << ',' << format_double(r.sum_sq) << '\n';
    }
}

void write_surface_csv(std::ostream& os, const SurfaceMesh& mesh, const Metadata& meta) {
    write_meta(os, meta);
    os << "# pairs: " << name(mesh.pairs[0]) << ',' << name(mesh.pairs[1]) << ',' << name(mesh.pairs[2])
       << '\n';
    os << "alpha,gt,c_first,c_second,c_third\n";
    for (const SurfacePoint& p : mesh.points) {
        os << format_double(p.alpha) << ',' << format_double(p.gt);
        for (double c : p.c) os << ',' << format_double(c);
        os << '\n';
    }
}

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw Error("csv: no column '" + name + "'");
}

const std::string* CsvTable::find_meta(const std::string& key) const {
    for (const auto& kv : meta) {
        if (kv.first == key) return &kv.second;
    }
    return nullptr;
}

CsvTable read_csv(std::istream& is) {
    CsvTable t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string body = trim(line.substr(1));
            const auto colon = body.find(':');
            if (colon == std::string::npos) {
                t.meta.emplace_back(body, "");
            } else {
                t.meta.emplace_back(trim(body.substr(0, colon)), trim(body.substr(colon + 1)));
            }
            continue;
        }
        if (t.header.empty()) {
            for (const std::string& c : split(line, ',')) t.header.push_back(trim(c));
            continue;
        }
        std::vector<double> row;
        for (const std::string& cell : split(line, ',')) {
            const std::string c = trim(cell);
            double v = 0.0;
            const auto res = std::from_chars(c.data(), c.data() + c.size(), v);
            if (res.ec != std::errc{} || res.ptr != c.data() + c.size()) {
                throw Error("csv line " + std::to_string(lineno) + ": bad number '" + c + "'");
            }
            row.push_back(v);
        }
        if (row.size() != t.header.size()) {
            throw Error("csv line " + std::to_string(lineno) + ": expected " + std::to_string(t.header.size()) +
                        " fields, got " + std::to_string(row.size()));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open '" + path + "' for writing");
    f << content;
    f.close();
    if (!f) throw Error("failed writing '" + path + "'");
}

}  // namespace djcm
