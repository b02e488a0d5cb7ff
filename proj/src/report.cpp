#include "cigarlab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cigarlab {

void CheckReport::finalize() {
    std::sort(checks.begin(), checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    pass = true;
    for (const CheckResult& c : checks) pass = pass && c.pass;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace

std::string to_json(const CheckReport& report) {
    std::ostringstream os;
    os << "{\n  \"suite\": \"" << escape(report.suite) << "\",\n  \"checks\": [";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const CheckResult& c = report.checks[i];
        os << (i ? ",\n    " : "\n    ");
        os << "{\"id\": \"" << escape(c.id) << "\", "
           << "\"description\": \"" << escape(c.description) << "\", "
           << "\"samples\": " << c.samples << ", "
           << "\"max_abs_residual\": " << format_double(c.max_abs_residual) << ", "
           << "\"max_rel_residual\": " << format_double(c.max_rel_residual) << ", "
           << "\"tolerance\": " << format_double(c.tolerance) << ", "
           << "\"pass\": " << (c.pass ? "true" : "false") << "}";
    }
    os << (report.checks.empty() ? "]" : "\n  ]") << ",\n";
    os << "  \"pass\": " << (report.pass ? "true" : "false") << ",\n";
    os << "  \"seed\": " << report.seed << ",\n";
    os << "  \"version\": \"" << escape(report.version) << "\",\n";
    os << "  \"tol_scale\": " << format_double(report.tol_scale) << "\n";
    os << "}\n";
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_grid_csv(const GridField& field, const std::string& path) {
    std::ostringstream os;
    os << "xi,x,value\n";
    const HalfStripGrid& g = field.grid;
    for (int j = 0; j <= g.nx; ++j)
        for (int i = 0; i <= g.nxi; ++i)
            os << format_double(g.xi(i)) << ',' << format_double(g.x(j)) << ','
               << format_double(field.at(i, j)) << '\n';
    write_text_file(path, os.str());
}

int CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

CsvTable read_csv(const std::string& path) {
    const std::string text = read_text_file(path);
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        if (first) {
            table.header = cells;
            first = false;
        } else {
            table.rows.push_back(cells);
        }
    }
    if (first) throw IoError("empty CSV: " + path);
    return table;
}

}  // namespace cigarlab
