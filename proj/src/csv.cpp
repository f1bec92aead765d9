#include "softclust/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace softclust {

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

} // namespace

Dataset load_csv(const std::filesystem::path& path, bool has_header) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_csv: cannot open " + path.string());

    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    bool skipped_header = !has_header;
    std::size_t width = 0;

    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) continue;
        if (!skipped_header) {
            skipped_header = true;
            continue;
        }
        auto fields = split_fields(line);
        if (width == 0) {
            width = fields.size();
        } else if (fields.size() != width) {
            throw std::runtime_error("load_csv: ragged row at line " +
                                     std::to_string(lineno) + " (" +
                                     std::to_string(fields.size()) + " fields, expected " +
                                     std::to_string(width) + ")");
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (std::size_t col = 0; col < fields.size(); ++col) {
            double v = 0.0;
            std::size_t consumed = 0;
            try {
                v = std::stod(fields[col], &consumed);
            } catch (const std::exception&) {
                consumed = 0;
            }
            // allow trailing spaces only
            while (consumed < fields[col].size() && fields[col][consumed] == ' ') ++consumed;
            if (consumed == 0 || consumed != fields[col].size() || !std::isfinite(v)) {
                throw std::runtime_error("load_csv: bad value '" + fields[col] +
                                         "' at line " + std::to_string(lineno) +
                                         ", column " + std::to_string(col + 1));
            }
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("load_csv: no data rows in " + path.string());

    Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(width));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return Dataset(std::move(m));
}

void write_csv(const Dataset& data, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path.string());
    char buf[64];
    for (Index i = 0; i < data.n(); ++i) {
        for (Index j = 0; j < data.d(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", data.points()(i, j));
            if (j) out << ',';
            out << buf;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write_csv: write failed for " + path.string());
}

void write_labels(const std::vector<int>& labels, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_labels: cannot open " + path.string());
    for (int l : labels) out << l << '\n';
    if (!out) throw std::runtime_error("write_labels: write failed for " + path.string());
}

std::vector<int> load_labels(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_labels: cannot open " + path.string());
    std::vector<int> labels;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        labels.push_back(std::stoi(line));
    }
    return labels;
}

} // namespace softclust
