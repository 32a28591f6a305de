#include "rotkit/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace rotkit {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

long parse_int(const std::string& token, Index line_number) {
    const std::string t = trim(token);
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size())
        throw ParseError("row " + std::to_string(line_number) + ": expected an integer, got '" +
                         token + "'");
    return v;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "' for reading");
    return in;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path.string() + "' for writing");
    return out;
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

double parse_double(const std::string& token, Index line_number) {
    const std::string t = trim(token);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size())
        throw ParseError("row " + std::to_string(line_number) + ": expected a number, got '" +
                         token + "'");
    return v;
}

DiscreteMeasure load_measure(const std::filesystem::path& path, LoadReport* report) {
    std::ifstream in = open_for_read(path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("'" + path.string() + "' is empty");

    const std::vector<std::string> header = split_csv(line);
    std::vector<Index> coord_cols;
    Index weight_col = -1, label_col = -1, pair_col = -1;
    for (Index c = 0; c < static_cast<Index>(header.size()); ++c) {
        const std::string name = trim(header[static_cast<size_t>(c)]);
        if (name == "weight") {
            weight_col = c;
        } else if (name == "label") {
            label_col = c;
        } else if (name == "pair_id") {
            pair_col = c;
        } else if (name.size() > 1 && name[0] == 'x') {
            const long k = parse_int(name.substr(1), 1);
            if (k != static_cast<long>(coord_cols.size()))
                throw ParseError("coordinate columns must be named x0..x{d-1} in order; saw '" +
                                 name + "'");
            coord_cols.push_back(c);
        } else {
            throw ParseError("unknown column '" + name + "' in '" + path.string() + "'");
        }
    }
    const Index d = static_cast<Index>(coord_cols.size());
    if (d == 0) throw ParseError("'" + path.string() + "' has no coordinate columns");

    std::vector<std::vector<double>> rows;
    std::vector<double> weights;
    std::vector<int> labels, pair_ids;
    Index line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split_csv(line);
        if (fields.size() != header.size())
            throw ParseError("row " + std::to_string(line_number) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(fields.size()));
        std::vector<double> coords(static_cast<size_t>(d));
        for (Index k = 0; k < d; ++k)
            coords[static_cast<size_t>(k)] =
                parse_double(fields[static_cast<size_t>(coord_cols[static_cast<size_t>(k)])],
                             line_number);
        rows.push_back(std::move(coords));
        if (weight_col >= 0) {
            const double w = parse_double(fields[static_cast<size_t>(weight_col)], line_number);
            if (w < 0.0)
                throw ParseError("row " + std::to_string(line_number) + ": negative weight");
            weights.push_back(w);
        }
        if (label_col >= 0)
            labels.push_back(static_cast<int>(
                parse_int(fields[static_cast<size_t>(label_col)], line_number)));
        if (pair_col >= 0)
            pair_ids.push_back(static_cast<int>(
                parse_int(fields[static_cast<size_t>(pair_col)], line_number)));
    }
    const Index n = static_cast<Index>(rows.size());
    if (n == 0) throw ParseError("'" + path.string() + "' has no data rows");

    Matrix points(n, d);
    for (Index i = 0; i < n; ++i)
        for (Index k = 0; k < d; ++k)
            points(i, k) = rows[static_cast<size_t>(i)][static_cast<size_t>(k)];

    Vector w;
    double raw_sum = 1.0;
    if (weight_col >= 0) {
        w = Eigen::Map<const Vector>(weights.data(), n);
        raw_sum = w.sum();
    } else {
        w = Vector::Constant(n, 1.0 / static_cast<double>(n));
    }

    std::optional<IntVector> label_vec, pair_vec;
    if (label_col >= 0) label_vec = Eigen::Map<const IntVector>(labels.data(), n);
    if (pair_col >= 0) pair_vec = Eigen::Map<const IntVector>(pair_ids.data(), n);

    if (report) {
        report->had_weight_column = weight_col >= 0;
        report->raw_weight_sum = raw_sum;
        report->weights_renormalized = weight_col >= 0 && std::abs(raw_sum - 1.0) > 1e-12;
    }
    return DiscreteMeasure(std::move(points), std::move(w), std::move(label_vec),
                           std::move(pair_vec));
}

void save_measure(const std::filesystem::path& path, const DiscreteMeasure& measure) {
    std::ofstream out = open_for_write(path);
    const Index d = measure.dim();
    for (Index k = 0; k < d; ++k) out << (k ? ",x" : "x") << k;
    out << ",weight";
    if (measure.labels()) out << ",label";
    if (measure.pair_ids()) out << ",pair_id";
    out << "\n";
    for (Index i = 0; i < measure.size(); ++i) {
        for (Index k = 0; k < d; ++k) {
            if (k) out << ",";
            out << format_double(measure.points()(i, k));
        }
        out << "," << format_double(measure.weights()[i]);
        if (measure.labels()) out << "," << (*measure.labels())[i];
        if (measure.pair_ids()) out << "," << (*measure.pair_ids())[i];
        out << "\n";
    }
}

Matrix load_matrix(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    std::vector<std::vector<double>> rows;
    std::string line;
    Index line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split_csv(line);
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields) row.push_back(parse_double(f, line_number));
        if (!rows.empty() && rows.front().size() != row.size())
            throw ParseError("row " + std::to_string(line_number) +
                             ": inconsistent column count");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("'" + path.string() + "' has no data rows");
    Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

void save_matrix(const std::filesystem::path& path, const Matrix& m) {
    std::ofstream out = open_for_write(path);
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j) out << ",";
            out << format_double(m(i, j));
        }
        out << "\n";
    }
}

} // namespace rotkit
