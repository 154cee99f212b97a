#include "panel_csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <string_view>
#include <vector>

namespace fpdea::cli {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.pop_back();
    std::size_t at = 0;
    while (at < s.size() && (s[at] == ' ' || s[at] == '\t')) ++at;
    return s.substr(at);
}

bool parse_double(const std::string& raw, double& out) {
    const std::string s = trim(raw);
    if (s.empty()) return false;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

// Counts a run of name<k> fields with k = 1,2,3,... starting at `at`.
std::size_t count_indexed(const std::vector<std::string>& fields, std::size_t at,
                          char name) {
    std::size_t k = 0;
    while (at + k < fields.size() &&
           trim(fields[at + k]) == name + std::to_string(k + 1))
        ++k;
    return k;
}

}  // namespace

DmuPanel load_panel_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw CsvError("line 1: empty file, expected a header");

    const auto header = split_fields(line);
    if (header.empty() || trim(header[0]) != "dmu")
        throw CsvError("line 1: header must start with dmu");
    const std::size_t m = count_indexed(header, 1, 'x');
    const std::size_t s = count_indexed(header, 1 + m, 'y');
    if (m == 0 || s == 0 || 1 + m + s != header.size())
        throw CsvError("line 1: header must be dmu,x1..xM,y1..yS");

    std::vector<std::string> labels;
    std::vector<double> values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 1 + m + s)
            throw CsvError("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(1 + m + s) + " fields, got " +
                           std::to_string(fields.size()));
        const std::string label = trim(fields[0]);
        if (label.empty())
            throw CsvError("line " + std::to_string(line_no) + ": empty dmu label");
        labels.push_back(label);
        for (std::size_t f = 1; f < fields.size(); ++f) {
            double v = 0.0;
            if (!parse_double(fields[f], v))
                throw CsvError("line " + std::to_string(line_no) + ": bad number '" +
                               trim(fields[f]) + "' in column " + trim(header[f]));
            values.push_back(v);
        }
    }
    if (labels.empty()) throw CsvError("line 1: no data rows");

    DmuPanel panel(labels.size(), m, s);
    panel.labels = labels;
    for (std::size_t n = 0; n < labels.size(); ++n) {
        for (std::size_t j = 0; j < m; ++j) panel.input(n, j) = values[n * (m + s) + j];
        for (std::size_t j = 0; j < s; ++j)
            panel.output(n, j) = values[n * (m + s) + m + j];
    }
    try {
        panel.validate();
    } catch (const InvalidPanel& e) {
        throw CsvError(std::string("panel: ") + e.what());
    }
    return panel;
}

DmuPanel load_panel_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CsvError("cannot open " + path);
    return load_panel_csv(in);
}

}  // namespace fpdea::cli
