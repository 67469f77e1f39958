#include "cepd/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace cepd {

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& what) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

// Scans sign? digits [. digits] [e sign? digits]; returns chars consumed
// (0 when the text does not start with a number). Rejects inf/nan by
// construction.
std::size_t scan_number(const std::string& s, std::size_t pos) {
    std::size_t p = pos;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) ++p;
    std::size_t digits = 0;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p, ++digits;
    if (p < s.size() && s[p] == '.') {
        ++p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p, ++digits;
    }
    if (digits == 0) return 0;
    if (p < s.size() && (s[p] == 'e' || s[p] == 'E')) {
        std::size_t q = p + 1;
        if (q < s.size() && (s[q] == '+' || s[q] == '-')) ++q;
        std::size_t exp_digits = 0;
        while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q, ++exp_digits;
        if (exp_digits > 0) p = q;
    }
    return p - pos;
}

double to_double(const std::string& text, std::size_t line, std::size_t col) {
    double v = std::strtod(text.c_str(), nullptr);
    if (!std::isfinite(v))
        throw Error(ErrorKind::NonFiniteEntry, "entry overflows a double at line " +
                                                   std::to_string(line) + ", column " +
                                                   std::to_string(col));
    return v;
}

// Complex literal grammar: [sign] i | [sign] num [i] | [sign] num sign (num? i).
cx parse_complex(const std::string& token, std::size_t line, std::size_t col) {
    std::size_t pos = 0;
    auto at_imag_unit = [&](std::size_t p) { return p < token.size() && token[p] == 'i'; };

    double sign1 = 1.0;
    std::size_t first_start = pos;
    if (pos < token.size() && (token[pos] == '+' || token[pos] == '-')) {
        if (token[pos] == '-') sign1 = -1.0;
    }
    std::size_t len1 = scan_number(token, pos);
    if (len1 == 0) {
        // bare imaginary unit, optionally signed
        std::size_t p = pos;
        if (p < token.size() && (token[p] == '+' || token[p] == '-')) ++p;
        if (at_imag_unit(p) && p + 1 == token.size()) return cx(0.0, sign1);
        parse_fail(line, col, "malformed complex literal '" + token + "'");
    }
    double first = to_double(token.substr(first_start, len1), line, col);
    pos += len1;

    if (pos == token.size()) return cx(first, 0.0); // pure real
    if (at_imag_unit(pos) && pos + 1 == token.size()) return cx(0.0, first); // pure imaginary

    // a+bi / a-bi / a+i / a-i
    if (token[pos] != '+' && token[pos] != '-')
        parse_fail(line, col, "malformed complex literal '" + token + "'");
    double sign2 = token[pos] == '-' ? -1.0 : 1.0;
    std::size_t second_start = pos;
    std::size_t len2 = scan_number(token, pos);
    if (len2 == 0) {
        if (at_imag_unit(pos + 1) && pos + 2 == token.size()) return cx(first, sign2);
        parse_fail(line, col, "malformed complex literal '" + token + "'");
    }
    double second = to_double(token.substr(second_start, len2), line, col);
    pos += len2;
    if (!at_imag_unit(pos) || pos + 1 != token.size())
        parse_fail(line, col, "malformed complex literal '" + token + "'");
    return cx(first, second);
}

Matrix parse_text(const std::string& source) {
    std::vector<std::vector<cx>> rows;
    std::istringstream stream(source);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<cx> row;
        std::size_t pos = 0;
        while (pos < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[pos]))) {
                ++pos;
                continue;
            }
            std::size_t start = pos;
            while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            row.push_back(parse_complex(line.substr(start, pos - start), line_no, start + 1));
        }
        if (row.empty()) continue; // blank line
        if (!rows.empty() && row.size() != rows.front().size())
            throw Error(ErrorKind::DimensionMismatch,
                        "row " + std::to_string(line_no) + " has " + std::to_string(row.size()) +
                            " entries, expected " + std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) parse_fail(1, 1, "no matrix rows found");
    std::vector<cx> entries;
    entries.reserve(rows.size() * rows.front().size());
    for (const auto& row : rows) entries.insert(entries.end(), row.begin(), row.end());
    return Matrix(rows.size(), rows.front().size(), std::move(entries));
}

Matrix parse_json(const std::string& source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(source);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") || !doc.contains("data"))
        throw Error(ErrorKind::ParseError, "expected object with rows, cols, data");
    if (!doc["rows"].is_number_unsigned() || !doc["cols"].is_number_unsigned() ||
        !doc["data"].is_array())
        throw Error(ErrorKind::ParseError, "rows/cols must be non-negative integers, data an array");
    std::size_t rows = doc["rows"].get<std::size_t>();
    std::size_t cols = doc["cols"].get<std::size_t>();
    if (rows == 0 || cols == 0)
        throw Error(ErrorKind::ParseError, "rows and cols must be positive");
    const auto& data = doc["data"];
    if (data.size() != rows * cols)
        throw Error(ErrorKind::DimensionMismatch, "data length does not equal rows*cols");
    std::vector<cx> entries;
    entries.reserve(data.size());
    for (const auto& item : data) {
        if (!item.is_object() || !item.contains("re") || !item.contains("im") ||
            !item["re"].is_number() || !item["im"].is_number())
            throw Error(ErrorKind::ParseError, "data entries must be objects with numeric re, im");
        entries.emplace_back(item["re"].get<double>(), item["im"].get<double>());
    }
    return Matrix(rows, cols, std::move(entries));
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

Matrix parse_matrix(const std::string& source, MatrixFormat format) {
    return format == MatrixFormat::Json ? parse_json(source) : parse_text(source);
}

std::string format_matrix(const Matrix& m, MatrixFormat format) {
    if (format == MatrixFormat::Json) {
        nlohmann::ordered_json doc;
        doc["rows"] = m.rows();
        doc["cols"] = m.cols();
        nlohmann::ordered_json data = nlohmann::ordered_json::array();
        for (const cx& e : m.entries())
            data.push_back({{"re", e.real()}, {"im", e.imag()}});
        doc["data"] = std::move(data);
        return doc.dump(2) + "\n";
    }
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ' ';
            const cx e = m(i, j);
            if (e.imag() == 0.0 && !std::signbit(e.imag())) {
                out += fmt_double(e.real());
            } else {
                out += fmt_double(e.real());
                if (!std::signbit(e.imag())) out += '+';
                out += fmt_double(e.imag());
                out += 'i';
            }
        }
        out += '\n';
    }
    return out;
}

} // namespace cepd
