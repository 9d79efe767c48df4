#include "zmds/zeros.hpp"

#include "zmds/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace zmds {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

void check_increasing(const std::vector<double>& v) {
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!(v[k] > 0.0) || !std::isfinite(v[k]))
            throw DomainError("zero ordinate " + std::to_string(k + 1) + " is not a finite positive value");
        if (k > 0 && !(v[k - 1] < v[k]))
            throw MonotonicityError("zero ordinates are not strictly increasing", k + 1);
    }
}

}  // namespace

ZeroList::ZeroList(std::vector<double> values, std::string source_path)
    : values_(std::move(values)), source_path_(std::move(source_path)) {
    check_increasing(values_);
}

ZeroList ZeroList::prefix(std::size_t count) const {
    ZeroList out;
    out.values_.assign(values_.begin(), values_.begin() + std::min(count, values_.size()));
    out.source_path_ = source_path_;
    out.lines_.assign(lines_.begin(), lines_.begin() + std::min(count, lines_.size()));
    return out;
}

std::string_view to_string(Approach a) { return a == Approach::A1 ? "a1" : "a2"; }

Approach parse_approach(std::string_view s) {
    if (s == "a1" || s == "A1") return Approach::A1;
    if (s == "a2" || s == "A2") return Approach::A2;
    throw PreconditionError("unknown approach '" + std::string(s) + "' (expected a1 or a2)");
}

ObjectSet::ObjectSet(std::vector<double> data, std::size_t rows, std::size_t m, Approach approach)
    : data_(std::move(data)), rows_(rows), m_(m), approach_(approach) {
    if (data_.size() != rows_ * m_) throw DimensionError("object data size does not match rows * m");
}

ObjectSet ObjectSet::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw EmptyInputError("object set has no rows");
    const std::size_t m = rows.front().size();
    std::vector<double> data;
    data.reserve(rows.size() * m);
    for (const auto& r : rows) {
        if (r.size() != m) throw DimensionError("object rows differ in length");
        data.insert(data.end(), r.begin(), r.end());
    }
    return ObjectSet(std::move(data), rows.size(), m, Approach::A1);
}

ZeroList parse_zeros(std::istream& in, std::string source_path) {
    std::vector<double> values;
    std::vector<std::size_t> lines;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tok = trim(line);
        if (tok.empty() || tok.front() == '#') continue;
        double v = 0.0;
        const auto* first = tok.data();
        const auto* last = tok.data() + tok.size();
        if (*first == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || !std::isfinite(v))
            throw ParseError("not a decimal literal: '" + std::string(tok) + "'", lineno);
        if (!(v > 0.0)) throw ParseError("zero ordinate must be positive", lineno);
        if (!values.empty() && !(values.back() < v))
            throw MonotonicityError("zero ordinates are not strictly increasing", lineno);
        values.push_back(v);
        lines.push_back(lineno);
    }
    if (values.empty()) throw EmptyInputError("zero list is empty");
    ZeroList out(std::move(values), std::move(source_path));
    out.lines_ = std::move(lines);
    return out;
}

ZeroList parse_zeros(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_zeros(in);
}

ZeroList load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open zero list '" + path + "'", 0);
    return parse_zeros(in, path);
}

void serialize_zeros(const ZeroList& zeros, std::ostream& out, int digits) {
    out << std::setprecision(digits);
    for (double v : zeros.values()) out << v << '\n';
}

namespace {

void check_window(const ZeroList& zeros, std::size_t m) {
    if (m == 0) throw InvalidWindowError("window length m must be at least 1");
    if (zeros.size() < m)
        throw InvalidWindowError("zero list has " + std::to_string(zeros.size()) +
                                 " values, fewer than the window length " + std::to_string(m));
}

ObjectSet build(const ZeroList& zeros, std::size_t m, std::size_t rows, std::size_t stride,
                Approach approach) {
    std::vector<double> data;
    data.reserve(rows * m);
    const auto v = zeros.values();
    for (std::size_t i = 0; i < rows; ++i) {
        const auto start = v.begin() + static_cast<std::ptrdiff_t>(i * stride);
        data.insert(data.end(), start, start + static_cast<std::ptrdiff_t>(m));
    }
    return ObjectSet(std::move(data), rows, m, approach);
}

}  // namespace

ObjectSet window_disjoint(const ZeroList& zeros, std::size_t m, std::optional<std::size_t> limit) {
    check_window(zeros, m);
    std::size_t rows = zeros.size() / m;
    if (limit) rows = std::min(rows, *limit);
    if (rows == 0) throw InvalidWindowError("limit of 0 rows requested");
    return build(zeros, m, rows, m, Approach::A1);
}

ObjectSet window_sliding(const ZeroList& zeros, std::size_t m, std::optional<std::size_t> limit) {
    check_window(zeros, m);
    std::size_t rows = zeros.size() - m + 1;
    if (limit) rows = std::min(rows, *limit);
    if (rows == 0) throw InvalidWindowError("limit of 0 rows requested");
    return build(zeros, m, rows, 1, Approach::A2);
}

ObjectSet make_windows(const ZeroList& zeros, std::size_t m, Approach approach,
                       std::optional<std::size_t> limit) {
    return approach == Approach::A1 ? window_disjoint(zeros, m, limit)
                                    : window_sliding(zeros, m, limit);
}

}  // namespace zmds
