#pragma once

// Text and JSON forms of partitions, labels, decompositions and reports.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "glperm/branching.hpp"
#include "glperm/qpoly.hpp"
#include "glperm/stability.hpp"

namespace glperm::io {

using json = nlohmann::ordered_json;

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_space() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip_space();
        return i_ >= s_.size();
    }
    bool accept(std::string_view tok) {
        skip_space();
        if (s_.substr(i_, tok.size()) == tok) {
            i_ += tok.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }
    bool peek_digit() {
        skip_space();
        return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
    }
    int integer() {
        if (!peek_digit()) fail("expected a number");
        long v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + (s_[i_++] - '0');
            if (v > std::numeric_limits<int>::max()) fail("number too large");
        }
        return static_cast<int>(v);
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("parse error at offset " + std::to_string(i_) + " in \"" + std::string(s_) + "\": " + what);
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

inline Partition partition(Cursor& c) {
    const bool round = c.accept("(");
    if (!round) c.expect("[");
    const char* close = round ? ")" : "]";
    std::vector<int> rows;
    if (!c.accept(close)) {
        do rows.push_back(c.integer());
        while (c.accept(","));
        c.expect(close);
    }
    try {
        return Partition(std::move(rows));
    } catch (const std::invalid_argument& e) {
        c.fail(e.what());
    }
}

}  // namespace detail

/// "(3,2,1)", "[3,2,1]" or "()".
inline Partition parse_partition(std::string_view text) {
    detail::Cursor c(text);
    Partition p = detail::partition(c);
    if (!c.done()) c.fail("trailing characters");
    return p;
}

/// Items separated by ';'. "ι:(2,1)" or "iota:(2,1)" sets the iota partition;
/// "d:(1)" or "deg d:(1)" places a partition on a degree-d cuspidal other than
/// iota, and a trailing "xk" repeats it on k distinct ones. The empty string
/// is the empty label. Non-iota entries become NAMED keys numbered per degree
/// in order of appearance: the k-th degree-d entry of two parsed labels
/// denotes the same cuspidal.
inline LabelFunction parse_label(std::string_view text) {
    std::map<int, int> used;
    LabelFunction f;
    bool seen_iota = false;
    detail::Cursor c(text);
    if (c.done()) return f;
    do {
        if (c.accept("\xCE\xB9") || c.accept("iota")) {
            if (seen_iota) c.fail("iota given twice");
            seen_iota = true;
            c.expect(":");
            f.set(CuspidalKey::iota(), detail::partition(c));
            continue;
        }
        c.accept("deg");
        const int d = c.integer();
        if (d < 1) c.fail("degree must be positive");
        c.accept("anon");
        c.expect(":");
        const Partition p = detail::partition(c);
        int count = 1;
        if (c.accept("x") || c.accept("*")) count = c.integer();
        if (p.empty()) continue;
        for (int i = 0; i < count; ++i) f.set(CuspidalKey::named(d, used[d]++), p);
    } while (c.accept(";"));
    if (!c.done()) c.fail("trailing characters");
    return f;
}

inline LabelShape parse_shape(std::string_view text) { return parse_label(text).shape(); }

inline std::string format_partition(const Partition& p) { return p.to_string(); }

/// Exact integers: JSON numbers while they are exactly representable as
/// doubles, decimal strings beyond.
inline json integer_json(const BigInt& v) {
    static const BigInt limit = BigInt(1) << 53;
    if (v >= -limit && v <= limit) return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

inline json to_json(const Partition& p) { return json(p.rows()); }

inline json to_json(const LabelShape& s) {
    json others = json::array();
    for (const auto& [d, parts] : s.others) {
        std::size_t i = 0;
        while (i < parts.size()) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            others.push_back({{"degree", d}, {"partition", to_json(parts[i])}, {"count", j - i}});
            i = j;
        }
    }
    return {{"iota", to_json(s.iota)}, {"others", std::move(others)}};
}

inline LabelShape shape_from_json(const json& j) {
    LabelShape s;
    s.iota = Partition(j.at("iota").get<std::vector<int>>());
    for (const auto& o : j.value("others", json::array())) {
        const int d = o.at("degree").get<int>();
        const Partition p(o.at("partition").get<std::vector<int>>());
        const int count = o.value("count", 1);
        for (int i = 0; i < count; ++i) s.add(d, p);
    }
    return s;
}

inline json to_json(const QPolynomial& p) {
    json coeffs = json::object();
    for (const auto& [e, c] : p.coeffs()) coeffs[std::to_string(e)] = to_string(c);
    return {{"coeffs", std::move(coeffs)}};
}

inline json to_json(const Decomposition& d) {
    json entries = json::array();
    for (const auto& e : d.entries)
        entries.push_back({{"shape", to_json(e.shape)},
                           {"label", e.shape.to_string()},
                           {"mult", integer_json(e.multiplicity)},
                           {"class_size", integer_json(e.class_size)},
                           {"degree", e.degree.str()}});
    return {{"n", d.n},
            {"m", d.m},
            {"q", d.q},
            {"entries", std::move(entries)},
            {"checks", {{"sum_sq", integer_json(d.sum_squares())}, {"dim", d.dimension().str()}}}};
}

inline json to_json(const StabilityReport& r) {
    json per_n = json::array();
    for (const auto& d : r.per_n) per_n.push_back(to_json(d));
    return {{"m", r.m},
            {"q", r.q},
            {"n_max", r.n_max},
            {"observed_stability_degree", r.observed_degree},
            {"bound", 3 * r.m},
            {"bound_satisfied", r.bound_satisfied},
            {"decompositions", std::move(per_n)}};
}

/// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += csv_field(fields[i]);
    }
    return line + "\r\n";
}

inline std::string to_csv(const Decomposition& d) {
    std::string out = csv_row({"label", "mult", "class_size", "degree"});
    for (const auto& e : d.entries)
        out += csv_row({e.shape.to_string(), e.multiplicity.str(), e.class_size.str(), e.degree.str()});
    return out;
}

/// Rows are stable shapes, columns are n, cells are multiplicities.
inline std::string to_csv(const StabilityReport& r) {
    std::vector<LabelShape> shapes;
    for (const auto& d : r.per_n)
        for (const auto& e : d.entries) shapes.push_back(e.shape);
    std::sort(shapes.begin(), shapes.end());
    shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
    std::vector<std::string> header{"label", "class_size"};
    for (const auto& d : r.per_n) header.push_back("n=" + std::to_string(d.n));
    std::string out = csv_row(header);
    for (const auto& s : shapes) {
        std::vector<std::string> row{s.to_string(), class_size(s, r.q).str()};
        for (const auto& d : r.per_n) row.push_back(d.multiplicity(s).str());
        out += csv_row(row);
    }
    return out;
}

/// Plain text table with left-aligned columns.
inline std::string format_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    auto display_width = [](const std::string& s) {
        std::size_t w = 0;
        for (unsigned char ch : s)
            if ((ch & 0xC0) != 0x80) ++w;
        return w;
    };
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], display_width(r[i]));
        }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - display_width(r[i]) + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

inline std::string to_table(const Decomposition& d) {
    std::vector<std::vector<std::string>> rows{{"label", "mult", "class_size", "degree"}};
    for (const auto& e : d.entries)
        rows.push_back({e.shape.to_string(), e.multiplicity.str(), e.class_size.str(), e.degree.str()});
    return format_table(rows);
}

inline std::string to_table(const StabilityReport& r) {
    std::vector<LabelShape> shapes;
    for (const auto& d : r.per_n)
        for (const auto& e : d.entries) shapes.push_back(e.shape);
    std::sort(shapes.begin(), shapes.end());
    shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
    std::vector<std::string> header{"label"};
    for (const auto& d : r.per_n) header.push_back("n=" + std::to_string(d.n));
    std::vector<std::vector<std::string>> rows{header};
    for (const auto& s : shapes) {
        std::vector<std::string> row{s.to_string()};
        for (const auto& d : r.per_n) {
            const BigInt c = d.multiplicity(s);
            row.push_back(c == 0 ? "." : c.str());
        }
        rows.push_back(std::move(row));
    }
    return format_table(rows) + "observed stability degree " + std::to_string(r.observed_degree) + " (bound " +
           std::to_string(3 * r.m) + (r.bound_satisfied ? ", satisfied)\n" : ", VIOLATED)\n");
}

}  // namespace glperm::io
