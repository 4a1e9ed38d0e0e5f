#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace isores::cli {

Record& Record::add(std::string key, Value v) {
    fields_.push_back({std::move(key), std::move(v)});
    return *this;
}

namespace {

std::string printf_string(const char* fmt, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, x);
    return buf;
}

std::string scientific(double x) {
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    return printf_string("%.6e", x);
}

struct TextVisitor {
    std::string operator()(const Absent&) const { return ""; }
    std::string operator()(double x) const { return fixed6(x); }
    std::string operator()(const Small& s) const { return scientific(s.value); }
    std::string operator()(long long i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
};

std::string as_text(const Value& v) { return std::visit(TextVisitor{}, v); }

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (const char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + "\"";
}

nlohmann::ordered_json number_json(double x) {
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    return x;
}

struct JsonVisitor {
    nlohmann::ordered_json operator()(const Absent&) const { return nullptr; }
    nlohmann::ordered_json operator()(double x) const { return number_json(x); }
    nlohmann::ordered_json operator()(const Small& s) const { return number_json(s.value); }
    nlohmann::ordered_json operator()(long long i) const { return i; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
};

nlohmann::ordered_json as_json(const Record& r) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& f : r.fields()) {
        j[f.key] = std::visit(JsonVisitor{}, f.value);
    }
    return j;
}

void csv_header(std::ostream& out, const Record& r) {
    const auto& fs = r.fields();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        out << (i ? "," : "") << csv_cell(fs[i].key);
    }
    out << '\n';
}

void csv_row(std::ostream& out, const Record& r) {
    const auto& fs = r.fields();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        out << (i ? "," : "") << csv_cell(as_text(fs[i].value));
    }
    out << '\n';
}

}  // namespace

std::string fixed6(double x) {
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    std::string s = printf_string("%.6f", x);
    return s == "-0.000000" ? "0.000000" : s;
}

void write_record(std::ostream& out, Format format, const Record& r) {
    switch (format) {
    case Format::json:
        out << as_json(r).dump(2) << '\n';
        return;
    case Format::csv:
        csv_header(out, r);
        csv_row(out, r);
        return;
    case Format::text: {
        std::size_t width = 0;
        for (const auto& f : r.fields()) {
            width = std::max(width, f.key.size());
        }
        for (const auto& f : r.fields()) {
            const std::string v = as_text(f.value);
            out << f.key << std::string(width - f.key.size() + 2, ' ') << (v.empty() ? "-" : v) << '\n';
        }
        return;
    }
    }
}

void write_table(std::ostream& out, Format format, const std::vector<Record>& rows) {
    if (format == Format::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            arr.push_back(as_json(r));
        }
        out << arr.dump(2) << '\n';
        return;
    }
    if (rows.empty()) {
        return;
    }
    if (format == Format::csv) {
        csv_header(out, rows.front());
        for (const auto& r : rows) {
            csv_row(out, r);
        }
        return;
    }

    const auto& keys = rows.front().fields();
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(keys.size(), 0);
    std::vector<std::string> header;
    for (std::size_t c = 0; c < keys.size(); ++c) {
        header.push_back(keys[c].key);
        width[c] = keys[c].key.size();
    }
    for (const auto& r : rows) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < r.fields().size() && c < keys.size(); ++c) {
            std::string v = as_text(r.fields()[c].value);
            if (v.empty()) {
                v = "-";
            }
            width[c] = std::max(width[c], v.size());
            line.push_back(std::move(v));
        }
        cells.push_back(std::move(line));
    }
    auto print = [&](const std::vector<std::string>& line) {
        std::string s;
        for (std::size_t c = 0; c < line.size(); ++c) {
            s += line[c];
            if (c + 1 < line.size()) {
                s += std::string(width[c] - line[c].size() + 2, ' ');
            }
        }
        out << s << '\n';
    };
    print(header);
    for (const auto& line : cells) {
        print(line);
    }
}

}  // namespace isores::cli
