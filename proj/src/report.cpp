#include "spinor/report.hpp"

#include <cmath>
#include <cstdio>

namespace spinor {

namespace {

// Decimal exponent e with 10^e <= v < 10^{e+1}, by exact power-of-ten
// comparison (log10 rounds unreliably at the boundaries).
int decimal_exponent(double v) {
    int e = 0;
    if (v >= 10.0) {
        while (v >= 10.0) {
            v /= 10.0;
            ++e;
        }
    } else if (v < 1.0) {
        while (v < 1.0) {
            v *= 10.0;
            --e;
        }
    }
    return e;
}

} // namespace

std::string format_real(double v) {
    char buf[64];
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    const double av = std::fabs(v);
    if (av != 0.0 && av >= 1e-3 && av < 1e6) {
        const int prec = 11 - decimal_exponent(av); // 12 significant digits
        std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    } else {
        std::snprintf(buf, sizeof buf, "%.11e", v);
    }
    return buf;
}

std::string format_int(uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(v));
    return buf;
}

std::string format_int(int64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
    return buf;
}

Cell num_cell(double v) { return Cell{format_real(v), false}; }
Cell int_cell(uint64_t v) { return Cell{format_int(v), false}; }
Cell str_cell(std::string s) { return Cell{std::move(s), true}; }

std::string to_csv(const Table& t) {
    std::string out;
    for (size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += t.columns[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i].text;
        }
        out += '\n';
    }
    return out;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out += c;
        }
    }
    return out;
}

} // namespace

std::string to_json(const Table& t) {
    std::string out = "{\"rows\":[";
    for (size_t r = 0; r < t.rows.size(); ++r) {
        if (r) out += ',';
        out += '{';
        for (size_t i = 0; i < t.rows[r].size(); ++i) {
            if (i) out += ',';
            out += '"';
            out += json_escape(t.columns[i]);
            out += "\":";
            const Cell& c = t.rows[r][i];
            if (c.quoted) {
                out += '"';
                out += json_escape(c.text);
                out += '"';
            } else {
                out += c.text;
            }
        }
        out += '}';
    }
    out += "]}\n";
    return out;
}

} // namespace spinor
