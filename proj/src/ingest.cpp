#include "spinor/ingest.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "spinor/errors.hpp"
#include "spinor/hecke.hpp"
#include "spinor/primes.hpp"

namespace spinor {

namespace {

constexpr const char* kMagic = "#SIEGEL-FORM";

struct Header {
    std::string label;
    std::string route;
    uint64_t prime_bound;
};

std::string field_value(const std::string& token, const char* key, int line) {
    const std::string prefix = std::string(key) + "=";
    if (token.rfind(prefix, 0) != 0)
        throw ParseError("line " + std::to_string(line) + ": expected " + prefix +
                         "..., got '" + token + "'");
    return token.substr(prefix.size());
}

Header parse_header(const std::string& line) {
    std::istringstream in(line);
    std::string magic, version, label_tok, route_tok, bound_tok;
    in >> magic >> version >> label_tok >> route_tok >> bound_tok;
    if (magic != kMagic || version != "v1")
        throw ParseError("line 1: bad header, expected '#SIEGEL-FORM v1 ...'");
    Header h;
    h.label = field_value(label_tok, "label", 1);
    h.route = field_value(route_tok, "route", 1);
    if (h.route != "traces" && h.route != "eigen")
        throw ParseError("line 1: route must be 'traces' or 'eigen'");
    const std::string bound = field_value(bound_tok, "prime_bound", 1);
    try {
        h.prime_bound = std::stoull(bound);
    } catch (const std::exception&) {
        throw ParseError("line 1: bad prime_bound '" + bound + "'");
    }
    return h;
}

double parse_double(const std::string& tok, int line) {
    double v = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(line) + ": bad number '" + tok + "'");
    return v;
}

} // namespace

EigenForm load_form(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw ParseError("line 1: empty file");
    const Header h = parse_header(line);

    std::vector<SatakeLocal> locals;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream row(line);
        std::string p_tok, v1_tok, v2_tok, extra;
        if (!(row >> p_tok)) continue; // blank line
        if (!(row >> v1_tok >> v2_tok))
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'p v1 v2'");
        if (row >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing token '" +
                             extra + "'");
        uint64_t p = 0;
        try {
            p = std::stoull(p_tok);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad prime '" +
                             p_tok + "'");
        }
        if (p > h.prime_bound)
            throw ParseError("line " + std::to_string(lineno) + ": prime " +
                             std::to_string(p) + " exceeds prime_bound");
        const double v1 = parse_double(v1_tok, lineno);
        const double v2 = parse_double(v2_tok, lineno);
        try {
            if (h.route == "traces")
                locals.push_back(from_traces(v1, v2, p));
            else
                locals.push_back(recover_local(v1, v2, p));
        } catch (const NonRamanujan& e) {
            throw NonRamanujan("line " + std::to_string(lineno) + ": " + e.what());
        } catch (const OutOfRange& e) {
            throw NonRamanujan("line " + std::to_string(lineno) + ": " + e.what());
        } catch (const ConstraintViolation& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    // Coverage: every prime <= the declared bound, exactly once.
    std::vector<uint64_t> seen;
    for (const SatakeLocal& loc : locals) seen.push_back(loc.p);
    std::sort(seen.begin(), seen.end());
    for (size_t i = 1; i < seen.size(); ++i)
        if (seen[i] == seen[i - 1])
            throw ParseError("duplicate row for p = " + std::to_string(seen[i]));
    const auto expected = primes_up_to(h.prime_bound);
    for (size_t i = 0; i < expected.size(); ++i) {
        if (i >= seen.size() || seen[i] != expected[i])
            throw MissingPrime("no row for p = " + std::to_string(expected[i]));
    }
    return EigenForm(h.label, std::move(locals), FormSource::file);
}

void save_form(const EigenForm& form, const std::filesystem::path& path,
               SaveRoute route) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write " + path.string());
    out << kMagic << " v1 label=" << form.label()
        << " route=" << (route == SaveRoute::traces ? "traces" : "eigen")
        << " prime_bound=" << form.prime_bound() << "\n";
    char buf[128];
    for (const SatakeLocal& loc : form.locals()) {
        double v1 = loc.t_a, v2 = loc.t_b;
        if (route == SaveRoute::eigenvalues) {
            const auto lams = lambda_coeffs(loc, 2);
            v1 = lams[1];
            v2 = lams[2];
        }
        std::snprintf(buf, sizeof buf, "%llu %.17g %.17g\n",
                      static_cast<unsigned long long>(loc.p), v1, v2);
        out << buf;
    }
    if (!out) throw IOError("write failed for " + path.string());
}

} // namespace spinor
