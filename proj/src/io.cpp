#include "polyjac/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace polyjac {

namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& what) {
    throw FormatError(name + ":" + std::to_string(line) + ": " + what);
}

// next content line with comments stripped; false at EOF
bool next_line(std::istream& in, std::string& out, int& line_no) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        if (raw.find_first_not_of(" \t\r") != std::string::npos) {
            out = raw;
            return true;
        }
    }
    return false;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

PolynomialSystem read_system(std::istream& in, const std::string& name) {
    int line_no = 0;
    std::string line;

    if (!next_line(in, line, line_no)) fail(name, line_no, "missing header line 'n m k d'");
    PolynomialSystem sys;
    {
        std::istringstream hs(line);
        if (!(hs >> sys.n >> sys.m >> sys.k >> sys.d)) {
            fail(name, line_no, "header must be four integers 'n m k d'");
        }
        std::string extra;
        if (hs >> extra) fail(name, line_no, "trailing data after header");
    }
    if (sys.n < 1) fail(name, line_no, "n must be at least 1");
    if (sys.m < 1) fail(name, line_no, "m must be at least 1");
    if (sys.k < 1 || sys.k > sys.n) fail(name, line_no, "need 1 <= k <= n");
    if (sys.d < 1 || sys.d > 255) fail(name, line_no, "need 1 <= d <= 255");

    sys.terms.resize(sys.monomial_count());
    for (std::size_t s = 0; s < sys.terms.size(); ++s) {
        if (!next_line(in, line, line_no)) {
            fail(name, line_no, "expected " + std::to_string(sys.terms.size()) +
                                    " monomial lines, got " + std::to_string(s));
        }
        std::istringstream ls(line);
        Term& t = sys.terms[s];
        if (!(ls >> t.coeff.re >> t.coeff.im)) fail(name, line_no, "expected 're im' coefficient");
        if (!finite(t.coeff)) fail(name, line_no, "non-finite coefficient");
        if (t.coeff.is_zero()) fail(name, line_no, "zero coefficient");

        t.support.positions.resize(sys.k);
        t.support.exponents.resize(sys.k);
        for (int j = 0; j < sys.k; ++j) {
            int pos = 0, exp = 0;
            if (!(ls >> pos >> exp)) {
                fail(name, line_no, "expected " + std::to_string(sys.k) + " 'pos exp' pairs");
            }
            if (pos < 1 || pos > sys.n) fail(name, line_no, "position out of range [1,n]");
            if (exp < 1 || exp > sys.d) fail(name, line_no, "exponent out of range [1,d]");
            t.support.positions[j] = pos - 1;  // file is 1-based
            t.support.exponents[j] = exp;
            if (j > 0 && t.support.positions[j] <= t.support.positions[j - 1]) {
                fail(name, line_no, "positions not strictly increasing");
            }
        }
        std::string extra;
        if (ls >> extra) fail(name, line_no, "trailing data after monomial");
    }
    if (next_line(in, line, line_no)) fail(name, line_no, "trailing data after last monomial");

    ValidationReport report = validate_system(sys);
    if (!report.ok()) fail(name, line_no, report.violations.front().describe());
    return sys;
}

PolynomialSystem read_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError(path + ": cannot open for reading");
    return read_system(in, path);
}

void write_system(const PolynomialSystem& sys, std::ostream& out) {
    out << sys.n << ' ' << sys.m << ' ' << sys.k << ' ' << sys.d << '\n';
    for (const Term& t : sys.terms) {
        out << format_double(t.coeff.re) << ' ' << format_double(t.coeff.im);
        for (int j = 0; j < sys.k; ++j) {
            out << ' ' << t.support.positions[j] + 1 << ' ' << t.support.exponents[j];
        }
        out << '\n';
    }
}

void write_system(const PolynomialSystem& sys, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError(path + ": cannot open for writing");
    write_system(sys, out);
    out.flush();
    if (!out) throw FormatError(path + ": write failed");
}

}  // namespace polyjac
