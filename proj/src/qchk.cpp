#include "qecstab/qchk.hpp"

#include <fstream>
#include <sstream>

namespace qecstab {

void write_qchk(std::ostream& out, const CheckMatrix& check) {
    out << "QCHK v1 n=" << check.n << " r=" << check.r << "\n";
    std::string line(2 * check.n, '0');
    for (std::size_t i = 0; i < check.r; ++i) {
        for (std::size_t q = 0; q < check.n; ++q) {
            line[q] = check.hx.get(i, q) ? '1' : '0';
            line[check.n + q] = check.hz.get(i, q) ? '1' : '0';
        }
        out << line << "\n";
    }
}

void write_qchk_file(const std::string& path, const CheckMatrix& check) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ValidationError("cannot open '" + path + "' for writing");
    write_qchk(out, check);
    if (!out)
        throw ValidationError("write failed for '" + path + "'");
}

namespace {

std::size_t parse_field(const std::string& tok, const char* key) {
    const std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0 || tok.size() == prefix.size())
        throw ValidationError("QCHK: malformed header field '" + tok + "'");
    std::size_t value = 0;
    for (std::size_t i = prefix.size(); i < tok.size(); ++i) {
        const char c = tok[i];
        if (c < '0' || c > '9')
            throw ValidationError("QCHK: malformed header field '" + tok + "'");
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
}

} // namespace

CheckMatrix read_qchk(std::istream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw ValidationError("QCHK: missing header line");
    std::istringstream hs(header);
    std::string magic, version, ntok, rtok, extra;
    hs >> magic >> version >> ntok >> rtok;
    if (magic != "QCHK" || version != "v1" || (hs >> extra))
        throw ValidationError("QCHK: bad header '" + header + "'");
    const std::size_t n = parse_field(ntok, "n");
    const std::size_t r = parse_field(rtok, "r");
    if (n == 0)
        throw ValidationError("QCHK: n must be positive");

    gf2::BitMatrix hx(r, n), hz(r, n);
    std::string line;
    for (std::size_t i = 0; i < r; ++i) {
        if (!std::getline(in, line))
            throw ValidationError("QCHK: expected " + std::to_string(r) + " rows, got " +
                                  std::to_string(i));
        if (line.size() != 2 * n)
            throw ValidationError("QCHK: row " + std::to_string(i) + " has " +
                                  std::to_string(line.size()) + " characters, expected " +
                                  std::to_string(2 * n));
        for (std::size_t q = 0; q < 2 * n; ++q) {
            const char c = line[q];
            if (c != '0' && c != '1')
                throw ValidationError("QCHK: row " + std::to_string(i) +
                                      " contains a character other than 0/1");
            if (c == '1') {
                if (q < n)
                    hx.set(i, q, true);
                else
                    hz.set(i, q - n, true);
            }
        }
    }
    if (std::getline(in, line) && !line.empty())
        throw ValidationError("QCHK: trailing content after row " + std::to_string(r));
    return CheckMatrix(std::move(hx), std::move(hz));
}

CheckMatrix read_qchk_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open '" + path + "' for reading");
    return read_qchk(in);
}

} // namespace qecstab
