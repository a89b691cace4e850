#include "qecstab/codespec.hpp"

#include "qecstab/codes.hpp"
#include "qecstab/qchk.hpp"

#include <cctype>
#include <vector>

namespace qecstab {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

// Splits "name(arg, arg, ...)" respecting nested parens/brackets.
struct Call {
    std::string name;
    std::vector<std::string> args;
};

Call parse_call(const std::string& spec_raw) {
    const std::string spec = strip(spec_raw);
    Call c;
    const std::size_t open = spec.find('(');
    if (open == std::string::npos) {
        c.name = spec;
        return c;
    }
    if (spec.back() != ')')
        throw ValidationError("code spec '" + spec + "': missing closing ')'");
    c.name = strip(spec.substr(0, open));
    int depth = 0;
    std::string cur;
    for (std::size_t i = open + 1; i + 1 < spec.size(); ++i) {
        const char ch = spec[i];
        if (ch == '(' || ch == '[')
            ++depth;
        else if (ch == ')' || ch == ']')
            --depth;
        if (ch == ',' && depth == 0) {
            c.args.push_back(strip(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!strip(cur).empty() || !c.args.empty())
        c.args.push_back(strip(cur));
    return c;
}

std::size_t parse_count(const std::string& s, const char* what) {
    if (s.empty())
        throw ValidationError(std::string("code spec: missing ") + what);
    std::size_t v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ValidationError(std::string("code spec: bad ") + what + " '" + s + "'");
        v = v * 10 + static_cast<std::size_t>(ch - '0');
    }
    return v;
}

std::string unbracket(const std::string& s, const char* what) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ValidationError(std::string("code spec: ") + what +
                              " must be a bracketed poly matrix like [110,011;101,000]");
    return s.substr(1, s.size() - 2);
}

codes::ClassicalCode parse_classical(const std::string& spec) {
    const Call c = parse_call(spec);
    if (c.name == "rep" || c.name == "repetition") {
        if (c.args.size() != 1)
            throw ValidationError("rep(L) takes one argument");
        return codes::repetition(parse_count(c.args[0], "repetition length"));
    }
    if (c.name == "hamming74" || c.name == "hamming") {
        if (!c.args.empty())
            throw ValidationError("hamming74 takes no arguments");
        return codes::hamming_7_4();
    }
    throw ValidationError("unknown classical code '" + spec +
                          "' (expected rep(L) or hamming74)");
}

} // namespace

StabilizerCode build_code(const std::string& spec) {
    const Call c = parse_call(spec);
    auto expect_args = [&](std::size_t want) {
        if (c.args.size() != want)
            throw ValidationError("code spec '" + spec + "': expected " + std::to_string(want) +
                                  " argument(s), got " + std::to_string(c.args.size()));
    };

    if (c.name == "steane") {
        expect_args(0);
        return codes::steane();
    }
    if (c.name == "shor") {
        expect_args(0);
        return codes::shor();
    }
    if (c.name == "bitflip") {
        expect_args(0);
        return codes::bit_flip_code();
    }
    if (c.name == "phaseflip") {
        expect_args(0);
        return codes::phase_flip_code();
    }
    if (c.name == "surface") {
        expect_args(1);
        return codes::surface(parse_count(c.args[0], "surface side length"));
    }
    if (c.name == "toric") {
        expect_args(1);
        return codes::toric(parse_count(c.args[0], "toric side length"));
    }
    if (c.name == "css") {
        expect_args(2);
        return codes::css(parse_classical(c.args[0]), parse_classical(c.args[1]));
    }
    if (c.name == "hgp") {
        expect_args(2);
        return codes::hgp(parse_classical(c.args[0]), parse_classical(c.args[1]));
    }
    if (c.name == "lp") {
        expect_args(3);
        const std::size_t l = parse_count(c.args[0], "lift size");
        const auto a1 = codes::PolyMatrix::parse(unbracket(c.args[1], "a1"), l);
        const auto a2 = codes::PolyMatrix::parse(unbracket(c.args[2], "a2"), l);
        return codes::lifted_product(a1, a2);
    }
    if (c.name == "concat") {
        expect_args(2);
        const StabilizerCode outer = build_code(c.args[0]);
        const StabilizerCode inner = build_code(c.args[1]);
        return codes::concatenate(outer, inner);
    }
    if (c.name == "qchk") {
        expect_args(1);
        return StabilizerCode::validate(read_qchk_file(c.args[0]), /*allow_redundant=*/true);
    }
    if (c.args.empty() &&
        (c.name.find('/') != std::string::npos || c.name.find('.') != std::string::npos)) {
        return StabilizerCode::validate(read_qchk_file(c.name), /*allow_redundant=*/true);
    }
    throw ValidationError("unknown code spec '" + spec + "'");
}

} // namespace qecstab
