#include "vkh/polynomial.hpp"

#include <cctype>
#include <cstdlib>

#include "vkh/errors.hpp"

namespace vkh {

namespace {

std::string power(char var, int e) {
    std::string s(1, var);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

std::string term(long long coef, int qpow, int tpow) {
    std::string num, den;
    for (auto [var, e] : {std::pair{'q', qpow}, std::pair{'t', tpow}}) {
        if (e > 0) num += power(var, e);
        if (e < 0) den += power(var, -e);
    }
    std::string s;
    const long long mag = coef < 0 ? -coef : coef;
    if (coef < 0) s += '-';
    if (mag != 1 || num.empty()) s += std::to_string(mag);
    s += num;
    if (!den.empty()) s += "/" + den;
    return s;
}

std::string join(const std::string& acc, const std::string& t) {
    if (acc.empty()) return t;
    return t[0] == '-' ? acc + t : acc + "+" + t;
}

}  // namespace

std::string format_kh(const KhPolynomial& p) {
    std::string out;
    for (const auto& [ij, c] : p)
        if (c != 0) out = join(out, term(c, ij.second, ij.first));
    return out.empty() ? "0" : out;
}

std::string format_laurent(const LaurentPoly& p) {
    std::string out;
    for (const auto& [e, c] : p)
        if (c != 0) out = join(out, term(c, e, 0));
    return out.empty() ? "0" : out;
}

KhPolynomial parse_kh(std::string_view text) {
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.substr(i, 5) == "\\quad") {
            i += 4;
            continue;
        }
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}' || c == '$') continue;
        s += c;
    }
    std::size_t i = 0;
    auto fail = [&](const std::string& why) -> KhPolynomial {
        throw Error(ErrorKind::malformed_token, why + " in polynomial \"" + std::string(text) + "\"");
    };
    auto read_int = [&](long long& out) {
        const std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) {
            i = start;
            return false;
        }
        out = std::stoll(s.substr(start, i - start));
        return true;
    };
    auto read_factors = [&](int& q, int& t, int direction) {
        bool any = false;
        while (i < s.size() && (s[i] == 'q' || s[i] == 't')) {
            const char var = s[i++];
            long long e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (!read_int(e)) fail("missing exponent");
            }
            (var == 'q' ? q : t) += static_cast<int>(direction * e);
            any = true;
        }
        return any;
    };

    KhPolynomial p;
    if (s == "0") return p;
    if (s.empty()) fail("empty");
    while (i < s.size()) {
        long long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        long long coef = 1;
        const bool has_coef = i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
        if (has_coef) read_int(coef);
        int q = 0, t = 0;
        const bool has_num = read_factors(q, t, 1);
        if (!has_coef && !has_num) fail("empty term");
        if (i < s.size() && s[i] == '/') {
            ++i;
            if (!read_factors(q, t, -1)) fail("empty denominator");
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-') fail(std::string("unexpected '") + s[i] + "'");
        auto& slot = p[{t, q}];
        slot += sign * coef;
        if (slot == 0) p.erase({t, q});
    }
    return p;
}

LaurentPoly graded_euler_characteristic(const KhPolynomial& p) {
    LaurentPoly out;
    for (const auto& [ij, c] : p) {
        auto& slot = out[ij.second];
        slot += (ij.first % 2 == 0 ? 1 : -1) * c;
        if (slot == 0) out.erase(ij.second);
    }
    return out;
}

std::set<int> diagonal_support(const KhPolynomial& p) {
    std::set<int> out;
    for (const auto& [ij, c] : p)
        if (c != 0) out.insert(ij.second - 2 * ij.first);
    return out;
}

KhPolynomial mirror_flip(const KhPolynomial& p) {
    KhPolynomial out;
    for (const auto& [ij, c] : p) out[{-ij.first, -ij.second}] = c;
    return out;
}

}  // namespace vkh
