#include "tightmaps/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>

namespace tightmaps {

AlgebraId parse_algebra(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;

    static const std::regex su_re(R"(su\((\d+),(\d+)\))");
    static const std::regex sp_re(R"(sp\((\d+)\))");
    static const std::regex sostar_re(R"(so\*\((\d+)\))");
    static const std::regex so2_re(R"(so\((\d+),2\))");
    std::smatch m;
    if (std::regex_match(s, m, su_re)) {
        int p = std::stoi(m[1]), q = std::stoi(m[2]);
        if (p > q) std::swap(p, q);
        return {Family::SU, p, q};
    }
    if (std::regex_match(s, m, sp_re)) {
        int n = std::stoi(m[1]);
        if (n % 2 != 0) throw std::invalid_argument("sp(n): n must be even, got " + s);
        return {Family::SP, n / 2, 0};
    }
    if (std::regex_match(s, m, sostar_re)) {
        int n = std::stoi(m[1]);
        if (n % 2 != 0) throw std::invalid_argument("so*(n): n must be even, got " + s);
        return {Family::SOSTAR, n / 2, 0};
    }
    if (std::regex_match(s, m, so2_re)) {
        int p = std::stoi(m[1]);
        return {p % 2 == 0 ? Family::SO2_EVEN : Family::SO2_ODD, p, 0};
    }
    if (s == "e6") return {Family::E6, 0, 0};
    if (s == "e7") return {Family::E7, 0, 0};
    throw std::invalid_argument("unrecognized algebra name: '" + text +
                                "' (expected su(p,q), sp(2p), so*(2p), so(p,2), e6, e7)");
}

std::string format_algebra(const AlgebraId& a) {
    switch (a.family) {
        case Family::SU: return "su(" + std::to_string(a.p) + "," + std::to_string(a.q) + ")";
        case Family::SP: return "sp(" + std::to_string(2 * a.p) + ")";
        case Family::SOSTAR: return "so*(" + std::to_string(2 * a.p) + ")";
        case Family::SO2_EVEN:
        case Family::SO2_ODD: return "so(" + std::to_string(a.p) + ",2)";
        case Family::E6: return "e6";
        case Family::E7: return "e7";
    }
    throw std::logic_error("format_algebra: bad family");
}

void check_params(const AlgebraId& a) {
    switch (a.family) {
        case Family::SU:
            if (!(1 <= a.p && a.p <= a.q))
                throw std::out_of_range("su(p,q) requires 1 <= p <= q, got " + format_algebra(a));
            return;
        case Family::SP:
            if (a.p < 2)
                throw std::out_of_range("sp(2p) requires p >= 2, got " + format_algebra(a));
            return;
        case Family::SOSTAR:
            if (a.p < 5)
                throw std::out_of_range("so*(2p) requires p >= 5, got " + format_algebra(a));
            return;
        case Family::SO2_EVEN:
        case Family::SO2_ODD:
            if (a.p < 5)
                throw std::out_of_range("so(p,2) requires p >= 5, got " + format_algebra(a));
            return;
        case Family::E6:
        case Family::E7:
            return;
    }
}

int real_rank(const AlgebraId& a) {
    switch (a.family) {
        case Family::SU: return std::min(a.p, a.q);
        case Family::SP: return a.p;
        case Family::SOSTAR: return a.p / 2;
        case Family::SO2_EVEN:
        case Family::SO2_ODD: return 2;
        case Family::E6: return 2;
        case Family::E7: return 3;
    }
    throw std::logic_error("real_rank: bad family");
}

bool is_tube_type(const AlgebraId& a) {
    switch (a.family) {
        case Family::SU: return a.p == a.q;
        case Family::SP: return true;
        case Family::SOSTAR: return a.p % 2 == 0;
        case Family::SO2_EVEN:
        case Family::SO2_ODD: return true;
        case Family::E6: return false;
        case Family::E7: return true;
    }
    throw std::logic_error("is_tube_type: bad family");
}

std::string canonical_su(int a, int b) {
    if (a > b) std::swap(a, b);
    return "su(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::vector<std::string> canonical_factors(const std::string& name) {
    static const std::regex su_re(R"(su\((\d+),(\d+)\))");
    static const std::regex sp_re(R"(sp\((\d+)\))");
    static const std::regex sostar_re(R"(so\*\((\d+)\))");
    static const std::regex so2_re(R"(so\((\d+),2\))");
    std::smatch m;
    if (std::regex_match(name, m, su_re))
        return {canonical_su(std::stoi(m[1]), std::stoi(m[2]))};
    if (std::regex_match(name, m, sp_re)) {
        int p = std::stoi(m[1]) / 2;
        if (p == 1) return {"su(1,1)"};
        return {"sp(" + std::to_string(2 * p) + ")"};
    }
    if (std::regex_match(name, m, sostar_re)) {
        int p = std::stoi(m[1]) / 2;
        if (p == 2) return {"su(1,1)", "compact"}; // so*(4) = su(1,1) + su(2)
        if (p == 3) return {"su(1,3)"};
        if (p == 4) return {"so(6,2)"}; // triality
        return {name};
    }
    if (std::regex_match(name, m, so2_re)) {
        int p = std::stoi(m[1]);
        if (p == 3) return {"sp(4)"};
        if (p == 4) return {"su(2,2)"};
        return {name};
    }
    return {name};
}

} // namespace tightmaps
