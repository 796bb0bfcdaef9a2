#include "tightmaps/rootsys.hpp"

#include <sstream>
#include <stdexcept>

namespace tightmaps {

Rational RootSystem::inner(const Root& a, const Root& b) const {
    if (static_cast<int>(a.size()) != rank || static_cast<int>(b.size()) != rank)
        throw std::invalid_argument("inner: root dimension does not match rank");
    Rational s(0);
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank; ++j) {
            if (b[j] == 0) continue;
            s += gram[i][j] * Rational(a[i]) * Rational(b[j]);
        }
    }
    return s;
}

bool RootSystem::is_noncompact(const Root& a) const {
    if (!contains(a)) throw std::invalid_argument("is_noncompact: not a root: " + format_root(a));
    return a[noncompact_index] != 0;
}

namespace {

std::vector<std::vector<Rational>> gram_from(const std::vector<int>& norms,
                                             const std::vector<std::pair<int, int>>& edges) {
    int n = static_cast<int>(norms.size());
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) g[i][i] = Rational(norms[i]);
    for (auto [i, j] : edges) {
        Rational v(-std::max(norms[i], norms[j]), 2);
        g[i][j] = v;
        g[j][i] = v;
    }
    return g;
}

// Leading principal minors by exact elimination; all must be positive.
void assert_positive_definite(const std::vector<std::vector<Rational>>& g) {
    auto m = g;
    int n = static_cast<int>(g.size());
    Rational det(1);
    for (int c = 0; c < n; ++c) {
        if (!(m[c][c] > Rational(0)))
            throw std::logic_error("Gram matrix not positive definite");
        det *= m[c][c];
        for (int i = c + 1; i < n; ++i) {
            Rational f = m[i][c] / m[c][c];
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    if (!(det > Rational(0))) throw std::logic_error("Gram determinant not positive");
}

// Generate all roots by saturating root strings from the simple roots.
std::set<Root> gen_roots(const std::vector<std::vector<Rational>>& g) {
    int n = static_cast<int>(g.size());
    auto inner = [&](const Root& a, const Root& b) {
        Rational s(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (a[i] != 0 && b[j] != 0) s += g[i][j] * Rational(a[i]) * Rational(b[j]);
        return s;
    };
    std::vector<Root> simple;
    for (int i = 0; i < n; ++i) {
        Root e(n, 0);
        e[i] = 1;
        simple.push_back(e);
    }
    std::set<Root> pos(simple.begin(), simple.end());
    std::set<Root> frontier = pos;
    while (!frontier.empty()) {
        std::set<Root> fresh;
        for (const Root& b : frontier) {
            for (int i = 0; i < n; ++i) {
                // q = number of times alpha_i can be subtracted staying a positive root
                int q = 0;
                Root cur = b;
                while (true) {
                    cur[i] -= 1;
                    if (pos.count(cur)) ++q;
                    else break;
                }
                Rational cart = Rational(2) * inner(b, simple[i]) / g[i][i];
                if (!cart.is_integer()) throw std::logic_error("non-integral Cartan integer");
                long long p = q - cart.num();
                if (p >= 1) {
                    Root c = b;
                    c[i] += 1;
                    if (!pos.count(c)) fresh.insert(c);
                }
            }
        }
        for (const Root& r : fresh) pos.insert(r);
        frontier = std::move(fresh);
    }
    std::set<Root> all = pos;
    for (const Root& r : pos) {
        Root neg(r);
        for (int& x : neg) x = -x;
        all.insert(neg);
    }
    return all;
}

std::size_t expected_count(const AlgebraId& a) {
    switch (a.family) {
        case Family::SU: { int n = a.p + a.q - 1; return std::size_t(n) * (n + 1); }
        case Family::SP: return 2u * a.p * a.p;                     // C_p
        case Family::SOSTAR: return 2u * a.p * (a.p - 1);           // D_p
        case Family::SO2_EVEN: { int k = (a.p + 2) / 2; return 2u * k * (k - 1); } // D_k
        case Family::SO2_ODD: { int k = (a.p + 1) / 2; return 2u * k * k; }        // B_k
        case Family::E6: return 72;
        case Family::E7: return 126;
    }
    throw std::logic_error("expected_count: bad family");
}

} // namespace

RootSystem build(const AlgebraId& algebra) {
    check_params(algebra);
    std::vector<int> norms;
    std::vector<std::pair<int, int>> edges;
    int noncompact = 0;
    Root expect_gamma;

    switch (algebra.family) {
        case Family::SU: {
            int p = algebra.p, q = algebra.q, n = p + q - 1;
            norms.assign(n, 1);
            // chain order alpha_{q+1},..,alpha_{q+p-1},alpha_1,..,alpha_q (0-based labels)
            std::vector<int> order;
            for (int i = q; i < p + q - 1; ++i) order.push_back(i);
            for (int i = 0; i < q; ++i) order.push_back(i);
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(order[i], order[i + 1]);
            noncompact = 0;
            expect_gamma.assign(n, 1);
            break;
        }
        case Family::SP: {
            int p = algebra.p;
            norms.assign(p, 1);
            norms[0] = 2; // alpha_1 is the long root at the double-bond end
            for (int i = 0; i + 1 < p; ++i) edges.emplace_back(i, i + 1);
            noncompact = 0;
            expect_gamma.assign(p, 2);
            expect_gamma[0] = 1;
            break;
        }
        case Family::SOSTAR: {
            int p = algebra.p;
            norms.assign(p, 1);
            // literal figure: chain alpha_1..alpha_{p-1}, alpha_p attached to alpha_2
            for (int i = 0; i + 2 < p; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(1, p - 1);
            noncompact = p - 1;
            expect_gamma.assign(p, 2);
            expect_gamma[0] = expect_gamma[p - 2] = expect_gamma[p - 1] = 1;
            break;
        }
        case Family::SO2_EVEN: {
            int k = (algebra.p + 2) / 2; // D_k
            norms.assign(k, 1);
            for (int i = 0; i + 2 < k; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(k - 3, k - 1);
            noncompact = 0;
            expect_gamma.assign(k, 2);
            expect_gamma[0] = expect_gamma[k - 2] = expect_gamma[k - 1] = 1;
            break;
        }
        case Family::SO2_ODD: {
            int k = (algebra.p + 1) / 2; // B_k, alpha_k short
            norms.assign(k, 2);
            norms[k - 1] = 1;
            for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
            noncompact = 0;
            expect_gamma.assign(k, 2);
            expect_gamma[0] = 1;
            break;
        }
        case Family::E6: {
            norms.assign(6, 1);
            edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}};
            noncompact = 0;
            expect_gamma = {1, 2, 3, 2, 1, 2};
            break;
        }
        case Family::E7: {
            norms.assign(7, 1);
            edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}};
            noncompact = 0;
            expect_gamma = {1, 2, 3, 4, 3, 2, 2};
            break;
        }
    }

    RootSystem rs;
    rs.algebra = algebra;
    rs.rank = static_cast<int>(norms.size());
    rs.gram = gram_from(norms, edges);
    rs.edges = edges;
    rs.noncompact_index = noncompact;
    assert_positive_definite(rs.gram);
    rs.roots = gen_roots(rs.gram);
    if (rs.roots.size() != expected_count(algebra))
        throw std::logic_error("root count mismatch for " + format_algebra(algebra));

    // Highest root: nonnegative coordinates, no simple addition stays a root.
    std::vector<Root> hits;
    for (const Root& r : rs.roots) {
        bool nonneg = true;
        for (int c : r) nonneg = nonneg && c >= 0;
        if (!nonneg) continue;
        bool top = true;
        for (int i = 0; i < rs.rank && top; ++i) {
            Root c = r;
            c[i] += 1;
            if (rs.roots.count(c)) top = false;
        }
        if (top) hits.push_back(r);
    }
    if (hits.size() != 1) throw std::logic_error("highest root not unique");
    rs.highest = hits[0];
    if (rs.highest != expect_gamma)
        throw std::logic_error("highest root does not match the closed form for " +
                               format_algebra(algebra));
    return rs;
}

std::string cartan_type(const AlgebraId& a) {
    switch (a.family) {
        case Family::SU: return "A" + std::to_string(a.p + a.q - 1);
        case Family::SP: return "C" + std::to_string(a.p);
        case Family::SOSTAR: return "D" + std::to_string(a.p);
        case Family::SO2_EVEN: return "D" + std::to_string((a.p + 2) / 2);
        case Family::SO2_ODD: return "B" + std::to_string((a.p + 1) / 2);
        case Family::E6: return "E6";
        case Family::E7: return "E7";
    }
    throw std::logic_error("cartan_type: bad family");
}

Root simple_root(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank) throw std::out_of_range("simple_root index");
    Root r(rs.rank, 0);
    r[i - 1] = 1;
    return r;
}

std::string format_root(const Root& r) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) os << ",";
        os << r[i];
    }
    os << "]";
    return os.str();
}

Root parse_root(const std::string& text, int rank) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("root literal must look like [1,0,-1]: " + text);
    Root out;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty coefficient in root literal: " + text);
        out.push_back(std::stoi(tok));
    }
    if (static_cast<int>(out.size()) != rank)
        throw std::invalid_argument("root literal has " + std::to_string(out.size()) +
                                    " coefficients, ambient rank is " + std::to_string(rank));
    return out;
}

} // namespace tightmaps
