#include "tightmaps/matrixalg.hpp"

#include <sstream>
#include <stdexcept>

namespace tightmaps {

namespace {

Matrix zeros(int n) { return Matrix(n, std::vector<GaussianRational>(n)); }

void require(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error(what);
}

} // namespace

ModelElement zero_element(ModelKind kind, int p, int q) {
    ModelElement e{kind, p, q, {}};
    e.m = zeros(e.dim());
    return e;
}

bool is_member(const ModelElement& x) {
    int n = x.dim();
    if (static_cast<int>(x.m.size()) != n) return false;
    for (const auto& row : x.m)
        if (static_cast<int>(row.size()) != n) return false;
    if (x.kind == ModelKind::SU) {
        int p = x.p, q = x.q;
        GaussianRational tr;
        for (int i = 0; i < n; ++i) tr = tr + x.m[i][i];
        if (!tr.is_zero()) return false;
        // A* = -A, C* = -C, lower-left = (upper-right)*
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                if (x.m[i][j] != -x.m[j][i].conj()) return false;
        for (int i = p; i < p + q; ++i)
            for (int j = p; j < p + q; ++j)
                if (x.m[i][j] != -x.m[j][i].conj()) return false;
        for (int i = 0; i < p; ++i)
            for (int j = p; j < p + q; ++j)
                if (x.m[j][i] != x.m[i][j].conj()) return false;
        return true;
    }
    int p = x.p;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            if (x.m[i][j] != -x.m[j][i].conj()) return false;                 // A* = -A
            if (x.m[p + i][p + j] != x.m[i][j].conj()) return false;          // lower-right = conj(A)
            if (x.m[p + i][j] != x.m[j][p + i].conj()) return false;          // lower-left = B*
            GaussianRational bt = x.m[j][p + i];
            if (x.kind == ModelKind::SP) {
                if (x.m[i][p + j] != bt) return false;                        // B^t = B
            } else {
                if (x.m[i][p + j] != -bt) return false;                       // B^t = -B
            }
        }
    return true;
}

ModelElement complex_structure(ModelKind kind, int p, int q) {
    if (kind == ModelKind::SU) {
        ModelElement e = zero_element(kind, p, q);
        for (int i = 0; i < p; ++i) e.m[i][i] = {Rational(0), Rational(q, p + q)};
        for (int i = p; i < p + q; ++i) e.m[i][i] = {Rational(0), Rational(-p, p + q)};
        return e;
    }
    ModelElement e = zero_element(kind, p);
    for (int i = 0; i < p; ++i) {
        e.m[i][i] = {Rational(0), Rational(1, 2)};
        e.m[p + i][p + i] = {Rational(0), Rational(-1, 2)};
    }
    return e;
}

ModelElement su11_element(const Rational& a, const GaussianRational& z) {
    ModelElement e = zero_element(ModelKind::SU, 1, 1);
    e.m[0][0] = {Rational(0), a};
    e.m[0][1] = z;
    e.m[1][0] = z.conj();
    e.m[1][1] = {Rational(0), -a};
    return e;
}

ModelElement disc_su(int p, int q, const ModelElement& x) {
    if (x.kind != ModelKind::SU || x.p != 1 || x.q != 1)
        throw std::invalid_argument("disc_su: argument must be an su(1,1) element");
    GaussianRational ia = x.m[0][0], z = x.m[0][1];
    ModelElement e = zero_element(ModelKind::SU, p, q);
    int r = std::min(p, q);
    int off = p - r; // leading zero block inside the positive part when p > q
    for (int t = 0; t < r; ++t) {
        e.m[off + t][off + t] = ia;
        e.m[off + t][p + t] = z;
        e.m[p + t][off + t] = z.conj();
        e.m[p + t][p + t] = -ia;
    }
    require(is_member(e), "disc_su image fails su membership");
    return e;
}

ModelElement disc_sostar(int p, const ModelElement& x) {
    if (p % 2 == 0 || p < 3)
        throw std::domain_error("disc_sostar: defined for odd p = 2l+1 >= 3 only");
    if (x.kind != ModelKind::SU || x.p != 1 || x.q != 1)
        throw std::invalid_argument("disc_sostar: argument must be an su(1,1) element");
    int l = (p - 1) / 2;
    GaussianRational ia = x.m[0][0], z = x.m[0][1];
    // Block sizes l,1,l | l,1,l; see the paper's display:
    //   A = diag(ia 1_l, 0, ia 1_l), B(1,3) = z 1_l, B(3,1) = -z 1_l.
    ModelElement e = zero_element(ModelKind::SOSTAR, p);
    for (int t = 0; t < l; ++t) {
        int i1 = t;           // block 1
        int i3 = l + 1 + t;   // block 3
        int i4 = p + t;       // block 4
        int i6 = p + l + 1 + t; // block 6
        e.m[i1][i1] = ia;
        e.m[i3][i3] = ia;
        e.m[i4][i4] = -ia;
        e.m[i6][i6] = -ia;
        e.m[i1][i6] = z;
        e.m[i3][i4] = -z;
        e.m[i4][i3] = -z.conj();
        e.m[i6][i1] = z.conj();
    }
    require(is_member(e), "disc_sostar image fails so* membership");
    return e;
}

ModelElement include_in_su(const ModelElement& x) {
    if (x.kind == ModelKind::SU) return x;
    ModelElement e{ModelKind::SU, x.p, x.p, x.m};
    require(is_member(e), "inclusion image fails su(p,p) membership");
    return e;
}

ModelElement sub(const ModelElement& a, const ModelElement& b) {
    if (a.kind != b.kind || a.p != b.p || a.q != b.q)
        throw std::invalid_argument("sub: model mismatch");
    ModelElement e = a;
    int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e.m[i][j] = a.m[i][j] - b.m[i][j];
    return e;
}

Rational killing_pairing(const ModelElement& x, const ModelElement& y) {
    if (x.kind != ModelKind::SU || y.kind != ModelKind::SU || x.p != y.p || x.q != y.q)
        throw std::invalid_argument("killing_pairing: both arguments must be in the same su model");
    int n = x.dim();
    GaussianRational tr;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) tr = tr + x.m[i][k] * y.m[k][i];
    if (tr.im != Rational(0))
        throw std::domain_error("killing_pairing: trace is not real");
    return Rational(2 * n) * tr.re;
}

Rational diagd_value(const ModelElement& rho_d_Z, const ModelElement& dprime_Z,
                     const ModelElement& zprime) {
    return killing_pairing(sub(rho_d_Z, dprime_Z), zprime);
}

ModelElement block_inclusion_su(int l, int s, int p, int q, const ModelElement& x,
                                const ModelElement& y) {
    if (!(l <= s && p - l <= q - s && l >= 0 && s >= 0 && p - l >= 0 && q - s >= 0))
        throw std::invalid_argument("block_inclusion_su: need l <= s and p-l <= q-s");
    if (x.kind != ModelKind::SU || x.p != l || x.q != s)
        throw std::invalid_argument("block_inclusion_su: first argument must be su(l,s)");
    if (y.kind != ModelKind::SU || y.p != p - l || y.q != q - s)
        throw std::invalid_argument("block_inclusion_su: second argument must be su(p-l,q-s)");
    ModelElement e = zero_element(ModelKind::SU, p, q);
    // x occupies positive slots [0,l) and negative slots [p, p+s);
    // y occupies positive slots [l,p) and negative slots [p+s, p+q).
    auto xi = [&](int i) { return i < l ? i : p + (i - l); };
    auto yi = [&](int i) { return i < p - l ? l + i : p + s + (i - (p - l)); };
    for (int i = 0; i < l + s; ++i)
        for (int j = 0; j < l + s; ++j) e.m[xi(i)][xi(j)] = x.m[i][j];
    for (int i = 0; i < (p - l) + (q - s); ++i)
        for (int j = 0; j < (p - l) + (q - s); ++j) e.m[yi(i)][yi(j)] = y.m[i][j];
    require(is_member(e), "block_inclusion_su image fails su(p,q) membership");
    return e;
}

std::string dump(const ModelElement& x) {
    std::ostringstream os;
    int n = x.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) os << " ";
            os << x.m[i][j].str();
        }
        os << "\n";
    }
    return os.str();
}

} // namespace tightmaps
