#include "tightmaps/extrep.hpp"

#include <algorithm>
#include <stdexcept>

namespace tightmaps {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

static void check_range(int p, int m) {
    if (p < 2) throw std::out_of_range("tensor rep: need p >= 2");
    if (m < 1 || m > p) throw std::out_of_range("tensor rep: need 1 <= m <= p");
}

TensorRepDescriptor signature(int p, int m) {
    check_range(p, m);
    return {p, m, binomial(p, m), binomial(p, m - 1)};
}

EigenvalueMultiplicities disc_image_eigenvalues(int p, int m) {
    check_range(p, m);
    std::int64_t half = binomial(p - 1, m - 1);
    return {half, half, binomial(p + 1, m) - 2 * half};
}

std::int64_t su_target_pairing(int p, int m) {
    check_range(p, m);
    // When C(p,m) < C(p,m-1) the disc occupies the mirrored corner of the
    // target and the pairing takes the value of the dual parameter p+1-m.
    if (binomial(p, m) < binomial(p, m - 1)) m = p + 1 - m;
    return -(binomial(p + 1, m) + 1) * (binomial(p - 1, m - 1) - binomial(p, m - 1));
}

std::int64_t sostar_target_pairing(int p) {
    if (p % 4 != 3)
        throw std::domain_error("sostar_target_pairing: defined for p = 3 mod 4 only");
    int m = (p + 1) / 2;
    std::int64_t pp = binomial(p, m);
    return (2 * pp - 2) * (binomial(p - 1, m - 1) - pp + 1);
}

SpTargetVerdict sp_target_verdict(int p) {
    if (p % 4 != 1)
        throw std::domain_error("sp_target_verdict: defined for p = 1 mod 4 only");
    int m = (p + 1) / 2;
    std::int64_t v = su_target_pairing(p, m);
    SpTargetVerdict out;
    out.tight = false;
    out.trace = {
        "iota_1: sp(2p') -> su(p',p') is tight (tube type, (H2))",
        "composite into su(p',p') is not tight: su-target pairing = " + std::to_string(v),
        "a non-tight map cannot factor as two tight maps, so rho_m into sp(2p') is not tight",
    };
    return out;
}

std::int64_t brute_force_pairing(int p, int m) {
    check_range(p, m);
    if (p > 8) throw std::out_of_range("brute_force_pairing: guarded to p <= 8");
    std::int64_t N = binomial(p + 1, m);
    std::int64_t pp = binomial(p, m), qp = binomial(p, m - 1);

    // all m-subsets of {1..p+1}, as the eigenvalue of rho_m d_{p,1} Z_{1,1}
    // on e_I in units of i/2: [p in I] - [p+1 in I]
    std::vector<int> pos_evs, neg_evs; // split by sign of F^m(e_I,e_I): i_m <= p vs i_m = p+1
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i + 1;
    while (true) {
        bool has_p = std::find(idx.begin(), idx.end(), p) != idx.end();
        bool has_p1 = idx.back() == p + 1;
        int ev = (has_p ? 1 : 0) - (has_p1 ? 1 : 0);
        (has_p1 ? neg_evs : pos_evs).push_back(ev);
        // next combination
        int i = m - 1;
        while (i >= 0 && idx[i] == p + 1 - (m - 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (static_cast<std::int64_t>(pos_evs.size()) != pp ||
        static_cast<std::int64_t>(neg_evs.size()) != qp)
        throw std::logic_error("signature mismatch in wedge basis");

    // d'_{p',q'} Z_{1,1} eigenvalues in units of i/2, both placement branches
    std::vector<int> dpos, dneg;
    if (pp >= qp) {
        dpos.assign(pp - qp, 0);
        dpos.insert(dpos.end(), qp, 1);
        dneg.assign(qp, -1);
    } else {
        dpos.assign(pp, 1);
        dneg.assign(pp, -1);
        dneg.insert(dneg.end(), qp - pp, 0);
    }
    // order basis so that eigenvalue +1 entries sit last in the positive block
    // and -1 entries last in the negative block, matching d' placement
    std::sort(pos_evs.begin(), pos_evs.end());
    std::sort(neg_evs.begin(), neg_evs.end(), std::greater<int>());

    // <rho_m d Z - d' Z, Z'> with Z' = (i/N) diag(q' 1_{p'}, -p' 1_{q'})
    // and the paper-matching scale 2(N+1) Re Tr: each diagonal entry contributes
    // (i/2 d)(i/N z) = -d z / (2N).
    Rational tr(0);
    for (std::int64_t t = 0; t < pp; ++t)
        tr += Rational(-(pos_evs[t] - dpos[t]) * qp, 2 * N);
    for (std::int64_t t = 0; t < qp; ++t)
        tr += Rational(-(neg_evs[t] - dneg[t]) * (-pp), 2 * N);
    Rational val = Rational(2 * (N + 1)) * tr;
    if (!val.is_integer()) throw std::logic_error("brute-force pairing is not an integer");
    return val.num();
}

} // namespace tightmaps
