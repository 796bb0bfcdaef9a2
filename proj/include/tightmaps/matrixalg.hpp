#pragma once

#include <string>
#include <vector>

#include "tightmaps/algebra.hpp"
#include "tightmaps/rational.hpp"

namespace tightmaps {

using Matrix = std::vector<std::vector<GaussianRational>>;

enum class ModelKind { SU, SP, SOSTAR };

// An exact matrix tagged with its ambient model. SU carries signature (p,q)
// and is (p+q)x(p+q); SP/SOSTAR carry p and are 2p x 2p.
struct ModelElement {
    ModelKind kind;
    int p = 0;
    int q = 0;
    Matrix m;

    int dim() const { return kind == ModelKind::SU ? p + q : 2 * p; }
};

ModelElement zero_element(ModelKind kind, int p, int q = 0);

// Membership in the matrix model:
//   su(p,q):   [[A,B],[B*,C]], A* = -A, C* = -C, trace 0
//   sp(2p):    [[A,B],[B*,conj(A)]], A* = -A, B^t = B
//   so*(2p):   [[A,B],[B*,conj(A)]], A* = -A, B^t = -B
bool is_member(const ModelElement& x);

// Z_{p,q} = (i/(p+q)) diag(q 1_p, -p 1_q);  Z = (i/2) diag(1_p, -1_p) for sp/so*.
ModelElement complex_structure(ModelKind kind, int p, int q = 0);

// A general su(1,1) element [[ia, z],[conj(z), -ia]].
ModelElement su11_element(const Rational& a, const GaussianRational& z);

// Diagonal disc d_{p,q}: su(1,1) -> su(p,q). The zero block sits at the head of
// the positive block when p > q and at the tail of the negative block when p < q.
ModelElement disc_su(int p, int q, const ModelElement& x);

// Diagonal disc d_p: su(1,1) -> so*(2p), defined for odd p = 2l+1 only.
ModelElement disc_sostar(int p, const ModelElement& x);

// iota_1: sp(2p) -> su(p,p) and iota_2: so*(2p) -> su(p,p); both are the
// identity on matrices in these bases. Verifies target membership.
ModelElement include_in_su(const ModelElement& x);

ModelElement sub(const ModelElement& a, const ModelElement& b);

// Killing pairing on su(n1,n2): 2(n1+n2) Re Tr(XY). Throws if Tr(XY) is not real.
Rational killing_pairing(const ModelElement& x, const ModelElement& y);

// The Theorem-diagd test value <rho d Z - d' Z, Z'>; tight iff zero.
Rational diagd_value(const ModelElement& rho_d_Z, const ModelElement& dprime_Z,
                     const ModelElement& zprime);

// Block-diagonal placement su(l,s) + su(p-l,q-s) -> su(p,q) compatible with the
// signature form (the matrix shadow of catalog entry su4).
ModelElement block_inclusion_su(int l, int s, int p, int q, const ModelElement& x,
                                const ModelElement& y);

std::string dump(const ModelElement& x); // row-major, entries as a/b+c/d*i

} // namespace tightmaps
