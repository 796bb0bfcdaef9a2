#pragma once

#include <string>
#include <vector>

namespace tightmaps {

// The six families of irreducible Hermitian symmetric Lie algebras.
// SO2_EVEN / SO2_ODD are so(p,2) with p even resp. odd (they have different
// Cartan types, D_k vs B_k, so they are kept apart).
enum class Family { SU, SP, SOSTAR, SO2_EVEN, SO2_ODD, E6, E7 };

struct AlgebraId {
    Family family;
    // SU: signature (p,q) with p <= q after normalization.
    // SP: sp(2p).  SOSTAR: so*(2p).  SO2_*: so(p,2).  E6/E7: unused.
    int p = 0;
    int q = 0;

    friend bool operator==(const AlgebraId& a, const AlgebraId& b) {
        return a.family == b.family && a.p == b.p && a.q == b.q;
    }
    friend bool operator!=(const AlgebraId& a, const AlgebraId& b) { return !(a == b); }
};

// Grammar: su(p,q), sp(2p), so*(2p), so(p,2), e6, e7. Throws std::invalid_argument.
AlgebraId parse_algebra(const std::string& text);
std::string format_algebra(const AlgebraId& a);

// Enforce the parameter restrictions (su: 1<=p<=q; sp: p>=2; so*: p>=5; so(p,2): p>=5).
// Throws std::out_of_range naming the violated bound.
void check_params(const AlgebraId& a);

// Real rank: su(p,q) -> min(p,q); sp(2p) -> p; so*(2p) -> floor(p/2);
// so(p,2) -> 2; e6(-14) -> 2; e7(-25) -> 3.
int real_rank(const AlgebraId& a);

// Tube type: su(p,p), sp(2p), so*(2p) p even, so(p,2), e7(-25).
bool is_tube_type(const AlgebraId& a);

// Canonicalize an algebra name through the low-rank isomorphisms:
//   su(a,b) -> su(min,max); sp(2) -> su(1,1); so(3,2) -> sp(4); so(4,2) -> su(2,2);
//   so*(4) -> su(1,1) + compact (splits); so*(6) -> su(1,3); so*(8) -> so(6,2).
// Returns the list of canonical factor names ("compact" included where a factor splits off).
std::vector<std::string> canonical_factors(const std::string& name);

std::string canonical_su(int a, int b);

} // namespace tightmaps
