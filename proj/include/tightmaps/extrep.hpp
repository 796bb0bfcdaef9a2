#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tightmaps/rational.hpp"

namespace tightmaps {

std::int64_t binomial(int n, int k);

// Skewsymmetric tensor representation rho_m of su(p,1) on the m-th exterior
// power; the extended form has signature (C(p,m), C(p,m-1)).
struct TensorRepDescriptor {
    int p = 0;
    int m = 0;
    std::int64_t p_prime = 0; // C(p,m)
    std::int64_t q_prime = 0; // C(p,m-1)
};

TensorRepDescriptor signature(int p, int m); // throws std::out_of_range

struct EigenvalueMultiplicities {
    std::int64_t plus = 0;  // eigenvalue +i/2
    std::int64_t minus = 0; // eigenvalue -i/2
    std::int64_t zero = 0;
};

// Eigenvalue multiset of rho_m d_{p,1} Z_{1,1} on the subset basis:
// +-i/2 each with multiplicity C(p-1,m-1), zero with the rest.
EigenvalueMultiplicities disc_image_eigenvalues(int p, int m);

// Closed form -(C(p+1,m)+1)(C(p-1,m-1)-C(p,m-1)), evaluated at the dual
// parameter p+1-m when C(p,m) < C(p,m-1); zero iff m in {1,p}.
// The associated verdict is NotTight iff nonzero.
std::int64_t su_target_pairing(int p, int m);

// Closed form (2p'-2)(C(p-1,m-1)-p'+1) with m=(p+1)/2, for p = 3 mod 4.
// Tight iff zero (only p=3). Throws std::domain_error on wrong residue.
std::int64_t sostar_target_pairing(int p);

// p = 1 mod 4, m=(p+1)/2: the factorization argument. Always NotTight; the
// trace records the three ingredients.
struct SpTargetVerdict {
    bool tight = false;
    std::vector<std::string> trace;
};
SpTargetVerdict sp_target_verdict(int p);

// Explicit wedge-basis oracle for the su-target pairing; must agree with
// su_target_pairing. Guarded to p <= 8.
std::int64_t brute_force_pairing(int p, int m);

} // namespace tightmaps
