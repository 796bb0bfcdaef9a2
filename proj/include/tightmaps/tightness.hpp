#pragma once

#include <string>
#include <vector>

#include "tightmaps/pisystem.hpp"

namespace tightmaps {

struct HermitianData {
    AlgebraId algebra;
    int rank;
    bool tube;
};

HermitianData hermitian_data(const AlgebraId& a);

enum class Verdict3 { Tight, NotTight, Inconclusive };

std::string to_string(Verdict3 v);

// Certificate for the regular-subalgebra criterion: tight iff sum(c_i r_i) = r.
struct TightnessCertificate {
    std::vector<Rational> ratios; // c_i = <gamma,gamma>/<gamma_i,gamma_i>
    std::vector<int> ranks;       // r_i
    int ambient_rank = 0;         // r
    Rational weighted_sum;        // sum c_i r_i
    bool tight = false;
};

// c_i for one factor highest root (ambient coordinates).
Rational curvature_ratio(const RootSystem& rs, const Root& gamma_i);

// Evaluate the criterion for the factors returned by identify. Checks the
// structural facts c_i >= 1 and sum <= r exactly (throws std::logic_error on
// violation — they hold for every valid input).
TightnessCertificate regular_verdict(const RootSystem& rs,
                                     const std::vector<FactorDescriptor>& factors);

// One-directional rank criterion: Tight when sum(r_i) = r, else Inconclusive.
Verdict3 rank_rule(const std::vector<int>& factor_ranks, int ambient_rank);

// Conjunction semantics for compositions / products of maps.
Verdict3 chain_rule(const std::vector<Verdict3>& links);
Verdict3 product_rule(const std::vector<Verdict3>& factors);

// Norm of the bounded Kaehler class, as the integer coefficient of pi.
int toledo_norm(const HermitianData& data);

// Certificate JSON: {ratios: [[num,den],...], ranks, ambient_rank,
// weighted_sum: [num,den], verdict}.
std::string certificate_json(const TightnessCertificate& c);

} // namespace tightmaps
