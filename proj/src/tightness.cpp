#include "tightmaps/tightness.hpp"

#include <stdexcept>

#include "json.hpp"

namespace tightmaps {

HermitianData hermitian_data(const AlgebraId& a) {
    return {a, real_rank(a), is_tube_type(a)};
}

std::string to_string(Verdict3 v) {
    switch (v) {
        case Verdict3::Tight: return "Tight";
        case Verdict3::NotTight: return "NotTight";
        case Verdict3::Inconclusive: return "Inconclusive";
    }
    return "?";
}

Rational curvature_ratio(const RootSystem& rs, const Root& gamma_i) {
    if (!rs.contains(gamma_i))
        throw std::invalid_argument("curvature_ratio: gamma_i is not a root");
    return rs.inner(rs.highest, rs.highest) / rs.inner(gamma_i, gamma_i);
}

TightnessCertificate regular_verdict(const RootSystem& rs,
                                     const std::vector<FactorDescriptor>& factors) {
    TightnessCertificate cert;
    cert.ambient_rank = real_rank(rs.algebra);
    cert.weighted_sum = Rational(0);
    for (const auto& f : factors) {
        if (f.name == "compact") continue; // contributes nothing
        Rational c = curvature_ratio(rs, f.gamma);
        if (c < Rational(1)) throw std::logic_error("curvature ratio below 1");
        cert.ratios.push_back(c);
        cert.ranks.push_back(f.rank_r);
        cert.weighted_sum += c * Rational(f.rank_r);
    }
    if (cert.weighted_sum > Rational(cert.ambient_rank))
        throw std::logic_error("weighted sum exceeds ambient rank");
    cert.tight = (cert.weighted_sum == Rational(cert.ambient_rank));
    return cert;
}

Verdict3 rank_rule(const std::vector<int>& factor_ranks, int ambient_rank) {
    int s = 0;
    for (int r : factor_ranks) s += r;
    return s == ambient_rank ? Verdict3::Tight : Verdict3::Inconclusive;
}

static Verdict3 conjunction(const std::vector<Verdict3>& vs) {
    // empty = identity map = tight
    Verdict3 out = Verdict3::Tight;
    for (Verdict3 v : vs) {
        if (v == Verdict3::NotTight) return Verdict3::NotTight;
        if (v == Verdict3::Inconclusive) out = Verdict3::Inconclusive;
    }
    return out;
}

Verdict3 chain_rule(const std::vector<Verdict3>& links) { return conjunction(links); }
Verdict3 product_rule(const std::vector<Verdict3>& factors) { return conjunction(factors); }

int toledo_norm(const HermitianData& data) { return data.rank; }

std::string certificate_json(const TightnessCertificate& c) {
    nlohmann::ordered_json j;
    j["ratios"] = nlohmann::ordered_json::array();
    for (const Rational& r : c.ratios) j["ratios"].push_back({r.num(), r.den()});
    j["ranks"] = c.ranks;
    j["ambient_rank"] = c.ambient_rank;
    j["weighted_sum"] = {c.weighted_sum.num(), c.weighted_sum.den()};
    j["verdict"] = c.tight ? "Tight" : "NotTight";
    return j.dump();
}

} // namespace tightmaps
