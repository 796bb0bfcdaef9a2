#include "tightmaps/classify.hpp"

#include <stdexcept>

#include "json.hpp"

namespace tightmaps {

MapDescriptor MapDescriptor::identity(AlgebraId a) {
    MapDescriptor d;
    d.kind = Kind::Identity;
    d.algebra = a;
    return d;
}
MapDescriptor MapDescriptor::regular(AlgebraId ambient, std::vector<Root> delta) {
    MapDescriptor d;
    d.kind = Kind::RegularInclusion;
    d.algebra = ambient;
    d.delta = std::move(delta);
    return d;
}
MapDescriptor MapDescriptor::diagonal_disc(AlgebraId target) {
    MapDescriptor d;
    d.kind = Kind::DiagonalDisc;
    d.algebra = target;
    return d;
}
MapDescriptor MapDescriptor::disc_inclusion(int iota, int p) {
    if (iota != 1 && iota != 2) throw std::invalid_argument("disc_inclusion: iota must be 1 or 2");
    MapDescriptor d;
    d.kind = Kind::DiscInclusion;
    d.iota = iota;
    d.p = p;
    return d;
}
MapDescriptor MapDescriptor::tensor(int p, int m, std::string target) {
    MapDescriptor d;
    d.kind = Kind::TensorRep;
    d.p = p;
    d.m = m;
    d.target = std::move(target);
    return d;
}
MapDescriptor MapDescriptor::spin(int p, std::string target) {
    MapDescriptor d;
    d.kind = Kind::SpinRep;
    d.p = p;
    d.target = std::move(target);
    return d;
}
MapDescriptor MapDescriptor::composition(std::vector<MapDescriptor> parts) {
    MapDescriptor d;
    d.kind = Kind::Composition;
    d.parts = std::move(parts);
    return d;
}
MapDescriptor MapDescriptor::product(std::vector<MapDescriptor> parts) {
    MapDescriptor d;
    d.kind = Kind::Product;
    d.parts = std::move(parts);
    return d;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Tight: return "Tight";
        case Status::NotTight: return "NotTight";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

SpinInfo spin_descriptor(int p) {
    if (p < 5) throw std::out_of_range("spin_descriptor: need p >= 5");
    SpinInfo info;
    if (p % 2 == 0) {
        info.p_prime = std::int64_t(1) << (p / 2 - 1);
        info.representations = 2;
    } else {
        info.p_prime = std::int64_t(1) << ((p - 1) / 2);
        info.representations = 1;
    }
    std::string n = std::to_string(2 * info.p_prime);
    info.targets.push_back("su(" + std::to_string(info.p_prime) + "," +
                           std::to_string(info.p_prime) + ")");
    int r = p % 8;
    if (r == 1 || r == 2 || r == 3) info.targets.push_back("sp(" + n + ")");
    if (r == 5 || r == 6 || r == 7) info.targets.push_back("so*(" + n + ")");
    return info;
}

namespace {

Verdict make(Status s, std::vector<TraceStep> trace) { return {s, std::move(trace)}; }

Verdict classify_disc_inclusion(const MapDescriptor& d) {
    if (d.iota == 1) {
        return make(Status::Tight,
                    {{"R4", "tube-type (H2) criterion",
                      "iota_1: sp(" + std::to_string(2 * d.p) + ") -> su(p,p); both tube type"}});
    }
    if (d.p % 2 == 0) {
        return make(Status::Tight,
                    {{"R4", "tube-type (H2) criterion",
                      "iota_2 with even p = " + std::to_string(d.p) + "; both tube type"}});
    }
    // odd p: diagonal-disc matrix test
    ModelElement z11 = complex_structure(ModelKind::SU, 1, 1);
    ModelElement lhs = include_in_su(disc_sostar(d.p, z11));
    ModelElement rhs = disc_su(d.p, d.p, z11);
    ModelElement zp = complex_structure(ModelKind::SU, d.p, d.p);
    Rational v = diagd_value(lhs, rhs, zp);
    Status s = (v == Rational(0)) ? Status::Tight : Status::NotTight;
    return make(s, {{"R6", "diagonal-disc trace test",
                     "<iota_2 d_p Z - d_{p,p} Z, Z_{p,p}> = " + v.str()}});
}

Verdict classify_tensor(const MapDescriptor& d) {
    if (d.target == "su") {
        std::int64_t v = su_target_pairing(d.p, d.m);
        Status s = (v == 0) ? Status::Tight : Status::NotTight;
        return make(s, {{"R8", "tensor-representation pairing formula (su target)",
                         "value = " + std::to_string(v)}});
    }
    if (d.target == "so*") {
        if (d.m != (d.p + 1) / 2 || d.p % 2 == 0)
            throw std::invalid_argument("tensor so* target: need odd p with m = (p+1)/2");
        if (d.p % 4 == 3) {
            std::int64_t v = sostar_target_pairing(d.p);
            Status s = (v == 0) ? Status::Tight : Status::NotTight;
            return make(s, {{"R8", "tensor-representation pairing formula (so* target)",
                             "value = " + std::to_string(v)}});
        }
        // p' even: the same factorization argument as the sp target
        std::int64_t v = su_target_pairing(d.p, d.m);
        return make(Status::NotTight,
                    {{"R4", "tube-type (H2) criterion", "iota_2 with even p' is tight"},
                     {"R8", "tensor-representation pairing formula (su target)",
                      "composite value = " + std::to_string(v) + " != 0"},
                     {"R2", "composition lemma",
                      "a non-tight map cannot factor as two tight maps"}});
    }
    if (d.target == "sp") {
        SpTargetVerdict v = sp_target_verdict(d.p);
        std::vector<TraceStep> trace = {
            {"R4", "tube-type (H2) criterion", v.trace[0]},
            {"R8", "tensor-representation pairing formula (su target)", v.trace[1]},
            {"R2", "composition lemma", v.trace[2]},
        };
        return make(Status::NotTight, std::move(trace));
    }
    throw std::invalid_argument("tensor target must be su, sp or so*");
}

} // namespace

Verdict classify(const MapDescriptor& map) {
    switch (map.kind) {
        case MapDescriptor::Kind::Identity:
            return make(Status::Tight, {{"R2", "composition lemma", "identity map (empty chain)"}});
        case MapDescriptor::Kind::Composition: {
            std::vector<TraceStep> trace;
            Status out = Status::Tight;
            for (const auto& part : map.parts) {
                Verdict v = classify(part);
                trace.insert(trace.end(), v.trace.begin(), v.trace.end());
                if (v.status == Status::NotTight) out = Status::NotTight;
                else if (v.status == Status::Unknown && out != Status::NotTight)
                    out = Status::Unknown;
            }
            trace.push_back({"R2", "composition lemma",
                             "conjunction over " + std::to_string(map.parts.size()) + " links"});
            return make(out, std::move(trace));
        }
        case MapDescriptor::Kind::Product: {
            std::vector<TraceStep> trace;
            Status out = Status::Tight;
            for (const auto& part : map.parts) {
                Verdict v = classify(part);
                trace.insert(trace.end(), v.trace.begin(), v.trace.end());
                if (v.status == Status::NotTight) out = Status::NotTight;
                else if (v.status == Status::Unknown && out != Status::NotTight)
                    out = Status::Unknown;
            }
            trace.push_back({"R1", "product lemma",
                             "conjunction over " + std::to_string(map.parts.size()) + " factors"});
            return make(out, std::move(trace));
        }
        case MapDescriptor::Kind::RegularInclusion: {
            RootSystem rs = build(map.algebra);
            ValidationReport vr = validate(rs, map.delta);
            if (!vr.ok)
                throw std::invalid_argument("regular inclusion: Pi-system invalid, condition " +
                                            vr.condition + ": " + vr.detail);
            TightnessCertificate cert = regular_verdict(rs, identify(rs, map.delta));
            Status s = cert.tight ? Status::Tight : Status::NotTight;
            return make(s, {{"R5", "regular-subalgebra curvature criterion",
                             "sum c_i r_i = " + cert.weighted_sum.str() +
                                 ", r = " + std::to_string(cert.ambient_rank)}});
        }
        case MapDescriptor::Kind::DiagonalDisc:
            return make(Status::Tight,
                        {{"R4", "diagonal polydisc embedding",
                          "diagonal disc into " + format_algebra(map.algebra) + " is tight"}});
        case MapDescriptor::Kind::DiscInclusion:
            return classify_disc_inclusion(map);
        case MapDescriptor::Kind::TensorRep:
            return classify_tensor(map);
        case MapDescriptor::Kind::SpinRep: {
            SpinInfo info = spin_descriptor(map.p);
            return make(Status::Tight,
                        {{"R4", "tube-type (H2) criterion",
                          "spin representation of so(" + std::to_string(map.p) + ",2), p' = " +
                              std::to_string(info.p_prime) +
                              "; domain and target are tube type and the map satisfies (H2)"}});
        }
    }
    throw std::logic_error("classify: bad descriptor kind");
}

std::string verdict_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["status"] = to_string(v.status);
    j["trace"] = nlohmann::ordered_json::array();
    for (const auto& t : v.trace)
        j["trace"].push_back({{"rule", t.rule}, {"citation", t.citation}, {"values", t.values}});
    return j.dump();
}

} // namespace tightmaps
