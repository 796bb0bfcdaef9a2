#pragma once

#include <string>
#include <vector>

#include "tightmaps/catalog.hpp"
#include "tightmaps/extrep.hpp"
#include "tightmaps/matrixalg.hpp"

namespace tightmaps {

// Composable description of a holomorphic map between Hermitian symmetric spaces.
struct MapDescriptor {
    enum class Kind {
        Identity,          // algebra
        RegularInclusion,  // ambient = algebra, delta = Pi-system
        DiagonalDisc,      // algebra = target (disc into the maximal polydisc)
        DiscInclusion,     // iota (1 or 2), p
        TensorRep,         // p, m, target in {"su","sp","so*"}
        SpinRep,           // p, target in {"su","sp","so*"}
        Composition,       // parts, applied left to right
        Product            // parts
    };
    Kind kind = Kind::Identity;
    AlgebraId algebra{};
    std::vector<Root> delta;
    int iota = 0;
    int p = 0;
    int m = 0;
    std::string target;
    std::vector<MapDescriptor> parts;

    static MapDescriptor identity(AlgebraId a);
    static MapDescriptor regular(AlgebraId ambient, std::vector<Root> delta);
    static MapDescriptor diagonal_disc(AlgebraId target);
    static MapDescriptor disc_inclusion(int iota, int p);
    static MapDescriptor tensor(int p, int m, std::string target);
    static MapDescriptor spin(int p, std::string target);
    static MapDescriptor composition(std::vector<MapDescriptor> parts);
    static MapDescriptor product(std::vector<MapDescriptor> parts);
};

enum class Status { Tight, NotTight, Unknown };

std::string to_string(Status s);

struct TraceStep {
    std::string rule;     // R1..R8
    std::string citation; // which result justifies the step
    std::string values;   // intermediate numbers, human-readable
};

struct Verdict {
    Status status = Status::Unknown;
    std::vector<TraceStep> trace;
};

// Evaluate the rule set (R1/R2 structural decomposition first, then R5 for
// regular inclusions, R4 for tube-(H2) entries, R8 formulas, R6 matrix test).
Verdict classify(const MapDescriptor& map);

// Spin representation data: p' = 2^(p/2-1) (p even; two representations) or
// 2^((p-1)/2) (p odd); targets su(p',p') always, plus sp(2p') for p = 1,2,3 (8)
// and so*(2p') for p = 5,6,7 (8).
struct SpinInfo {
    std::int64_t p_prime = 0;
    int representations = 1;
    std::vector<std::string> targets;
};
SpinInfo spin_descriptor(int p); // p >= 5

std::string verdict_json(const Verdict& v);

} // namespace tightmaps
