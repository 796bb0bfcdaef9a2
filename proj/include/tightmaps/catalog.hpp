#pragma once

#include <map>
#include <string>
#include <vector>

#include "tightmaps/tightness.hpp"

namespace tightmaps {

// One concrete maximal-regular-subalgebra instance: the entry id, the ambient,
// the entry parameters, the generating Pi-system (with any documented index
// correction applied), the originally printed form where it differs, the
// claimed simple Hermitian factors (canonical names) and the expected verdict.
struct CatalogInstance {
    std::string entry_id;
    AlgebraId ambient;
    std::map<std::string, int> params;
    std::vector<Root> delta;
    std::vector<Root> printed; // empty when identical to delta
    std::vector<std::string> claimed;
    bool expected_tight = false;
};

// Entry ids available for a family (su1..su5, so1..so3, sp1..sp2,
// soj1..soj5, sou1..sou6, e6a..e6e, e1..e7).
std::vector<std::string> entry_ids(Family family);

// All instances of all entries for one concrete ambient algebra.
std::vector<CatalogInstance> maximal_entries(const AlgebraId& ambient);

// A single instance. Throws std::invalid_argument for an unknown entry id and
// std::out_of_range (naming the constraint) for inadmissible parameters.
CatalogInstance instantiate(const AlgebraId& ambient, const std::string& entry_id,
                            const std::map<std::string, int>& params);

struct Discrepancy {
    std::string entry;
    AlgebraId example_ambient;
    std::map<std::string, int> example_params;
    std::vector<Root> printed;
    std::vector<Root> corrected;
    std::vector<std::string> identified;
    int instances = 0; // how many sweep instances carried this correction
};

struct CatalogReport {
    int instances_checked = 0;
    std::vector<std::string> failures; // must be empty: validate/identify/verdict mismatches
    std::vector<Discrepancy> discrepancies;
};

struct SweepBounds {
    int su_pq_max = 10;    // all su(p,q) with p+q <= this
    int sostar_max = 9;    // so*(2p), 5 <= p <= this
    int sp_max = 8;        // sp(2p), 2 <= p <= this
    int so2_max = 13;      // so(p,2), 5 <= p <= this (both parities)
};

// Sweep every entry: check validate + identify + verdict against the claims,
// check that genuinely different printed forms fail, and collect the
// corrections as a discrepancy report (one row per entry id).
CatalogReport verify_catalog(const SweepBounds& bounds = {});

std::string report_json(const CatalogReport& r);

} // namespace tightmaps
