#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tightmaps/rootsys.hpp"

namespace tightmaps {

struct ValidationReport {
    bool ok = false;
    std::string condition; // "membership", "(i)", "(ii)" or "(iii)" when not ok
    std::string detail;    // witnessing pair / explanation
};

// Check the three Pi-system conditions:
//   (i)  no difference of two members is a root,
//   (ii) linear independence (exact rank over the rationals),
//   (iii) at most one noncompact root per connected component.
ValidationReport validate(const RootSystem& rs, const std::vector<Root>& delta);

// Lambda(Delta): all ambient roots that are integer combinations of delta.
std::vector<Root> subsystem(const RootSystem& rs, const std::vector<Root>& delta);

// Connected components of delta under nonzero inner product (indices into delta).
std::vector<std::vector<int>> components(const RootSystem& rs, const std::vector<Root>& delta);

struct FactorDescriptor {
    std::string cartan_type;  // e.g. "A3", "C4", "D5", "E6"
    std::string name;         // canonical Hermitian name, or "compact"
    int rank_r = 0;           // real rank of the Hermitian form (0 for compact)
    Root gamma;               // component highest root, ambient coordinates
    std::optional<Root> noncompact_root;
};

// Split delta into components and name each one's Hermitian real form from the
// Cartan type and the position of the unique noncompact root. Low-rank
// isomorphisms are applied so the names are canonical. Throws std::runtime_error
// ("unrecognized cominuscule position") if the noncompact node is not at a
// cominuscule position of the component diagram.
std::vector<FactorDescriptor> identify(const RootSystem& rs, const std::vector<Root>& delta);

} // namespace tightmaps
