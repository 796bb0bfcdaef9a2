#pragma once

#include <set>
#include <utility>
#include <vector>

#include "tightmaps/algebra.hpp"
#include "tightmaps/rational.hpp"

namespace tightmaps {

// A root, stored as integer coefficients over the ambient simple roots
// alpha_1..alpha_n (never over an orthonormal basis).
using Root = std::vector<int>;

struct RootSystem {
    AlgebraId algebra;
    int rank = 0;
    // Symmetric Gram matrix of the simple roots; shortest roots have norm^2 = 1,
    // long roots in B/C families norm^2 = 2.
    std::vector<std::vector<Rational>> gram;
    // Dynkin adjacency (0-based node pairs).
    std::vector<std::pair<int, int>> edges;
    // 0-based index of the distinguished noncompact simple root.
    int noncompact_index = 0;
    std::set<Root> roots;
    Root highest;

    Rational inner(const Root& a, const Root& b) const;
    bool contains(const Root& a) const { return roots.count(a) != 0; }
    // True iff the coefficient on noncompact_index is nonzero. Throws if a is not a root.
    bool is_noncompact(const Root& a) const;
};

// Construct the root system with the paper's labeling per family.
RootSystem build(const AlgebraId& algebra);

// Cartan type tag for display, e.g. "A4", "C3", "D5", "B4", "E7".
std::string cartan_type(const AlgebraId& algebra);

// Helpers for writing roots: simple root alpha_i (1-based) and a formatter.
Root simple_root(const RootSystem& rs, int i);
std::string format_root(const Root& r);
Root parse_root(const std::string& text, int rank); // "[1,2,2,1,1]"

} // namespace tightmaps
