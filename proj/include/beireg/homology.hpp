#pragma once

#include <span>
#include <vector>

#include "beireg/field.hpp"
#include "beireg/initial_ideal.hpp"

namespace beireg {

/// Reduced Betti numbers of a simplicial complex: entry h + 1 is
/// dim H~_h, for h = -1 .. |V| - 1.
using HomologyDims = std::vector<long long>;

/// The complex on `vertices` whose faces are the subsets containing no member
/// of `nonfaces` (the Stanley-Reisner complex restricted to `vertices`).
/// Non-faces not inside `vertices` are ignored.
///
/// Uses homotopy-invariant reductions (cones, joins, link and deletion when
/// one side is contractible) and falls back to boundary-matrix ranks.
HomologyDims reduced_homology(VarSet vertices, std::span<const VarSet> nonfaces, const FieldSpec& field);

/// Boundary-matrix ranks over every face, no reductions.
HomologyDims reduced_homology_direct(VarSet vertices, std::span<const VarSet> nonfaces,
                                     const FieldSpec& field);

/// f-vector: entry k is the number of faces with k vertices (k = 0 is the empty face).
std::vector<long long> face_counts(VarSet vertices, std::span<const VarSet> nonfaces);

/// Rank over GF(p) of a sparse matrix given by columns of (row, value) pairs.
/// Values are taken mod p.
std::size_t sparse_rank(std::vector<std::vector<std::pair<int, long long>>> columns, std::uint32_t p);

}  // namespace beireg
