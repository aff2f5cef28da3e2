#pragma once

#include "xtrop/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace xtrop {

/// Square weight matrix for the assignment problem; nullopt marks a
/// forbidden edge.
struct WeightGrid {
    std::size_t n = 0;
    std::vector<std::optional<Rational>> weights;  // row-major, n * n

    const std::optional<Rational>& at(std::size_t i, std::size_t j) const { return weights[i * n + j]; }
};

/// Result of a maximum-weight perfect assignment together with the set of
/// edges that occur in at least one optimal assignment.
struct AssignmentAnalysis {
    std::size_t n = 0;
    std::vector<std::size_t> row_to_col;
    Rational total;
    /// The optimum is attained by exactly one assignment.
    bool unique = true;
    /// optimal_edge[i * n + j]: edge (i, j) lies on some optimal assignment.
    std::vector<bool> optimal_edge;

    bool on_some_optimum(std::size_t i, std::size_t j) const { return optimal_edge[i * n + j]; }
};

/**
 * Solves max sum_i w(i, sigma(i)) over permutations avoiding forbidden edges.
 * Returns nullopt when no perfect assignment exists.
 *
 * Weights are scaled to integers by their common denominator. The Hungarian
 * method runs on int64 when the scaled magnitudes leave enough headroom and on
 * GMP integers otherwise. Its final potentials are an optimal dual, so every
 * optimal assignment uses only tight edges; an edge of the tight graph is on
 * some optimum iff it is matched or closes an alternating cycle, i.e. its
 * endpoints share a strongly connected component of the residual digraph.
 */
std::optional<AssignmentAnalysis> solve_assignment(const WeightGrid& grid);

}  // namespace xtrop
