#include "xtrop/assignment.hpp"

#include <cstdint>
#include <limits>

namespace xtrop {

namespace {

// Integer costs, 1-based as in the classic potential formulation.
template <typename W>
struct CostGrid {
    std::size_t n;
    std::vector<W> cost;  // (n + 1) * (n + 1), row/col 0 unused
    std::vector<bool> allowed;

    std::size_t idx(std::size_t i, std::size_t j) const { return i * (n + 1) + j; }
};

template <typename W>
struct HungarianResult {
    std::vector<W> u, v;
    std::vector<std::size_t> col_owner;  // col_owner[j] = row matched to column j (1-based)
};

// Minimum-cost perfect assignment with forbidden edges. Returns false when
// Hall's condition fails for the rows processed so far.
template <typename W>
bool hungarian(const CostGrid<W>& g, HungarianResult<W>& out) {
    const std::size_t n = g.n;
    std::vector<W> u(n + 1, W(0)), v(n + 1, W(0)), minv(n + 1, W(0));
    std::vector<bool> has_minv(n + 1), used(n + 1);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::fill(has_minv.begin(), has_minv.end(), false);
        std::fill(used.begin(), used.end(), false);
        do {
            used[j0] = true;
            const std::size_t i0 = p[j0];
            bool has_delta = false;
            W delta(0);
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                if (g.allowed[g.idx(i0, j)]) {
                    W cur = g.cost[g.idx(i0, j)] - u[i0] - v[j];
                    if (!has_minv[j] || cur < minv[j]) {
                        minv[j] = cur;
                        has_minv[j] = true;
                        way[j] = j0;
                    }
                }
                if (has_minv[j] && (!has_delta || minv[j] < delta)) {
                    delta = minv[j];
                    has_delta = true;
                    j1 = j;
                }
            }
            if (!has_delta) return false;
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else if (has_minv[j]) {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    out.u = std::move(u);
    out.v = std::move(v);
    out.col_owner = std::move(p);
    return true;
}

// Kosaraju on an adjacency list; returns component ids.
std::vector<std::size_t> strongly_connected(const std::vector<std::vector<std::size_t>>& adj) {
    const std::size_t count = adj.size();
    std::vector<std::vector<std::size_t>> radj(count);
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b : adj[a]) radj[b].push_back(a);
    }

    std::vector<std::size_t> order;
    order.reserve(count);
    std::vector<bool> seen(count, false);
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t s = 0; s < count; ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        stack.emplace_back(s, 0);
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            if (next < adj[node].size()) {
                std::size_t to = adj[node][next++];
                if (!seen[to]) {
                    seen[to] = true;
                    stack.emplace_back(to, 0);
                }
            } else {
                order.push_back(node);
                stack.pop_back();
            }
        }
    }

    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> comp(count, unset);
    std::size_t next_id = 0;
    std::vector<std::size_t> work;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] != unset) continue;
        comp[*it] = next_id;
        work.push_back(*it);
        while (!work.empty()) {
            std::size_t node = work.back();
            work.pop_back();
            for (std::size_t to : radj[node]) {
                if (comp[to] == unset) {
                    comp[to] = next_id;
                    work.push_back(to);
                }
            }
        }
        ++next_id;
    }
    return comp;
}

template <typename W>
std::optional<AssignmentAnalysis> solve_with(const WeightGrid& grid, const CostGrid<W>& costs) {
    HungarianResult<W> h;
    if (!hungarian(costs, h)) return std::nullopt;

    const std::size_t n = grid.n;
    AssignmentAnalysis out;
    out.n = n;
    out.row_to_col.assign(n, 0);
    for (std::size_t j = 1; j <= n; ++j) out.row_to_col[h.col_owner[j] - 1] = j - 1;

    out.total = 0;
    for (std::size_t i = 0; i < n; ++i) out.total += *grid.at(i, out.row_to_col[i]);

    // Residual digraph on the tight edges: rows 0..n-1, columns n..2n-1.
    std::vector<bool> tight(n * n, false);
    std::vector<std::vector<std::size_t>> adj(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t ci = costs.idx(i + 1, j + 1);
            if (!costs.allowed[ci]) continue;
            if (costs.cost[ci] - h.u[i + 1] - h.v[j + 1] != W(0)) continue;
            tight[i * n + j] = true;
            if (out.row_to_col[i] == j) {
                adj[n + j].push_back(i);
            } else {
                adj[i].push_back(n + j);
            }
        }
    }
    const auto comp = strongly_connected(adj);

    out.optimal_edge.assign(n * n, false);
    out.unique = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!tight[i * n + j]) continue;
            if (out.row_to_col[i] == j) {
                out.optimal_edge[i * n + j] = true;
            } else if (comp[i] == comp[n + j]) {
                out.optimal_edge[i * n + j] = true;
                out.unique = false;
            }
        }
    }
    return out;
}

}  // namespace

std::optional<AssignmentAnalysis> solve_assignment(const WeightGrid& grid) {
    const std::size_t n = grid.n;
    if (n == 0) {
        AssignmentAnalysis empty;
        empty.total = 0;
        return empty;
    }

    mpz_class scale = 1;
    for (const auto& w : grid.weights) {
        if (w) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), w->get_den_mpz_t());
    }

    // Costs are negated weights so that the min-cost solver maximizes.
    CostGrid<mpz_class> big{n, std::vector<mpz_class>((n + 1) * (n + 1)), std::vector<bool>((n + 1) * (n + 1))};
    mpz_class max_abs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& w = grid.at(i, j);
            if (!w) continue;
            const std::size_t ci = big.idx(i + 1, j + 1);
            big.allowed[ci] = true;
            big.cost[ci] = -(w->get_num() * (scale / w->get_den()));
            if (abs(big.cost[ci]) > max_abs) max_abs = abs(big.cost[ci]);
        }
    }

    // Potentials stay within a small multiple of n * max|cost|.
    const mpz_class limit = mpz_class(std::numeric_limits<std::int64_t>::max() / 16) / mpz_class(n + 1);
    if (max_abs <= limit) {
        CostGrid<std::int64_t> small{n, std::vector<std::int64_t>(big.cost.size(), 0), big.allowed};
        for (std::size_t k = 0; k < big.cost.size(); ++k) {
            if (big.allowed[k]) small.cost[k] = big.cost[k].get_si();
        }
        return solve_with(grid, small);
    }
    return solve_with(grid, big);
}

}  // namespace xtrop
