#include "picspace/numeric_verify.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>

#include "picspace/cycle_space.hpp"
#include "picspace/fp.hpp"
#include "picspace/rigidity.hpp"

namespace picspace {

namespace {

int rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    size_t col = 0;
    for (size_t row = 0; row < rows && col < cols; ++col) {
        size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        std::uint64_t inv = fp::inv(m[row][col], p);
        for (size_t r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            std::uint64_t factor = fp::mul(m[r][col], inv, p);
            for (size_t c = col; c < cols; ++c)
                m[r][c] = fp::sub(m[r][c], fp::mul(factor, m[row][c], p), p);
        }
        ++row;
        ++rank;
    }
    return rank;
}

// BFS spanning tree over the full edge set, smallest-vertex root.
EdgeSet spanning_tree_for_cycles(const Graph& g) {
    std::vector<char> seen(g.vertex_count(), 0);
    EdgeSet tree = 0;
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::vector<int> queue{root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int e = 0; e < g.edge_count(); ++e) {
                auto [a, b] = g.edge(e);
                int other = a == v ? b : (b == v ? a : -1);
                if (other < 0 || seen[other]) continue;
                seen[other] = 1;
                tree |= edge_bit(e);
                queue.push_back(other);
            }
        }
    }
    return tree;
}

}  // namespace

PictureSample random_generic_picture(const Graph& g, std::uint64_t p,
                                     std::uint64_t seed) {
    int n = g.vertex_count();
    fp::require_valid_modulus(
        p, 8 * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n));
    std::mt19937_64 rng(seed);
    PictureSample s;
    s.prime = p;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 1000)
            throw std::runtime_error("picture sampling failed to terminate");
        s.x.assign(n, 0);
        s.y.assign(n, 0);
        for (int v = 0; v < n; ++v) {
            s.x[v] = rng() % p;
            s.y[v] = rng() % p;
        }
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            for (int w = v + 1; w < n && ok; ++w)
                if (s.x[v] == s.x[w] && s.y[v] == s.y[w]) ok = false;
        for (int e = 0; e < g.edge_count() && ok; ++e) {
            auto [v, w] = g.edge(e);
            if (s.x[v] == s.x[w]) ok = false;
        }
        if (ok) break;
    }
    s.slope.assign(g.edge_count(), 0);
    s.intercept.assign(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [v, w] = g.edge(e);
        std::uint64_t dx = fp::sub(s.x[w], s.x[v], p);
        std::uint64_t dy = fp::sub(s.y[w], s.y[v], p);
        s.slope[e] = fp::mul(dy, fp::inv(dx, p), p);
        s.intercept[e] =
            fp::sub(s.y[v], fp::mul(s.slope[e], s.x[v], p), p);
    }
    return s;
}

bool check_polygon_relations(const Graph& g, const PictureSample& s) {
    std::uint64_t p = s.prime;
    EdgeSet tree = spanning_tree_for_cycles(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (tree & edge_bit(e)) continue;
        SignedEdgeVector z = fundamental_cycle(g, tree, e);
        // Chain map: tail->head contributes m * (x_tail - x_head).
        std::uint64_t total = 0;
        for (auto& [f, c] : z.coeffs) {
            auto [tail, head] = g.edge(f);
            std::uint64_t dx = fp::sub(s.x[tail], s.x[head], p);
            std::uint64_t term = fp::mul(s.slope[f], dx, p);
            if (c > 0)
                for (int i = 0; i < c; ++i) total = fp::add(total, term, p);
            else
                for (int i = 0; i < -c; ++i) total = fp::sub(total, term, p);
        }
        if (total != 0) return false;
    }
    return true;
}

std::uint64_t evaluate_at_slopes(const MultilinearPoly& poly,
                                 const std::vector<std::uint64_t>& slopes,
                                 std::uint64_t p) {
    std::uint64_t total = 0;
    for (auto& [sup, c] : poly.terms()) {
        Int r = c % Int(p);
        if (r < 0) r += Int(p);
        std::uint64_t term = r.convert_to<std::uint64_t>();
        for (int e = 0; e < 64; ++e)
            if (sup & edge_bit(e)) term = fp::mul(term, slopes.at(e), p);
        total = fp::add(total, term, p);
    }
    return total;
}

bool check_ideal_vanishing(const Graph& g, int samples, std::uint64_t p,
                           std::uint64_t seed) {
    IdealGenerators gens = ideal_generators(g);
    for (int i = 0; i < samples; ++i) {
        PictureSample s = random_generic_picture(g, p, mix_seed(seed, i));
        for (auto& [circuit, tau] : gens.generators)
            if (evaluate_at_slopes(tau, s.slope, p) != 0) return false;
    }
    return true;
}

namespace {

int slope_rank_once(const Graph& g, EdgeSet f, std::uint64_t p,
                    std::uint64_t seed) {
    PictureSample s = random_generic_picture(g, p, seed);
    std::vector<std::vector<std::uint64_t>> jac;
    for (int e : g.edge_list(f)) {
        auto [v, w] = g.edge(e);
        std::uint64_t dx_inv = fp::inv(fp::sub(s.x[w], s.x[v], p), p);
        std::uint64_t m = s.slope[e];
        std::vector<std::uint64_t> row(2 * g.vertex_count(), 0);
        // m = (y_w - y_v)/(x_w - x_v); closed-form partials.
        row[2 * v + 0] = fp::mul(m, dx_inv, p);            // d/dx_v
        row[2 * v + 1] = fp::neg(dx_inv, p);               // d/dy_v
        row[2 * w + 0] = fp::neg(fp::mul(m, dx_inv, p), p);  // d/dx_w
        row[2 * w + 1] = dx_inv;                           // d/dy_w
        jac.push_back(row);
    }
    return rank_mod_p(jac, p);
}

int length_rank_once(const Graph& g, EdgeSet f, std::uint64_t p,
                     std::uint64_t seed) {
    PictureSample s = random_generic_picture(g, p, seed);
    std::vector<std::vector<std::uint64_t>> jac;
    for (int e : g.edge_list(f)) {
        auto [v, w] = g.edge(e);
        std::uint64_t dx = fp::sub(s.x[v], s.x[w], p);
        std::uint64_t dy = fp::sub(s.y[v], s.y[w], p);
        std::vector<std::uint64_t> row(2 * g.vertex_count(), 0);
        row[2 * v + 0] = fp::add(dx, dx, p);
        row[2 * v + 1] = fp::add(dy, dy, p);
        row[2 * w + 0] = fp::neg(fp::add(dx, dx, p), p);
        row[2 * w + 1] = fp::neg(fp::add(dy, dy, p), p);
        jac.push_back(row);
    }
    return rank_mod_p(jac, p);
}

}  // namespace

int slope_jacobian_rank(const Graph& g, EdgeSet f, std::uint64_t p,
                        std::uint64_t seed) {
    // Rank can only drop at special points; three tries cover unlucky
    // samples.
    int best = 0;
    for (std::uint64_t i = 0; i < 3; ++i)
        best = std::max(best, slope_rank_once(g, f, p, mix_seed(seed, i)));
    return best;
}

int slope_jacobian_rank(const Graph& g, std::uint64_t p,
                        std::uint64_t seed) {
    return slope_jacobian_rank(g, g.full_edge_set(), p, seed);
}

int length_jacobian_rank(const Graph& g, EdgeSet f, std::uint64_t p,
                         std::uint64_t seed) {
    int best = 0;
    for (std::uint64_t i = 0; i < 3; ++i)
        best = std::max(best,
                        length_rank_once(g, f, p, mix_seed(seed, 16 + i)));
    return best;
}

int length_jacobian_rank(const Graph& g, std::uint64_t p,
                         std::uint64_t seed) {
    return length_jacobian_rank(g, g.full_edge_set(), p, seed);
}

bool matroid_equality_check(const Graph& g, std::uint64_t p,
                            std::uint64_t seed) {
    auto agree = [&](EdgeSet f, std::uint64_t s) {
        int comb = rigidity_rank(g, f);
        return slope_jacobian_rank(g, f, p, s) == comb &&
               length_jacobian_rank(g, f, p, s) == comb;
    };
    if (!agree(g.full_edge_set(), seed)) return false;
    std::mt19937_64 rng(mix_seed(seed, 0xABCDEF));
    for (int i = 0; i < 20; ++i) {
        EdgeSet f = 0;
        for (int e = 0; e < g.edge_count(); ++e)
            if (rng() & 1) f |= edge_bit(e);
        if (!agree(f, mix_seed(seed, 100 + i))) return false;
    }
    return true;
}

}  // namespace picspace
