#include "picspace/treepoly.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>

#include "picspace/fp.hpp"
#include "picspace/rigidity.hpp"

namespace picspace {

namespace {

// Breadth-first spanning tree of (V(f), f) rooted at the smallest
// vertex, neighbors visited in ascending edge order.
EdgeSet bfs_tree(const Graph& g, EdgeSet f) {
    VertexSet sup = g.vertex_support(f);
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
    for (int e : g.edge_list(f)) {
        auto [a, b] = g.edge(e);
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
    }
    EdgeSet tree = 0;
    std::vector<char> seen(g.vertex_count(), 0);
    int root = std::countr_zero(sup);
    seen[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [w, e] : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                tree |= edge_bit(e);
                q.push(w);
            }
    }
    return tree;
}

MultilinearPoly det_rec(const SlopeMatrix& m, int row, std::uint32_t colmask,
                        std::map<std::uint32_t, MultilinearPoly>& memo) {
    if (colmask == 0) return MultilinearPoly::constant(1);
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    MultilinearPoly det;
    int sign = 1;
    for (int c = 0; c < static_cast<int>(m.col_edges.size()); ++c) {
        if (!((colmask >> c) & 1)) continue;
        const MultilinearPoly& entry = m.entries[row][c];
        if (!entry.is_zero()) {
            MultilinearPoly minor =
                det_rec(m, row + 1, colmask & ~(1u << c), memo);
            MultilinearPoly prod = entry * minor;
            det = sign > 0 ? det + prod : det - prod;
        }
        sign = -sign;
    }
    memo[colmask] = det;
    return det;
}

}  // namespace

MultilinearPoly slope_determinant(const SlopeMatrix& m) {
    if (m.row_edges.size() != m.col_edges.size())
        throw std::runtime_error("slope matrix is not square");
    if (m.col_edges.size() > 31)
        throw std::runtime_error("slope matrix too large");
    std::map<std::uint32_t, MultilinearPoly> memo;
    std::uint32_t full =
        m.col_edges.empty()
            ? 0
            : (std::uint32_t{1} << m.col_edges.size()) - 1;
    return det_rec(m, 0, full, memo);
}

MultilinearPoly tree_polynomial(const Graph& g, EdgeSet f) {
    VertexSet sup = g.vertex_support(f);
    int nv = std::popcount(sup);
    if (!g.connected_on_support(f))
        throw std::runtime_error("tree polynomial: not connected");
    if (std::popcount(f) != 2 * nv - 2)
        throw std::runtime_error(
            "tree polynomial undefined: |E| != 2|V|-2");
    EdgeSet t = bfs_tree(g, f);
    return slope_determinant(slope_matrix(g, f, t)).sign_normalized();
}

MultilinearPoly tree_polynomial(const Graph& g) {
    return tree_polynomial(g, g.full_edge_set());
}

bool verify_tree_theorem(const Graph& g, EdgeSet f) {
    MultilinearPoly tau = tree_polynomial(g, f);
    std::vector<EdgeSet> cpl = coupled_spanning_trees(g, f);
    if (static_cast<size_t>(tau.term_count()) != cpl.size()) return false;
    int nv = std::popcount(g.vertex_support(f));
    int flip = (nv - 1) % 2 == 0 ? 1 : -1;
    for (EdgeSet t : cpl) {
        Int a = tau.coeff(t);
        Int b = tau.coeff(f & ~t);
        if (a != 1 && a != -1) return false;
        if (b != flip * a) return false;
    }
    return true;
}

bool verify_tree_theorem(const Graph& g) {
    return verify_tree_theorem(g, g.full_edge_set());
}

bool tree_choice_independence(const Graph& g, EdgeSet f) {
    std::vector<EdgeSet> trees = spanning_trees(g, f);
    if (trees.size() > 1000) {
        std::mt19937_64 rng(0x7265657321ULL);
        std::shuffle(trees.begin(), trees.end(), rng);
        trees.resize(20);
    }
    MultilinearPoly ref;
    bool have_ref = false;
    for (EdgeSet t : trees) {
        MultilinearPoly det =
            slope_determinant(slope_matrix(g, f, t)).sign_normalized();
        if (!have_ref) {
            ref = det;
            have_ref = true;
        } else if (!(det == ref)) {
            return false;
        }
    }
    return true;
}

bool tree_choice_independence(const Graph& g) {
    return tree_choice_independence(g, g.full_edge_set());
}

namespace {

// Coefficients of the univariate restriction of `poly` to the line
// m_e = a_e + b_e t, over F_p.  Degree <= poly.degree().
std::vector<std::uint64_t> restrict_to_line(
    const MultilinearPoly& poly, const std::map<int, std::uint64_t>& a,
    const std::map<int, std::uint64_t>& b, std::uint64_t p) {
    std::vector<std::uint64_t> out(poly.degree() + 1, 0);
    for (auto& [sup, c] : poly.terms()) {
        Int r = c % Int(p);
        if (r < 0) r += Int(p);
        std::vector<std::uint64_t> term{r.convert_to<std::uint64_t>()};
        for (int e = 0; e < 64; ++e) {
            if (!(sup & edge_bit(e))) continue;
            std::uint64_t ae = a.at(e), be = b.at(e);
            std::vector<std::uint64_t> next(term.size() + 1, 0);
            for (size_t i = 0; i < term.size(); ++i) {
                next[i] = fp::add(next[i], fp::mul(term[i], ae, p), p);
                next[i + 1] =
                    fp::add(next[i + 1], fp::mul(term[i], be, p), p);
            }
            term = std::move(next);
        }
        for (size_t i = 0; i < term.size(); ++i)
            out[i] = fp::add(out[i], term[i], p);
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

bool is_zero_poly(const std::vector<std::uint64_t>& f) {
    for (std::uint64_t c : f)
        if (c) return false;
    return true;
}

// Remainder of u mod d over F_p.
std::vector<std::uint64_t> poly_mod(std::vector<std::uint64_t> u,
                                    const std::vector<std::uint64_t>& d,
                                    std::uint64_t p) {
    std::uint64_t lead_inv = fp::inv(d.back(), p);
    while (u.size() >= d.size() && !is_zero_poly(u)) {
        while (!u.empty() && u.back() == 0) u.pop_back();
        if (u.size() < d.size()) break;
        std::uint64_t q = fp::mul(u.back(), lead_inv, p);
        size_t shift = u.size() - d.size();
        for (size_t i = 0; i < d.size(); ++i)
            u[shift + i] = fp::sub(u[shift + i], fp::mul(q, d[i], p), p);
    }
    return u;
}

// Exact division attempt for the case where the quotient uses no
// variable of d: specialize d's variables at integer points, divide
// coefficientwise, and confirm by exact multiplication.
bool try_exact_disjoint_division(const MultilinearPoly& d,
                                 const MultilinearPoly& p, bool& result) {
    EdgeSet vd = d.variables();
    std::mt19937_64 rng(0x646976ULL);
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::map<int, Int> alpha;
        for (int e = 0; e < 64; ++e)
            if (vd & edge_bit(e))
                alpha[e] = Int(static_cast<long long>(rng() % 2001) - 1000);
        Int dval = 0;
        for (auto& [sup, c] : d.terms()) {
            Int t = c;
            for (auto& [e, v] : alpha)
                if (sup & edge_bit(e)) t *= v;
            dval += t;
        }
        if (dval == 0) continue;
        std::map<EdgeSet, Int> qnum;
        for (auto& [sup, c] : p.terms()) {
            Int t = c;
            for (auto& [e, v] : alpha)
                if (sup & edge_bit(e)) t *= v;
            qnum[sup & ~vd] += t;
        }
        MultilinearPoly q;
        for (auto& [sup, num] : qnum) {
            if (num == 0) continue;
            if (num % dval != 0) return false;  // not a disjoint cofactor
            q = q + MultilinearPoly::monomial(sup, num / dval);
        }
        try {
            result = d * q == p;
        } catch (const std::domain_error&) {
            return false;
        }
        return true;
    }
    return false;
}

}  // namespace

bool divides(const MultilinearPoly& d, const MultilinearPoly& p,
             std::uint64_t prime, int trials) {
    if (d.is_zero()) throw std::runtime_error("division by zero polynomial");
    if (p.is_zero()) return true;
    fp::require_valid_modulus(prime, std::uint64_t{1} << 30);

    EdgeSet vd = d.variables();
    if ((vd & ~p.variables()) == 0) {
        bool result = false;
        if (try_exact_disjoint_division(d, p, result) && result) return true;
        // Inconclusive or false: fall through to the randomized check,
        // which also covers quotients sharing variables with d.
    }

    std::mt19937_64 rng(mix_seed(0x646976696465ULL, prime));
    EdgeSet all = vd | p.variables();
    int done = 0;
    int guard = 0;
    while (done < trials) {
        if (++guard > 64 * trials)
            throw std::runtime_error("divides: degenerate sampling");
        std::map<int, std::uint64_t> a, b;
        for (int e = 0; e < 64; ++e)
            if (all & edge_bit(e)) {
                a[e] = rng() % prime;
                b[e] = rng() % prime;
            }
        std::vector<std::uint64_t> du = restrict_to_line(d, a, b, prime);
        if (is_zero_poly(du)) continue;
        std::vector<std::uint64_t> pu = restrict_to_line(p, a, b, prime);
        if (!is_zero_poly(poly_mod(pu, du, prime))) return false;
        ++done;
    }
    return true;
}

IdealGenerators ideal_generators(const Graph& g, int max_edges) {
    IdealGenerators out;
    for (EdgeSet c : rigidity_circuits(g, max_edges))
        out.generators.emplace_back(c, tree_polynomial(g, c));
    return out;
}

}  // namespace picspace
