#include "snakedim/order_construct.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "snakedim/parallel.hpp"

namespace snakedim {

ChainAssignment assign_chains(const CoverHierarchy& h) {
    const int depth = h.depth();
    int n = 0;
    for (const auto& s : h.levels[0].sets)
        for (PointId p : s) n = std::max(n, p + 1);
    ChainAssignment chains;
    chains.chains.assign(n, {});
    const Cover& leaves = h.levels[depth - 1];
    for (PointId p = 0; p < n; ++p) {
        // Smallest-index leaf containing p, then parents upward.
        int leaf = -1;
        for (size_t s = 0; s < leaves.sets.size(); ++s)
            if (std::binary_search(leaves.sets[s].begin(), leaves.sets[s].end(), p)) {
                leaf = static_cast<int>(s);
                break;
            }
        std::vector<int>& chain = chains.chains[p];
        chain.assign(depth, 0);
        int cur = leaf;
        for (int level = depth - 1; level >= 0; --level) {
            chain[level] = cur;
            if (level > 0) cur = h.parent[level][cur];
        }
    }
    return chains;
}

TotalOrder lex_order(const CoverHierarchy& h, const std::vector<std::vector<int>>* level_orders) {
    const ChainAssignment chains = assign_chains(h);
    const int n = static_cast<int>(chains.chains.size());
    const int depth = h.depth();

    // pos[level][set] = rank of the set under the level order T_level.
    std::vector<std::vector<int>> pos(depth);
    for (int level = 0; level < depth; ++level) {
        const int count = static_cast<int>(h.levels[level].sets.size());
        pos[level].resize(count);
        if (level_orders) {
            const auto& lo = (*level_orders)[level];
            if (static_cast<int>(lo.size()) != count)
                throw NotAPermutation("level order " + std::to_string(level) + " has wrong size");
            std::vector<int> seen(count, 0);
            for (int k = 0; k < count; ++k) {
                if (lo[k] < 0 || lo[k] >= count || seen[lo[k]]++)
                    throw NotAPermutation("level order " + std::to_string(level));
                pos[level][lo[k]] = k;
            }
        } else {
            std::iota(pos[level].begin(), pos[level].end(), 0);
        }
    }

    std::vector<PointId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](PointId a, PointId b) {
        const auto& ca = chains.chains[a];
        const auto& cb = chains.chains[b];
        for (int level = 0; level < depth; ++level)
            if (ca[level] != cb[level]) return pos[level][ca[level]] < pos[level][cb[level]];
        return a < b;  // identical full chains: the points share every set
    });
    return TotalOrder::from_permutation(n, perm);
}

std::vector<std::vector<int>> random_level_orders(const CoverHierarchy& h, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> orders(h.depth());
    for (int level = 0; level < h.depth(); ++level) {
        orders[level].resize(h.levels[level].sets.size());
        std::iota(orders[level].begin(), orders[level].end(), 0);
        std::shuffle(orders[level].begin(), orders[level].end(), rng);
    }
    return orders;
}

namespace {

// Alternation length over two disjoint rank-sorted lists (same scan as the
// snake engine's greedy, kept local to avoid exposing the kernel).
int greedy_ranks(const std::vector<int>& r1, const std::vector<int>& r2) {
    size_t i = 0, j = 0;
    bool need1 = true;
    int count = 0;
    while (i < r1.size() || j < r2.size()) {
        const bool from1 = j == r2.size() || (i < r1.size() && r1[i] < r2[j]);
        if (from1) {
            if (need1) {
                ++count;
                need1 = false;
            }
            ++i;
        } else {
            if (!need1 && count > 0) {
                ++count;
                need1 = true;
            }
            ++j;
        }
    }
    return count - 1;
}

} // namespace

CertificateResult theorem_b_certificate(const FiniteMetricSpace& space, const TotalOrder& order,
                                        const CoverHierarchy& h, int n, int threads) {
    const int size = space.size();
    const int depth = h.depth();
    CertificateResult cert;
    cert.bound = 2 * n + 1;

    // First admissible level per pair distance: 2*mesh_k + 2*margin_k < d.
    auto admissible_level = [&](double d) {
        for (int k = 0; k < depth; ++k)
            if (2 * h.levels[k].mesh + 2 * h.margins[k] < d) return k;
        return -1;
    };

    // Rank-sorted balls of radius margin_k, built once per level actually used.
    std::vector<std::vector<std::vector<int>>> balls(depth);
    std::vector<char> level_used(depth, 0);
    for (PointId a = 0; a < size; ++a)
        for (PointId b = a + 1; b < size; ++b) {
            const int k = admissible_level(space.dist(a, b));
            if (k >= 0) level_used[k] = 1;
        }
    for (int k = 0; k < depth; ++k) {
        if (!level_used[k]) continue;
        balls[k].resize(size);
        for (PointId p = 0; p < size; ++p) {
            auto& r = balls[k][p];
            for (PointId q = 0; q < size; ++q)
                if (space.dist(p, q) < h.margins[k]) r.push_back(order.rank(q));
            std::sort(r.begin(), r.end());
        }
    }

    struct Chunk {
        int worst = -1;
        std::array<PointId, 2> pair{0, 0};
        std::vector<std::array<PointId, 2>> skipped;
    };
    std::vector<Chunk> chunks(static_cast<size_t>(std::max(1, std::min(threads, size))));
    parallel_chunks(size, threads, [&](int t, int begin, int end) {
        Chunk local;
        for (PointId a = begin; a < end; ++a)
            for (PointId b = a + 1; b < size; ++b) {
                const int k = admissible_level(space.dist(a, b));
                if (k < 0) {
                    local.skipped.push_back({a, b});
                    continue;
                }
                const int v = std::max(greedy_ranks(balls[k][a], balls[k][b]),
                                       greedy_ranks(balls[k][b], balls[k][a]));
                if (v > local.worst) {
                    local.worst = v;
                    local.pair = {a, b};
                }
            }
        chunks[t] = std::move(local);
    });

    for (const Chunk& c : chunks) {
        if (c.worst > cert.worst_value) {
            cert.worst_value = c.worst;
            cert.worst_pair = c.pair;
        }
        cert.skipped.insert(cert.skipped.end(), c.skipped.begin(), c.skipped.end());
    }
    cert.pass = cert.worst_value <= cert.bound;
    return cert;
}

namespace {

struct MergeTree {
    // Single-linkage merges in ascending distance order; each entry is the
    // contributed child's point set.
    std::vector<std::vector<PointId>> cut_sets;
};

MergeTree single_linkage_cuts(const FiniteMetricSpace& space) {
    const int n = space.size();
    // Prim MST, then merges by ascending edge length.
    std::vector<char> in_tree(n, 0);
    std::vector<double> best(n, 0);
    std::vector<PointId> best_from(n, 0);
    struct Edge {
        double d;
        PointId a, b;
    };
    std::vector<Edge> mst;
    in_tree[0] = 1;
    for (PointId p = 1; p < n; ++p) {
        best[p] = space.dist(0, p);
        best_from[p] = 0;
    }
    for (int step = 1; step < n; ++step) {
        PointId next = -1;
        for (PointId p = 0; p < n; ++p)
            if (!in_tree[p] && (next < 0 || best[p] < best[next])) next = p;
        in_tree[next] = 1;
        mst.push_back({best[next], std::min(best_from[next], next),
                       std::max(best_from[next], next)});
        for (PointId p = 0; p < n; ++p)
            if (!in_tree[p] && space.dist(next, p) < best[p]) {
                best[p] = space.dist(next, p);
                best_from[p] = next;
            }
    }
    std::sort(mst.begin(), mst.end(), [](const Edge& x, const Edge& y) {
        return std::tie(x.d, x.a, x.b) < std::tie(y.d, y.a, y.b);
    });

    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    std::vector<std::vector<PointId>> members(n);
    for (PointId p = 0; p < n; ++p) members[p] = {p};
    std::function<int(int)> find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };

    MergeTree tree;
    for (const Edge& e : mst) {
        int ra = find(e.a), rb = find(e.b);
        // Contribute the child whose minimum point id is larger.
        int child = *std::min_element(members[ra].begin(), members[ra].end()) <
                            *std::min_element(members[rb].begin(), members[rb].end())
                        ? rb
                        : ra;
        auto cut = members[child];
        std::sort(cut.begin(), cut.end());
        tree.cut_sets.push_back(std::move(cut));
        int keep = child == ra ? rb : ra;
        root[child] = keep;
        members[keep].insert(members[keep].end(), members[child].begin(), members[child].end());
        members[child].clear();
    }
    // Coarsest split first.
    std::reverse(tree.cut_sets.begin(), tree.cut_sets.end());
    return tree;
}

std::vector<std::vector<std::uint8_t>> build_codes(int n,
                                                   const std::vector<std::vector<PointId>>& sets) {
    std::vector<std::vector<std::uint8_t>> codes(n,
                                                 std::vector<std::uint8_t>(sets.size(), 0));
    for (size_t i = 0; i < sets.size(); ++i)
        for (PointId p : sets[i]) codes[p][i] = 1;
    return codes;
}

void check_separating(const std::vector<std::vector<std::uint8_t>>& codes) {
    const int n = static_cast<int>(codes.size());
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (codes[x] == codes[y]) throw NotSeparating(x, y);
}

} // namespace

SeparatingFamily separating_family_dendrogram(const FiniteMetricSpace& space) {
    SeparatingFamily family;
    if (space.size() < 2) {
        family.codes.assign(space.size(), {});
        return family;
    }
    family.sets = single_linkage_cuts(space).cut_sets;
    family.codes = build_codes(space.size(), family.sets);
    check_separating(family.codes);
    return family;
}

SeparatingFamily separating_family_provided(const FiniteMetricSpace& space,
                                            std::vector<std::vector<PointId>> sets) {
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        for (PointId p : s)
            if (p < 0 || p >= space.size())
                throw BadParams("family references point " + std::to_string(p));
    }
    SeparatingFamily family;
    family.sets = std::move(sets);
    family.codes = build_codes(space.size(), family.sets);
    check_separating(family.codes);
    return family;
}

double family_min_gap(const FiniteMetricSpace& space, const SeparatingFamily& family) {
    double gap = space.diameter();
    for (const auto& s : family.sets) {
        std::vector<char> member(space.size(), 0);
        for (PointId p : s) member[p] = 1;
        for (PointId p : s)
            for (PointId q = 0; q < space.size(); ++q)
                if (!member[q]) gap = std::min(gap, space.dist(p, q));
    }
    return gap;
}

TotalOrder binary_code_order(const SeparatingFamily& family) {
    const int n = static_cast<int>(family.codes.size());
    std::vector<PointId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](PointId a, PointId b) {
        if (family.codes[a] != family.codes[b]) return family.codes[a] < family.codes[b];
        return a < b;
    });
    return TotalOrder::from_permutation(n, perm);
}

std::vector<PointId> t_convex_hull(const TotalOrder& order, const std::vector<PointId>& subset) {
    if (subset.empty()) return {};
    int lo = order.size(), hi = -1;
    for (PointId p : subset) {
        lo = std::min(lo, order.rank(p));
        hi = std::max(hi, order.rank(p));
    }
    std::vector<PointId> hull;
    for (PointId p = 0; p < order.size(); ++p)
        if (order.rank(p) >= lo && order.rank(p) <= hi) hull.push_back(p);
    return hull;
}

ConvexDecomposition convex_decomposition(const FiniteMetricSpace& space, const TotalOrder& order,
                                         PointId x0, double r, double eps) {
    if (!(eps > 0) || !(eps <= r)) throw BadParams("need 0 < eps <= r");
    ConvexDecomposition dec;
    dec.center = x0;
    dec.eps = eps;

    std::vector<PointId> exterior;
    for (PointId p = 0; p < space.size(); ++p)
        if (space.dist(x0, p) >= r) exterior.push_back(p);
    if (exterior.empty()) throw EmptyExterior(r);

    std::vector<char> in_ball(space.size(), 0);
    for (PointId p : space.ball(x0, eps)) in_ball[p] = 1;

    // a ~ b iff the order interval [a,b] avoids the ball: sort the exterior
    // by rank and cut wherever a ball point sits between neighbours.
    std::sort(exterior.begin(), exterior.end(),
              [&](PointId a, PointId b) { return order.rank(a) < order.rank(b); });
    std::vector<char> ball_rank(order.size(), 0);
    for (PointId p = 0; p < space.size(); ++p)
        if (in_ball[p]) ball_rank[order.rank(p)] = 1;
    std::vector<int> ball_prefix(order.size() + 1, 0);
    for (int k = 0; k < order.size(); ++k) ball_prefix[k + 1] = ball_prefix[k] + ball_rank[k];

    std::vector<PointId> current;
    auto flush = [&]() {
        if (current.empty()) return;
        const int lo = order.rank(current.front());
        const int hi = order.rank(current.back());
        if (ball_prefix[hi + 1] - ball_prefix[lo] != 0)
            throw Error("DecompositionInvariant", "class hull meets the excluded ball");
        dec.class_intervals.push_back({lo, hi});
        std::sort(current.begin(), current.end());
        dec.classes.push_back(std::move(current));
        current.clear();
    };
    for (PointId p : exterior) {
        if (!current.empty()) {
            const int prev_rank = order.rank(current.back());
            if (ball_prefix[order.rank(p)] - ball_prefix[prev_rank + 1] != 0) flush();
        }
        current.push_back(p);
    }
    flush();
    return dec;
}

} // namespace snakedim
