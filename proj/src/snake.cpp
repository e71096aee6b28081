#include "snakedim/snake.hpp"

#include <algorithm>

#include "snakedim/parallel.hpp"

namespace snakedim {

namespace {

struct Item {
    int rank;
    PointId point;
    bool in1;
    bool in2;
};

std::vector<Item> merged_items(const TotalOrder& order, const std::vector<PointId>& u1,
                               const std::vector<PointId>& u2) {
    std::vector<Item> items;
    items.reserve(u1.size() + u2.size());
    for (PointId p : u1) items.push_back({order.rank(p), p, true, false});
    for (PointId p : u2) items.push_back({order.rank(p), p, false, true});
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return a.rank < b.rank; });
    // Collapse points present in both sets.
    std::vector<Item> out;
    out.reserve(items.size());
    for (const Item& it : items) {
        if (!out.empty() && out.back().rank == it.rank) {
            out.back().in1 |= it.in1;
            out.back().in2 |= it.in2;
        } else {
            out.push_back(it);
        }
    }
    return out;
}

} // namespace

SnakeResult longest_snake(const TotalOrder& order, const std::vector<PointId>& u1,
                          const std::vector<PointId>& u2) {
    SnakeResult res;
    // Take a point whenever it lies in the currently needed set.
    bool need1 = true;
    for (const Item& it : merged_items(order, u1, u2)) {
        if ((need1 && it.in1) || (!need1 && it.in2)) {
            res.witness.push_back(it.point);
            need1 = !need1;
        }
    }
    res.value = static_cast<int>(res.witness.size()) - 1;
    return res;
}

SnakeResult longest_snake_oracle(const TotalOrder& order, const std::vector<PointId>& u1,
                                 const std::vector<PointId>& u2) {
    const auto items = merged_items(order, u1, u2);
    const int k = static_cast<int>(items.size());
    // len[i][p]: longest valid sequence ending at item i, where i plays an
    // even (p=0, in u1) or odd (p=1, in u2) position; 0 = unreachable.
    std::vector<std::array<int, 2>> len(k, {0, 0});
    std::vector<std::array<int, 2>> prev(k, {-1, -1});
    int best = 0, best_i = -1, best_p = 0;
    for (int i = 0; i < k; ++i) {
        if (items[i].in1) {
            len[i][0] = 1;
            for (int j = 0; j < i; ++j)
                if (len[j][1] > 0 && len[j][1] + 1 > len[i][0]) {
                    len[i][0] = len[j][1] + 1;
                    prev[i][0] = j;
                }
        }
        if (items[i].in2) {
            for (int j = 0; j < i; ++j)
                if (len[j][0] > 0 && len[j][0] + 1 > len[i][1]) {
                    len[i][1] = len[j][0] + 1;
                    prev[i][1] = j;
                }
        }
        for (int p = 0; p < 2; ++p)
            if (len[i][p] > best) {
                best = len[i][p];
                best_i = i;
                best_p = p;
            }
    }
    SnakeResult res;
    if (best == 0) return res;  // u1 empty: no a_0
    res.witness.resize(best);
    int i = best_i, p = best_p;
    for (int pos = best - 1; pos >= 0; --pos) {
        res.witness[pos] = items[i].point;
        const int pi = prev[i][p];
        i = pi;
        p ^= 1;
    }
    res.value = best - 1;
    return res;
}

bool check_witness(const TotalOrder& order, const std::vector<PointId>& u1,
                   const std::vector<PointId>& u2, const SnakeResult& result) {
    if (result.no_snake()) return result.witness.empty();
    if (static_cast<int>(result.witness.size()) != result.value + 1) return false;
    auto contains = [](const std::vector<PointId>& u, PointId p) {
        return std::find(u.begin(), u.end(), p) != u.end();
    };
    for (size_t i = 0; i < result.witness.size(); ++i) {
        const PointId p = result.witness[i];
        if (i > 0 && !(order.rank(result.witness[i - 1]) < order.rank(p))) return false;
        if (!contains(i % 2 == 0 ? u1 : u2, p)) return false;
    }
    return true;
}

ScaleSnake snake_at_scale(const FiniteMetricSpace& space, const TotalOrder& order, PointId x,
                          PointId y, double eps) {
    if (x == y) throw SamePoint(x);
    const auto b1 = space.ball(x, eps);
    const auto b2 = space.ball(y, eps);
    ScaleSnake out;
    std::vector<PointId> common;
    std::set_intersection(b1.begin(), b1.end(), b2.begin(), b2.end(), std::back_inserter(common));
    if (!common.empty()) {
        out.overlap = true;
        return out;
    }
    out.snake = longest_snake(order, b1, b2);
    return out;
}

SnakeProfile pair_snake_profile(const FiniteMetricSpace& space, const TotalOrder& order, PointId x,
                                PointId y, const std::vector<double>& scales) {
    for (size_t i = 0; i + 1 < scales.size(); ++i)
        if (!(scales[i] < scales[i + 1])) throw BadParams("scales must strictly increase");
    if (!scales.empty() && scales.front() <= 0) throw BadParams("scales must be positive");
    SnakeProfile profile;
    profile.x = x;
    profile.y = y;
    profile.scales = scales;
    int last = SnakeResult::kNoSnake;
    for (double eps : scales) {
        ScaleSnake v = snake_at_scale(space, order, x, y, eps);
        if (v.overlap) {
            if (!profile.overlap_at) profile.overlap_at = eps;
        } else {
            if (profile.overlap_at)
                throw Error("ProfileNotMonotone", "disjoint balls above the overlap scale");
            if (v.snake.value < last)
                throw Error("ProfileNotMonotone", "snake value decreased with scale");
            last = v.snake.value;
        }
        profile.values.push_back(std::move(v));
    }
    return profile;
}

namespace {

// Alternation length over two rank-sorted lists; kNoSnake-style -1 baseline.
// Assumes the lists are disjoint.
int greedy_ranks(const std::vector<int>& r1, const std::vector<int>& r2) {
    size_t i = 0, j = 0;
    bool need1 = true;
    int count = 0;
    while (i < r1.size() || j < r2.size()) {
        const bool take_from_1 =
            j == r2.size() || (i < r1.size() && r1[i] < r2[j]);
        if (take_from_1) {
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

bool ranks_intersect(const std::vector<int>& r1, const std::vector<int>& r2) {
    size_t i = 0, j = 0;
    while (i < r1.size() && j < r2.size()) {
        if (r1[i] == r2[j]) return true;
        if (r1[i] < r2[j]) ++i;
        else ++j;
    }
    return false;
}

} // namespace

std::optional<SnakeNumberResult> try_snake_number_at_scale(const FiniteMetricSpace& space,
                                                           const TotalOrder& order, double eps,
                                                           int threads) {
    if (eps <= 0) throw BadParams("eps must be positive");
    const int n = space.size();
    // Rank-sorted balls, shared by every pair.
    std::vector<std::vector<int>> ball_ranks(n);
    for (PointId p = 0; p < n; ++p) {
        auto& r = ball_ranks[p];
        for (PointId q = 0; q < n; ++q)
            if (space.dist(p, q) < eps) r.push_back(order.rank(q));
        std::sort(r.begin(), r.end());
    }

    struct Best {
        int value = SnakeResult::kNoSnake;
        PointId x = -1, y = -1;
        bool any_disjoint = false;
    };
    auto better = [&](const Best& a, const Best& b) {
        if (a.value != b.value) return a.value > b.value;
        if (a.x < 0) return false;
        if (b.x < 0) return true;
        if (order.rank(a.x) != order.rank(b.x)) return order.rank(a.x) < order.rank(b.x);
        return order.rank(a.y) < order.rank(b.y);
    };

    const int nthreads = std::max(1, threads);
    std::vector<Best> partial(static_cast<size_t>(std::min(nthreads, std::max(1, n))));
    parallel_chunks(n, nthreads, [&](int t, int begin, int end) {
        Best local;
        for (PointId x = begin; x < end; ++x) {
            for (PointId y = 0; y < n; ++y) {
                if (x == y) continue;
                // d >= 2*eps forces disjoint balls; closer pairs need the set check.
                if (space.dist(x, y) < 2 * eps &&
                    ranks_intersect(ball_ranks[x], ball_ranks[y]))
                    continue;
                local.any_disjoint = true;
                Best cand{greedy_ranks(ball_ranks[x], ball_ranks[y]), x, y, true};
                if (better(cand, local)) local = cand;
            }
        }
        partial[t] = local;
    });

    Best best;
    for (const Best& b : partial) {
        best.any_disjoint |= b.any_disjoint;
        if (b.x >= 0 && better(b, best)) {
            const bool any = best.any_disjoint;
            best = b;
            best.any_disjoint = any;
        }
    }
    if (!best.any_disjoint) return std::nullopt;

    SnakeNumberResult out;
    out.x = best.x;
    out.y = best.y;
    out.best = longest_snake(order, space.ball(best.x, eps), space.ball(best.y, eps));
    return out;
}

SnakeNumberResult snake_number_at_scale(const FiniteMetricSpace& space, const TotalOrder& order,
                                        double eps, int threads) {
    auto res = try_snake_number_at_scale(space, order, eps, threads);
    if (!res) throw NoDisjointPairs(eps);
    return *res;
}

} // namespace snakedim
