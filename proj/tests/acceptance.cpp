// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line; the exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "snakedim/cover.hpp"
#include "snakedim/metric_space.hpp"
#include "snakedim/order.hpp"
#include "snakedim/order_construct.hpp"
#include "snakedim/order_search.hpp"
#include "snakedim/snake.hpp"

using namespace snakedim;

namespace {

constexpr int kThreads = 4;

struct Criterion {
    bool ok = true;
    std::ostringstream detail;
    double seconds = 0;
};

using Clock = std::chrono::steady_clock;

template <typename F>
Criterion timed(F&& body) {
    Criterion c;
    const auto start = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail << " exception=" << e.what();
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return c;
}

void require(Criterion& c, bool cond, const std::string& label) {
    if (!cond) {
        c.ok = false;
        c.detail << " violated=" << label;
    }
}

// 1: the natural segment order has snake number 1 across scales.
Criterion segment_natural() {
    return timed([](Criterion& c) {
        const auto space = make_segment(1001);
        const auto order = natural_order(space);
        for (double eps : {0.01, 0.05, 0.1, 0.2}) {
            const int v = snake_number_at_scale(space, order, eps, kThreads).best.value;
            c.detail << " s(" << eps << ")=" << v;
            require(c, v == 1, "value==1");
        }
    });
}

// 2: the glued circle order has snake number 2, realized at the glue point.
Criterion circle_glued() {
    return timed([](Criterion& c) {
        const auto space = make_circle(1000);
        const auto order = natural_order(space);
        for (double eps : {0.01, 0.05, 0.1}) {
            const auto r = snake_number_at_scale(space, order, eps, kThreads);
            c.detail << " s(" << eps << ")=" << r.best.value;
            require(c, r.best.value == 2, "value==2");
            require(c, r.x == 0 || r.y == 0, "argmax hits the glue point");
        }
    });
}

// 3: exhaustive search over all orders of small circles.
Criterion circle_exhaustive() {
    return timed([](Criterion& c) {
        const auto r6 = exhaustive_min_snake(make_circle(6), {{1.25 / 6}});
        const auto r8 = exhaustive_min_snake(make_circle(8), {{1.25 / 8}});
        c.detail << " min6=" << r6.best_value << " min8=" << r8.best_value;
        require(c, r6.best_value == 2, "circle-6 minimum == 2 (pinned)");
        require(c, r8.best_value >= r6.best_value, "circle-8 minimum >= circle-6");
    });
}

// 4: certified bound 3 on the 64-point segment grid, no pair skipped.
Criterion grid1_certificate() {
    return timed([](Criterion& c) {
        const auto space = make_grid(1, 64);
        const auto h = build_hierarchy(space, HierarchyBuilder::Brick, 4, 2);
        const auto cert = theorem_b_certificate(space, lex_order(h), h, 1, kThreads);
        c.detail << " worst=" << cert.worst_value << " skipped=" << cert.skipped.size();
        require(c, cert.bound == 3, "bound==3");
        require(c, cert.pass, "certificate passes");
        require(c, cert.skipped.empty(), "no skipped pairs");
    });
}

// 5: certified bound 5 on the 32x32 grid.
Criterion grid2_certificate() {
    return timed([](Criterion& c) {
        const auto space = make_grid(2, 32);
        const auto h = build_hierarchy(space, HierarchyBuilder::Brick, 3, 3);
        const auto cert = theorem_b_certificate(space, lex_order(h), h, 2, kThreads);
        c.detail << " worst=" << cert.worst_value << " skipped=" << cert.skipped.size();
        require(c, cert.bound == 5, "bound==5");
        require(c, cert.pass, "certificate passes");
    });
}

// 6: the binary-code order keeps the depth-7 cantor set at snake number <= 1
// below half the construction gap.
Criterion cantor_binary() {
    return timed([](Criterion& c) {
        const auto space = make_cantor(7);
        const auto order = binary_code_order(separating_family_dendrogram(space));
        double eps = std::pow(3.0, -7) / 2 * 0.99;
        int worst = -1;
        for (int j = 0; j < 10; ++j, eps /= 2) {
            const auto r = try_snake_number_at_scale(space, order, eps, kThreads);
            if (r) worst = std::max(worst, r->best.value);
        }
        c.detail << " worst=" << worst;
        require(c, worst <= 1, "value<=1 at all ten scales");
    });
}

// 7: greedy snake engine == dynamic-program oracle on 10000 random instances.
Criterion oracle_equivalence() {
    return timed([](Criterion& c) {
        std::mt19937_64 rng(987654321);
        std::uniform_int_distribution<int> size(1, 12);
        std::uniform_real_distribution<double> density(0.0, 1.0);
        int mismatches = 0, bad_witness = 0;
        for (int trial = 0; trial < 10000; ++trial) {
            const int n = size(rng);
            std::vector<PointId> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto order = TotalOrder::from_permutation(n, perm);
            std::vector<PointId> u1, u2;
            const double p1 = density(rng), p2 = density(rng);
            for (PointId p = 0; p < n; ++p) {
                if (density(rng) < p1) u1.push_back(p);
                if (density(rng) < p2) u2.push_back(p);
            }
            const auto fast = longest_snake(order, u1, u2);
            const auto slow = longest_snake_oracle(order, u1, u2);
            if (fast.value != slow.value) ++mismatches;
            if (!check_witness(order, u1, u2, fast)) ++bad_witness;
        }
        c.detail << " mismatches=" << mismatches << " bad_witnesses=" << bad_witness;
        require(c, mismatches == 0, "greedy == oracle");
        require(c, bad_witness == 0, "witnesses check out");
    });
}

// 8: invariant battery, including thread-count determinism.
Criterion property_battery() {
    return timed([](Criterion& c) {
        std::mt19937_64 rng(13);
        int failures = 0;

        // Snake length is monotone under set inclusion and near-symmetric.
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 11);
            std::vector<PointId> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto order = TotalOrder::from_permutation(n, perm);
            std::vector<PointId> u1, u2, v1, v2;
            for (PointId p = 0; p < n; ++p) {
                const bool a = rng() % 2, b = rng() % 2;
                if (a) u1.push_back(p);
                if (b) u2.push_back(p);
                if (a && rng() % 2) v1.push_back(p);
                if (b && rng() % 2) v2.push_back(p);
            }
            if (longest_snake(order, v1, v2).value > longest_snake(order, u1, u2).value)
                ++failures;
            const int f = longest_snake(order, u1, u2).value;
            const int g = longest_snake(order, u2, u1).value;
            if (f >= 0 && g >= 0 && std::abs(f - g) > 1) ++failures;
        }

        // Per-pair profiles grow monotonically until the first overlap.
        const auto circle = make_circle(60);
        const auto corder = natural_order(circle);
        for (int trial = 0; trial < 50; ++trial) {
            const PointId x = static_cast<PointId>(rng() % 60);
            PointId y = static_cast<PointId>(rng() % 60);
            if (y == x) y = (y + 1) % 60;
            const auto prof =
                pair_snake_profile(circle, corder, x, y, {0.02, 0.05, 0.1, 0.2, 0.4});
            int prev = -2;
            for (const auto& v : prof.values) {
                if (v.overlap) break;
                if (v.snake.value < prev) ++failures;
                prev = v.snake.value;
            }
        }

        // Determinism across thread counts, including argmax and witness.
        for (const auto& space : {make_grid(2, 8), make_circle(40)}) {
            std::vector<PointId> perm(space.size());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto order = TotalOrder::from_permutation(space.size(), perm);
            for (double eps : {0.08, 0.15, 0.3}) {
                const auto a = try_snake_number_at_scale(space, order, eps, 1);
                const auto b = try_snake_number_at_scale(space, order, eps, 4);
                if (a.has_value() != b.has_value()) ++failures;
                if (a && b &&
                    (a->best.value != b->best.value || a->x != b->x || a->y != b->y ||
                     a->best.witness != b->best.witness))
                    ++failures;
            }
        }

        c.detail << " failures=" << failures;
        require(c, failures == 0, "all invariants hold");
    });
}

// 9: the adversarial bit-reversal order flunks the certificate.
Criterion adversarial_order() {
    return timed([](Criterion& c) {
        const auto space = make_grid(1, 64);
        const auto h = build_hierarchy(space, HierarchyBuilder::Brick, 4, 2);
        const auto cert = theorem_b_certificate(space, bit_reversal_order(64), h, 1, kThreads);
        c.detail << " worst=" << cert.worst_value;
        require(c, !cert.pass, "certificate fails");
        require(c, cert.worst_value >= 4, "worst snake >= 4");
    });
}

} // namespace

int main() {
    struct Entry {
        const char* name;
        Criterion (*run)();
        double budget;  // seconds; 0 = untimed
    };
    const Entry entries[] = {
        {"segment-natural-order", segment_natural, 10},
        {"circle-glued-order", circle_glued, 0},
        {"circle-exhaustive-search", circle_exhaustive, 120},
        {"grid1-certified-bound", grid1_certificate, 30},
        {"grid2-certified-bound", grid2_certificate, 300},
        {"cantor-binary-order", cantor_binary, 0},
        {"oracle-equivalence", oracle_equivalence, 0},
        {"invariant-battery", property_battery, 0},
        {"adversarial-order-detected", adversarial_order, 0},
    };

    int failures = 0;
    int index = 0;
    for (const auto& entry : entries) {
        ++index;
        Criterion c = entry.run();
        if (entry.budget > 0 && c.seconds >= entry.budget) {
            c.ok = false;
            c.detail << " over-budget(" << entry.budget << "s)";
        }
        std::printf("%s %d/%zu %s:%s time=%.2fs\n", c.ok ? "PASS" : "FAIL", index,
                    std::size(entries), entry.name, c.detail.str().c_str(), c.seconds);
        std::fflush(stdout);
        if (!c.ok) ++failures;
    }
    return failures;
}
