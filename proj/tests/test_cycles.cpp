#include <functional>
#include <map>
#include <random>

#include "locsep/cycles.hpp"
#include "locsep/gf2.hpp"
#include "support.hpp"

using namespace test;
namespace fx = locsep::fixtures;

namespace {

// Number of simple cycles of length <= bound, by brute force over vertex sequences. Unit lengths,
// no parallel edges or loops.
long brute_cycle_count(const MultiGraph& g, long bound) {
    const int n = g.num_vertices();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
    long count = 0;
    std::vector<int> path;
    std::vector<char> used(n, 0);
    // Count each cycle once: smallest vertex first, second vertex < last vertex.
    std::function<void(int)> extend = [&](int start) {
        const int last = path.back();
        if (path.size() >= 3 && adj[last][start] && path[1] < last) ++count;
        if (static_cast<long>(path.size()) >= bound) return;
        for (int y = start + 1; y < n; ++y)
            if (!used[y] && adj[last][y]) {
                used[y] = 1;
                path.push_back(y);
                extend(start);
                path.pop_back();
                used[y] = 0;
            }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        used.assign(n, 0);
        used[s] = 1;
        extend(s);
    }
    return count;
}

}  // namespace

TEST_CASE("short cycles of C6 and K4") {
    const MultiGraph c6 = fx::cycle(6);
    CHECK(enumerate_short_cycles(c6, 5).cycles.empty());
    const CycleSet six = enumerate_short_cycles(c6, 6);
    REQUIRE(six.cycles.size() == 1);
    CHECK(six.cycles[0].length == 6);

    const CycleSet tri = enumerate_short_cycles(fx::complete(4), 3);
    CHECK(tri.cycles.size() == 4);
    for (const Cycle& c : tri.cycles) CHECK(c.vertices.size() == 3);
}

TEST_CASE("loops and digons are short cycles") {
    const MultiGraph g = graph("a a\na b\na b\nb c 5\n");
    const CycleSet cs = enumerate_short_cycles(g, 2);
    REQUIRE(cs.cycles.size() == 2);
    std::multiset<long> lengths;
    for (const Cycle& c : cs.cycles) lengths.insert(c.length);
    CHECK(lengths == std::multiset<long>{1, 2});
    CHECK(cycle_space_dim(g) == 2);
}

TEST_CASE("cycle space dimension") {
    CHECK(cycle_space_dim(fx::cycle(6)) == 1);
    CHECK(cycle_space_dim(fx::prism6()) == 19);
    CHECK(cycle_space_dim(fx::path(5)) == 0);
}

TEST_CASE("short cycle rank") {
    const MultiGraph c6 = fx::cycle(6);
    CHECK(short_cycle_rank(c6, 5) == 0);
    CHECK(short_cycle_rank(c6, 6) == 1);
    CHECK(short_cycle_rank(fx::complete(4), 3) == 3);
}

TEST_CASE("triplex") {
    CHECK(triplex(fx::cycle(6), Scale::of(6)) == Triplex{1, 1, 6});
    CHECK(triplex(fx::complete(4), Scale::of(3)) == Triplex{3, 3, 4});
    MultiGraph one;
    one.add_vertex("x");
    CHECK(triplex(one, Scale::of(3)) == Triplex{0, 0, 1});
    // Smaller gamma first; then larger gammabar; then fewer vertices.
    CHECK(Triplex{1, 0, 9} < Triplex{2, 2, 1});
    CHECK(Triplex{2, 2, 9} < Triplex{2, 1, 1});
    CHECK(Triplex{2, 2, 3} < Triplex{2, 2, 4});
}

TEST_CASE("generation by short cycles in balls") {
    const MultiGraph c6 = fx::cycle(6);
    CHECK(check_generation(c6, ball(c6, 0, Radius2{6, false}), Scale::of(6)));
    CHECK(check_generation(c6, ball(c6, 0, Radius2{4, false}), Scale::of(4)));
    const MultiGraph k4 = fx::complete(4);
    CHECK(check_generation(k4, ball(k4, 0, Radius2{3, false}), Scale::of(3)));
}

TEST_CASE("generation is sharp on C_r") {
    for (long r = 3; r <= 8; ++r) {
        const MultiGraph c = fx::cycle(static_cast<int>(r));
        CHECK(short_cycle_rank(c, r - 1) == 0);
        CHECK(cycle_space_dim(c) == 1);
        CHECK(check_generation(c, ball(c, 0, Radius2::half_of(Scale::of(r))), Scale::of(r)));
    }
}

TEST_CASE("the expansion budget is a hard limit") {
    ExpansionBudget tiny(5);
    CHECK(error_kind([&] { enumerate_short_cycles(fx::complete(6), 6, &tiny); }) == ErrorKind::cap_exceeded);
}

TEST_CASE("property: enumeration matches brute force on simple graphs") {
    fx::Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const MultiGraph g = fx::random_2_connected(rng, 9);
        for (long bound = 3; bound <= 7; ++bound)
            CHECK(static_cast<long>(enumerate_short_cycles(g, bound).cycles.size()) == brute_cycle_count(g, bound));
    }
}

TEST_CASE("property: short cycle rank is monotone and reaches the cycle space") {
    fx::Rng rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const MultiGraph g = fx::random_multigraph(rng, 8);
        long prev = 0;
        for (long bound = 1; bound <= g.total_length(); ++bound) {
            const long rank = short_cycle_rank(g, bound);
            CHECK(rank >= prev);
            prev = rank;
        }
        CHECK(short_cycle_rank(g, std::max(1L, g.total_length())) == cycle_space_dim(g));
    }
}

TEST_CASE("property: short cycles generate the cycle space of every ball") {
    fx::Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const MultiGraph g = fx::random_multigraph(rng, 10);
        for (long r = 3; r <= 8; ++r)
            for (int v = 0; v < g.num_vertices(); ++v)
                CHECK(check_generation(g, ball(g, v, Radius2::half_of(Scale::of(r))), Scale::of(r)));
    }
}

TEST_CASE("GF(2) kernels agree bit for bit") {
    std::mt19937_64 rng(24);
    for (std::size_t words : {1u, 3u, 4u, 5u, 8u, 17u, 64u}) {
        std::vector<gf2::Word> a(words), b(words);
        for (auto& w : a) w = rng();
        for (auto& w : b) w = rng();
        std::vector<gf2::Word> scalar = a;
        gf2::xor_into_scalar(scalar.data(), b.data(), words);
        for (std::size_t i = 0; i < words; ++i) CHECK(scalar[i] == (a[i] ^ b[i]));
#if defined(LOCSEP_HAVE_AVX2)
        if (gf2::avx2_available()) {
            std::vector<gf2::Word> wide = a;
            gf2::xor_into_avx2(wide.data(), b.data(), words);
            CHECK(wide == scalar);
        }
#endif
    }
}

TEST_CASE("GF(2) rank under both kernels matches the span size") {
    std::mt19937_64 rng(25);
    const gf2::Kernel before = gf2::active_kernel();
    for (gf2::Kernel k : {gf2::Kernel::scalar, gf2::Kernel::avx2}) {
        gf2::select_kernel(k);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t bits = 1 + rng() % 10;
            const int rows = 1 + static_cast<int>(rng() % 6);
            std::vector<gf2::BitVector> vs;
            for (int i = 0; i < rows; ++i) {
                gf2::BitVector v(bits);
                for (std::size_t b = 0; b < bits; ++b)
                    if (rng() & 1) v.set(b);
                vs.push_back(v);
            }
            // The span has 2^rank elements.
            std::set<std::vector<bool>> span;
            for (int mask = 0; mask < (1 << rows); ++mask) {
                std::vector<bool> sum(bits, false);
                for (int i = 0; i < rows; ++i)
                    if (mask >> i & 1)
                        for (std::size_t b = 0; b < bits; ++b) sum[b] = sum[b] != vs[i].test(b);
                span.insert(sum);
            }
            const std::size_t expected = std::size_t{1} << gf2::rank(vs);
            CHECK(expected == span.size());
        }
    }
    gf2::select_kernel(before);
}
