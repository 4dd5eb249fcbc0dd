#include <doctest.h>

#include <random>

#include "reference_messages.hpp"
#include "tp/solver.hpp"

using namespace tp;

TEST_CASE("difference-form solver tracks the two-component reference exactly") {
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 6;
        ScoreMatrix s(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s.set(i, j, dist(rng));

        SolverConfig cfg;
        SolverState state(s, cfg);
        testref::ReferenceState ref(s, cfg.lambda);

        for (int iter = 0; iter < 10; ++iter) {
            state.step();
            ref.step();
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    for (int k = 0; k < n; ++k) {
                        if (k == i || k == j) continue;
                        CHECK(state.messages().at(i, j, k) ==
                              doctest::Approx(ref.alpha_difference(i, j, k)).epsilon(1e-9));
                    }
                }
            }
            std::vector<double> b = state.current_b();
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    CHECK(b[static_cast<std::size_t>(i) * n + j] ==
                          doctest::Approx(ref.belief_difference(i, j)).epsilon(1e-9));
        }
    }
}
