#include <array>
#include <thread>

#include "doctest.h"
#include "qtoric/bfk.hpp"
#include "qtoric/quasitoric.hpp"

using namespace qtoric;

TEST_CASE("memoized generator tables are consistent under concurrent access") {
    constexpr int kThreads = 8;
    std::array<TensorElement, kThreads> deltas;
    std::array<NSymmElement, kThreads> antipodes;
    {
        std::vector<std::thread> pool;
        for (int t = 0; t < kThreads; ++t)
            pool.emplace_back([t, &deltas, &antipodes] {
                deltas[t] = delta_bfk_generator(6 + (t % 3));
                antipodes[t] = antipode_generator(5 + (t % 3));
            });
        for (auto& th : pool)
            th.join();
    }
    for (int t = 0; t < kThreads; ++t) {
        CHECK(deltas[t] == delta_bfk_generator(6 + (t % 3)));
        CHECK(antipodes[t] == antipode_generator(5 + (t % 3)));
    }
}

TEST_CASE("concurrent characteristic numbers are bit-identical") {
    const QuasitoricData d = preset_cpn(3);
    constexpr int kThreads = 6;
    std::array<Integer, kThreads> values;
    const auto comps = compositions_of(3);
    {
        std::vector<std::thread> pool;
        for (int t = 0; t < kThreads; ++t)
            pool.emplace_back(
                [t, &values, &comps, &d] { values[t] = char_number(d, comps[t % comps.size()]); });
        for (auto& th : pool)
            th.join();
    }
    for (int t = 0; t < kThreads; ++t)
        CHECK(values[t] == char_number(d, comps[t % comps.size()]));
}
