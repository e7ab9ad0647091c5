#include "schauder/basis.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <stdexcept>

using namespace schauder;

TEST_CASE("tent values at reference points") {
    CHECK(basis_eval({0, 0}, 0.5) == 1.0);   // peak, 2 * 1/2
    CHECK(basis_eval({0, 0}, 0.0) == 0.0);
    CHECK(basis_eval({0, 0}, 1.0) == 0.0);
    CHECK(basis_eval({0, 0}, 0.25) == 0.5);
    CHECK(basis_eval({0, 0}, 0.75) == 0.5);
    // t = 4 * 0.3125 - 1 = 0.25, value 2t
    CHECK(basis_eval({2, 1}, 0.3125) == 0.5);
}

TEST_CASE("support and range") {
    CHECK(basis_eval({3, 2}, 0.1) == 0.0);    // left of [2/8, 3/8]
    CHECK(basis_eval({3, 2}, 0.5) == 0.0);    // right of it
    CHECK(basis_eval({3, 2}, 2.0 / 8) == 0.0);
    CHECK(basis_eval({3, 2}, 5.0 / 16) == 1.0);
    testutil::Stream s(11);
    for (int k = 0; k < 200; ++k) {
        const int n = static_cast<int>(s.index(9));
        const std::int64_t i = s.index(positions_at_level(n));
        const double v = basis_eval({n, i}, s.uniform(0, 1));
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("malformed index is rejected") {
    CHECK_THROWS_AS(basis_eval({2, 4}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(basis_eval({2, -1}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(basis_eval({-1, 0}, 0.5), std::invalid_argument);
}

TEST_CASE("one active tent per level") {
    testutil::Stream s(12);
    for (int k = 0; k < 500; ++k) {
        const int n = 1 + static_cast<int>(s.index(12));
        const double x = s.uniform(1e-9, 1.0 - 1e-9);
        const std::int64_t i = active_position(n, x);
        int nonzero = 0;
        for (std::int64_t j = std::max<std::int64_t>(0, i - 2);
             j <= std::min(positions_at_level(n) - 1, i + 2); ++j) {
            if (basis_eval({n, j}, x) != 0.0) ++nonzero;
        }
        CHECK(nonzero <= 1);
        if (tent_value(n, i, x) != 0.0) CHECK(nonzero == 1);
    }
}

TEST_CASE("x = 1 clamps to the last position with value 0") {
    for (int n = 0; n <= 10; ++n) {
        CHECK(active_position(n, 1.0) == positions_at_level(n) - 1);
        CHECK(tent_value(n, active_position(n, 1.0), 1.0) == 0.0);
    }
}
