#pragma once

// Small seeded generators for property tests.

#include "carrychain/matrix.hpp"
#include "carrychain/rational.hpp"

#include <cstdint>
#include <random>

namespace testing_support {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    carrychain::Rational rational(std::int64_t span = 9, std::int64_t max_den = 6) {
        return carrychain::Rational(integer(-span, span), integer(1, max_den));
    }

    carrychain::Matrix matrix(std::size_t rows, std::size_t cols) {
        carrychain::Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational();
        return m;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace testing_support
