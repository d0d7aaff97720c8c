#pragma once

// Deterministic random generators for property suites. mt19937_64 with fixed
// seeds keeps every run byte-identical.

#include <random>
#include <vector>

#include "reebcalc/orbit.hpp"
#include "reebcalc/spectra.hpp"

namespace reebcalc::test {

class OrbitGen {
public:
    explicit OrbitGen(unsigned long long seed) : rng_(seed) {}

    // Non-integer rational with denominator <= max_den, value in (-4, 4).
    Rational theta(long long max_den = 50) {
        while (true) {
            long long q = pick(2, max_den);
            long long p = pick(-4 * q, 4 * q);
            Rational r(p, q);
            if (!r.is_integer()) return r;
        }
    }

    Block block(long long max_den = 50) {
        switch (pick(0, 3)) {
            case 0:
            case 1:
                return Block::elliptic(theta(max_den));
            case 2:
                return Block::positive_hyperbolic(2 * pick(-3, 3));
            default:
                return Block::negative_hyperbolic(2 * pick(-3, 3) + 1);
        }
    }

    SimpleOrbit orbit(std::size_t n, long long max_den = 50) {
        std::vector<Block> blocks;
        for (std::size_t i = 0; i + 1 < n; ++i) blocks.push_back(block(max_den));
        long long shift = 2 * pick(-2, 2);
        Rational action(pick(1, 40), pick(1, 12));
        return SimpleOrbit("o" + std::to_string(++counter_), action,
                           OrbitLinearization(std::move(blocks), shift));
    }

    long long pick(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng_);
    }

private:
    std::mt19937_64 rng_;
    unsigned long long counter_ = 0;
};

}  // namespace reebcalc::test
