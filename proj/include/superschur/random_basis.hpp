#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>

#include "superschur/superalgebra.hpp"

namespace superschur {

// Seed for randomized property tests: SUPERSCHUR_SEED when set, otherwise a
// fixed default so runs are reproducible out of the box.
inline std::uint64_t seed_from_env() {
    if (const char* s = std::getenv("SUPERSCHUR_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            // fall through to the default on junk input
        }
    }
    return 20260817ULL;
}

inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Invertible k x k matrix with small integer entries (retries on a singular
// draw; the singular set has measure ~0, so a handful of tries suffices).
inline Mat random_invertible(std::size_t k, std::mt19937_64& rng) {
    if (k == 0) return Mat(0, 0);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Mat s(k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) s.at(r, c) = Rat(rand_int(rng, -3, 3));
        if (s.inverse()) return s;
    }
    throw std::logic_error("random_invertible: no invertible draw in 100 attempts");
}

// Random invertible parity-preserving change of basis of L.
inline LieSuperalgebra random_parity_change(const LieSuperalgebra& L, std::mt19937_64& rng) {
    Mat se = random_invertible(L.m(), rng);
    Mat so = random_invertible(L.n(), rng);
    return L.change_basis(se, so);
}

}  // namespace superschur
