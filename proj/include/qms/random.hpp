#pragma once

#include <cstdint>

#include "qms/matrix.hpp"

namespace qms {

/// Deterministic RNG for seeded instance generation and tests. SplitMix64
/// core so streams are identical across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    /// Quaternion with integer coefficients drawn from [lo, hi].
    Quaternion quaternion(long lo = -2, long hi = 2) {
        return Quaternion(rat(uniform(lo, hi)), rat(uniform(lo, hi)), rat(uniform(lo, hi)),
                          rat(uniform(lo, hi)));
    }

    QMatrix matrix(int rows, int cols, long lo = -2, long hi = 2) {
        QMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = quaternion(lo, hi);
        return m;
    }

    /// Random invertible n x n matrix (rejection sampling; retries are rare).
    QMatrix invertible(int n, long lo = -2, long hi = 2) {
        for (;;) {
            QMatrix m = matrix(n, n, lo, hi);
            if (is_invertible(m)) return m;
        }
    }

    /// Random matrix of the given rank: product of full-rank factors.
    QMatrix of_rank(int rows, int cols, int r, long lo = -2, long hi = 2) {
        for (;;) {
            QMatrix left = matrix(rows, r, lo, hi);
            QMatrix right = matrix(r, cols, lo, hi);
            QMatrix m = left * right;
            if (rank(m) == r) return m;
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace qms
