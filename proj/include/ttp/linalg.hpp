#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ttp/numeric.hpp"

namespace ttp {

class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void append_row(std::span<const BigInt> row);

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> a_;
};

class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    /// Scales every row by the least common denominator.
    IntMatrix scaled_to_integers() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Exact rank by fraction-free elimination with full pivoting. Intermediate
/// entries are minors of the input, so they stay integral; each step
/// divides exactly by the previous pivot.
long exact_rank(IntMatrix m);
long exact_rank(const RationalMatrix& m);

/// Rank over the prime field; nonzero result rows certify exact linear
/// independence, so this doubles as a cross-check oracle.
long rank_modulo(const IntMatrix& m, std::uint64_t prime);

bool is_nonsingular(const IntMatrix& square);

/// Incremental affine dimension of a streamed point set. Differences to the
/// first point are reduced against a growing echelon basis modulo a 61-bit
/// prime; independence modulo the prime implies exact independence, and the
/// kept difference vectors can be certified afterwards by exact_rank.
/// Stops growing once the caller-supplied target rank is reached.
class AffineRankTracker {
public:
    AffineRankTracker(std::size_t dim, long target);

    /// Returns true if the point increased the affine rank.
    bool offer(std::span<const std::uint8_t> point);

    long rank() const { return static_cast<long>(pivots_.size()); }
    bool target_reached() const { return target_ >= 0 && rank() >= target_; }
    long points_offered() const { return offered_; }
    bool has_anchor() const { return !anchor_.empty() || anchored_; }

    /// Exact rank of the collected independent difference vectors; always
    /// equals rank() (modular independence is sound), computed as a
    /// certificate.
    long exact_rank_certificate() const;

private:
    static constexpr std::uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1

    std::size_t dim_;
    long target_;
    long offered_ = 0;
    bool anchored_ = false;
    std::vector<std::uint8_t> anchor_;
    std::vector<std::vector<std::uint64_t>> basis_;  // echelon rows mod prime, pivot normalized to 1
    std::vector<std::size_t> pivots_;                // pivot column per basis row
    std::vector<std::vector<int>> kept_;             // exact difference vectors backing the basis
};

}  // namespace ttp
