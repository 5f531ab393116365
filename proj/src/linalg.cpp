#include "ttp/linalg.hpp"

#include <stdexcept>

namespace ttp {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((u128(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t submul(std::uint64_t x, std::uint64_t f, std::uint64_t y, std::uint64_t p) {
    // x - f*y mod p
    std::uint64_t t = mulmod(f, y, p);
    return x >= t ? x - t : x + p - t;
}

}  // namespace

void IntMatrix::append_row(std::span<const BigInt> row) {
    if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

IntMatrix RationalMatrix::scaled_to_integers() const {
    IntMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        BigInt lcm = 1;
        for (std::size_t c = 0; c < cols_; ++c) {
            const BigInt& den = at(r, c).get_den();
            BigInt g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& q = at(r, c);
            out.at(r, c) = q.get_num() * (lcm / q.get_den());
        }
    }
    return out;
}

long exact_rank(IntMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> col_of(cols);
    for (std::size_t c = 0; c < cols; ++c) col_of[c] = c;

    BigInt prev_pivot = 1;
    std::size_t step = 0;
    while (step < rows && step < cols) {
        // find any nonzero pivot in the remaining block
        std::size_t pr = rows, pc = cols;
        for (std::size_t c = step; c < cols && pr == rows; ++c) {
            for (std::size_t r = step; r < rows; ++r) {
                if (m.at(r, col_of[c]) != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
            }
        }
        if (pr == rows) break;
        if (pr != step) {
            for (std::size_t c = 0; c < cols; ++c) swap(m.at(step, c), m.at(pr, c));
        }
        std::swap(col_of[step], col_of[pc]);

        const BigInt pivot = m.at(step, col_of[step]);
        for (std::size_t r = step + 1; r < rows; ++r) {
            const BigInt factor = m.at(r, col_of[step]);
            for (std::size_t c = step + 1; c < cols; ++c) {
                BigInt& x = m.at(r, col_of[c]);
                x = x * pivot - factor * m.at(step, col_of[c]);
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            m.at(r, col_of[step]) = 0;
        }
        prev_pivot = pivot;
        ++step;
    }
    return static_cast<long>(step);
}

long exact_rank(const RationalMatrix& m) { return exact_rank(m.scaled_to_integers()); }

long rank_modulo(const IntMatrix& m, std::uint64_t prime) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<std::uint64_t> v(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            BigInt mod;
            mpz_mod_ui(mod.get_mpz_t(), m.at(r, c).get_mpz_t(), prime);
            v[c] = mod.get_ui();
        }
        for (std::size_t b = 0; b < basis.size(); ++b) {
            std::uint64_t f = v[pivots[b]];
            if (f == 0) continue;
            for (std::size_t c = 0; c < cols; ++c) v[c] = submul(v[c], f, basis[b][c], prime);
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (v[c] != 0) {
                std::uint64_t inv = powmod(v[c], prime - 2, prime);
                for (std::size_t cc = 0; cc < cols; ++cc) v[cc] = mulmod(v[cc], inv, prime);
                basis.push_back(std::move(v));
                pivots.push_back(c);
                break;
            }
        }
    }
    return static_cast<long>(basis.size());
}

bool is_nonsingular(const IntMatrix& square) {
    if (square.rows() != square.cols()) return false;
    return exact_rank(square) == static_cast<long>(square.rows());
}

AffineRankTracker::AffineRankTracker(std::size_t dim, long target) : dim_(dim), target_(target) {}

bool AffineRankTracker::offer(std::span<const std::uint8_t> point) {
    if (point.size() != dim_) throw std::invalid_argument("point dimension mismatch");
    ++offered_;
    if (!anchored_) {
        anchor_.assign(point.begin(), point.end());
        anchored_ = true;
        return false;
    }
    if (target_reached()) return false;

    std::vector<std::uint64_t> v(dim_);
    bool any = false;
    for (std::size_t c = 0; c < dim_; ++c) {
        int d = static_cast<int>(point[c]) - static_cast<int>(anchor_[c]);
        v[c] = d == 0 ? 0 : (d > 0 ? 1 : kPrime - 1);
        any |= d != 0;
    }
    if (!any) return false;
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        std::uint64_t f = v[pivots_[b]];
        if (f == 0) continue;
        const auto& row = basis_[b];
        for (std::size_t c = 0; c < dim_; ++c) v[c] = submul(v[c], f, row[c], kPrime);
    }
    for (std::size_t c = 0; c < dim_; ++c) {
        if (v[c] != 0) {
            std::uint64_t inv = powmod(v[c], kPrime - 2, kPrime);
            for (std::size_t cc = 0; cc < dim_; ++cc) v[cc] = mulmod(v[cc], inv, kPrime);
            std::vector<int> diff(dim_);
            for (std::size_t cc = 0; cc < dim_; ++cc) {
                diff[cc] = static_cast<int>(point[cc]) - static_cast<int>(anchor_[cc]);
            }
            basis_.push_back(std::move(v));
            pivots_.push_back(c);
            kept_.push_back(std::move(diff));
            return true;
        }
    }
    return false;
}

long AffineRankTracker::exact_rank_certificate() const {
    if (kept_.empty()) return 0;
    IntMatrix m(kept_.size(), dim_);
    for (std::size_t r = 0; r < kept_.size(); ++r) {
        for (std::size_t c = 0; c < dim_; ++c) m.at(r, c) = kept_[r][c];
    }
    return exact_rank(std::move(m));
}

}  // namespace ttp
