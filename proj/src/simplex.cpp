#include "ttp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ttp {

const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal:
            return "optimal";
        case LpStatus::Infeasible:
            return "infeasible";
        case LpStatus::Unbounded:
            return "unbounded";
        case LpStatus::IterationLimit:
            return "iteration-limit";
    }
    return "?";
}

namespace {

constexpr double kZeroTol = 1e-11;
constexpr double kPivotTol = 1e-8;
constexpr int kDegenerateRunLimit = 60;

enum ColState : int { AtLower = 0, AtUpper = 1, Basic = 2 };

// -------------------------------------------------------------------------
// Floating-point bounded-variable two-phase simplex on a dense tableau.
// -------------------------------------------------------------------------

class FloatSimplex {
public:
    FloatSimplex(const Model& model, const SimplexOptions& opt) : model_(model), opt_(opt) {
        m_ = model.num_rows();
        ns_ = model.num_vars();
        const double inf = std::numeric_limits<double>::infinity();

        // columns: structural | one slack per row | artificials appended below
        lb_.assign(ns_ + m_, 0.0);
        ub_.assign(ns_ + m_, 1.0);
        for (int r = 0; r < m_; ++r) {
            switch (model.rows[r].sense) {
                case Sense::LessEqual:
                    lb_[ns_ + r] = 0.0;
                    ub_[ns_ + r] = inf;
                    break;
                case Sense::GreaterEqual:
                    lb_[ns_ + r] = -inf;
                    ub_[ns_ + r] = 0.0;
                    break;
                case Sense::Equal:
                    lb_[ns_ + r] = 0.0;
                    ub_[ns_ + r] = 0.0;
                    break;
            }
        }

        std::vector<int> art_rows;
        for (int r = 0; r < m_; ++r) {
            double s = model.rows[r].rhs.get_d();
            if (s < lb_[ns_ + r] - kZeroTol || s > ub_[ns_ + r] + kZeroTol) art_rows.push_back(r);
        }
        na_ = static_cast<int>(art_rows.size());
        ncols_ = ns_ + m_ + na_;
        lb_.resize(ncols_, 0.0);
        ub_.resize(ncols_, inf);

        tab_.assign(static_cast<std::size_t>(m_) * ncols_, 0.0);
        xb_.assign(m_, 0.0);
        basic_.assign(m_, -1);
        row_of_.assign(ncols_, -1);
        state_.assign(ncols_, AtLower);
        for (int r = 0; r < m_; ++r) {
            for (const auto& [col, coef] : model.rows[r].terms) tab_[idx(r, col)] = coef.get_d();
            tab_[idx(r, ns_ + r)] = 1.0;
        }
        for (int a = 0; a < na_; ++a) {
            int r = art_rows[a];
            double rhs = model.rows[r].rhs.get_d();
            tab_[idx(r, ns_ + m_ + a)] = rhs >= 0 ? 1.0 : -1.0;
        }
        for (int j = 0; j < ncols_; ++j) {
            if (std::isinf(lb_[j])) state_[j] = AtUpper;  // rest on the finite bound
        }
        for (int r = 0; r < m_; ++r) {
            double rhs = model.rows[r].rhs.get_d();
            bool needs_art = std::find(art_rows.begin(), art_rows.end(), r) != art_rows.end();
            int bcol = needs_art ? ns_ + m_ + static_cast<int>(std::find(art_rows.begin(), art_rows.end(), r) -
                                                               art_rows.begin())
                                 : ns_ + r;
            basic_[r] = bcol;
            row_of_[bcol] = r;
            state_[bcol] = Basic;
            xb_[r] = needs_art ? std::abs(rhs) : rhs;
        }
    }

    LpResult run() {
        LpResult res;
        cost_.assign(ncols_, 0.0);
        for (int a = 0; a < na_; ++a) cost_[ns_ + m_ + a] = 1.0;
        bool phase1_needed = na_ > 0;
        if (phase1_needed) {
            LpStatus s = optimize(true);
            if (s == LpStatus::IterationLimit) return finish(res, s);
            double infeas = current_objective();
            if (infeas > opt_.tol * std::max(1, m_)) return finish(res, LpStatus::Infeasible);
            for (int a = 0; a < na_; ++a) {
                lb_[ns_ + m_ + a] = 0.0;
                ub_[ns_ + m_ + a] = 0.0;
            }
        }
        cost_.assign(ncols_, 0.0);
        for (int j = 0; j < ns_; ++j) cost_[j] = model_.objective[j].get_d();
        LpStatus s = optimize(false);
        return finish(res, s);
    }

    long iterations() const { return iterations_; }

private:
    std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * ncols_ + c; }

    double value_of(int j) const {
        if (state_[j] == Basic) return xb_[row_of_[j]];
        return state_[j] == AtLower ? lb_[j] : ub_[j];
    }

    double current_objective() const {
        double v = 0;
        for (int j = 0; j < ncols_; ++j) {
            if (cost_[j] != 0.0) v += cost_[j] * value_of(j);
        }
        return v;
    }

    void recompute_reduced_costs() {
        d_ = cost_;
        for (int r = 0; r < m_; ++r) {
            double cb = cost_[basic_[r]];
            if (cb == 0.0) continue;
            const double* row = &tab_[idx(r, 0)];
            for (int c = 0; c < ncols_; ++c) d_[c] -= cb * row[c];
        }
    }

    int choose_entering(bool bland) const {
        int best = -1;
        double best_viol = opt_.tol;
        for (int j = 0; j < ncols_; ++j) {
            if (state_[j] == Basic || ub_[j] - lb_[j] < kZeroTol) continue;
            double viol = state_[j] == AtLower ? -d_[j] : d_[j];
            if (viol <= opt_.tol) continue;
            if (bland) return j;
            if (viol > best_viol) {
                best_viol = viol;
                best = j;
            }
        }
        return best;
    }

    LpStatus optimize(bool phase1) {
        recompute_reduced_costs();
        int degenerate_run = 0;
        long since_refresh = 0;
        while (true) {
            if (iterations_ >= opt_.max_iterations) return LpStatus::IterationLimit;
            if (++since_refresh >= 4096) {
                recompute_reduced_costs();  // counter drift from incremental updates
                since_refresh = 0;
            }
            bool bland = opt_.rule == PivotRule::SmallestIndex || degenerate_run > kDegenerateRunLimit;
            int j = choose_entering(bland);
            if (j < 0) return LpStatus::Optimal;
            int dir = state_[j] == AtLower ? 1 : -1;

            // two-pass ratio test: the relaxed first pass admits a little
            // bound slack, the second picks the largest pivot within it
            const double range = ub_[j] - lb_[j];  // may be inf
            double theta = range;
            for (int r = 0; r < m_; ++r) {
                double alpha = tab_[idx(r, j)];
                if (std::abs(alpha) <= kPivotTol) continue;
                double rate = -dir * alpha;
                double room;
                if (rate < 0) {
                    if (std::isinf(lb_[basic_[r]])) continue;
                    room = xb_[r] - lb_[basic_[r]];
                } else {
                    if (std::isinf(ub_[basic_[r]])) continue;
                    room = ub_[basic_[r]] - xb_[r];
                }
                if (room < 0) room = 0;
                theta = std::min(theta, (room + 0.01 * opt_.tol) / std::abs(rate));
            }
            if (std::isinf(theta)) {
                return phase1 ? LpStatus::IterationLimit : LpStatus::Unbounded;
            }

            int block = -1;
            bool block_to_upper = false;
            double block_alpha = 0;
            double delta = range;
            for (int r = 0; r < m_; ++r) {
                double alpha = tab_[idx(r, j)];
                if (std::abs(alpha) <= kPivotTol) continue;
                double rate = -dir * alpha;
                double room;
                bool to_upper;
                if (rate < 0) {
                    if (std::isinf(lb_[basic_[r]])) continue;
                    room = xb_[r] - lb_[basic_[r]];
                    to_upper = false;
                } else {
                    if (std::isinf(ub_[basic_[r]])) continue;
                    room = ub_[basic_[r]] - xb_[r];
                    to_upper = true;
                }
                if (room < 0) room = 0;
                double lim = room / std::abs(rate);
                if (lim > theta) continue;
                bool take = block < 0 || std::abs(alpha) > std::abs(block_alpha) + 1e-12 ||
                            (std::abs(std::abs(alpha) - std::abs(block_alpha)) <= 1e-12 &&
                             basic_[r] < basic_[block]);
                if (take) {
                    block = r;
                    block_to_upper = to_upper;
                    block_alpha = alpha;
                    delta = lim;
                }
            }
            if (block >= 0 && !std::isinf(range) && range < delta) {
                block = -1;  // the entering variable's own range binds first
                delta = range;
            }
            if (block < 0) delta = range;
            ++iterations_;
            degenerate_run = delta <= kPivotTol ? degenerate_run + 1 : 0;

            if (block < 0) {
                // bound flip
                for (int r = 0; r < m_; ++r) xb_[r] -= dir * delta * tab_[idx(r, j)];
                state_[j] = state_[j] == AtLower ? AtUpper : AtLower;
                continue;
            }

            double enter_val = value_of(j) + dir * delta;
            for (int r = 0; r < m_; ++r) {
                if (r != block) xb_[r] -= dir * delta * tab_[idx(r, j)];
            }
            int leaving = basic_[block];
            state_[leaving] = block_to_upper ? AtUpper : AtLower;
            row_of_[leaving] = -1;

            double piv = tab_[idx(block, j)];
            double* prow = &tab_[idx(block, 0)];
            for (int c = 0; c < ncols_; ++c) prow[c] /= piv;
            for (int r = 0; r < m_; ++r) {
                if (r == block) continue;
                double f = tab_[idx(r, j)];
                if (std::abs(f) <= kZeroTol) {
                    tab_[idx(r, j)] = 0;
                    continue;
                }
                double* row = &tab_[idx(r, 0)];
                for (int c = 0; c < ncols_; ++c) row[c] -= f * prow[c];
                row[j] = 0;
            }
            double f = d_[j];
            if (std::abs(f) > 0) {
                for (int c = 0; c < ncols_; ++c) d_[c] -= f * prow[c];
                d_[j] = 0;
            }
            basic_[block] = j;
            row_of_[j] = block;
            state_[j] = Basic;
            xb_[block] = enter_val;
        }
    }

    LpResult finish(LpResult res, LpStatus s) {
        res.status = s;
        res.iterations = iterations_;
        res.exact = false;
        if (s == LpStatus::Optimal) {
            res.primal.resize(ns_);
            for (int j = 0; j < ns_; ++j) res.primal[j] = value_of(j);
            double obj = 0;
            for (int j = 0; j < ns_; ++j) obj += model_.objective[j].get_d() * res.primal[j];
            res.objective = obj;
        }
        return res;
    }

    const Model& model_;
    SimplexOptions opt_;
    int m_ = 0, ns_ = 0, na_ = 0, ncols_ = 0;
    std::vector<double> tab_, xb_, lb_, ub_, cost_, d_;
    std::vector<int> basic_, row_of_, state_;
    long iterations_ = 0;
};

// -------------------------------------------------------------------------
// Exact bounded-variable two-phase simplex. Every tableau row (and the
// reduced-cost row) is an integer vector with a positive denominator; a
// pivot combines rows integrally and renormalizes by the gcd, so only rows
// with a nonzero pivot-column entry are touched.
// -------------------------------------------------------------------------

struct ExactBound {
    bool finite = true;
    Rational v;
};

class ExactSimplex {
public:
    ExactSimplex(const Model& model, const SimplexOptions& opt) : model_(model), opt_(opt) {
        m_ = model.num_rows();
        ns_ = model.num_vars();

        lo_.assign(ns_ + m_, ExactBound{true, 0});
        hi_.assign(ns_ + m_, ExactBound{true, 1});
        for (int r = 0; r < m_; ++r) {
            switch (model.rows[r].sense) {
                case Sense::LessEqual:
                    lo_[ns_ + r] = {true, 0};
                    hi_[ns_ + r] = {false, 0};
                    break;
                case Sense::GreaterEqual:
                    lo_[ns_ + r] = {false, 0};
                    hi_[ns_ + r] = {true, 0};
                    break;
                case Sense::Equal:
                    lo_[ns_ + r] = {true, 0};
                    hi_[ns_ + r] = {true, 0};
                    break;
            }
        }

        std::vector<int> art_rows;
        for (int r = 0; r < m_; ++r) {
            const Rational& rhs = model.rows[r].rhs;
            bool fits = (!lo_[ns_ + r].finite || rhs >= lo_[ns_ + r].v) &&
                        (!hi_[ns_ + r].finite || rhs <= hi_[ns_ + r].v);
            if (!fits) art_rows.push_back(r);
        }
        na_ = static_cast<int>(art_rows.size());
        ncols_ = ns_ + m_ + na_;
        lo_.resize(ncols_, ExactBound{true, 0});
        hi_.resize(ncols_, ExactBound{false, 0});

        num_.assign(m_, {});
        den_.assign(m_, BigInt(1));
        for (int r = 0; r < m_; ++r) {
            num_[r].assign(ncols_, BigInt(0));
            BigInt lcm = 1;
            for (const auto& [col, coef] : model.rows[r].terms) {
                BigInt g;
                mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), coef.get_den().get_mpz_t());
                lcm = lcm / g * coef.get_den();
            }
            for (const auto& [col, coef] : model.rows[r].terms) {
                num_[r][col] = coef.get_num() * (lcm / coef.get_den());
            }
            num_[r][ns_ + r] = lcm;
            den_[r] = lcm;
        }
        for (int a = 0; a < na_; ++a) {
            int r = art_rows[a];
            num_[r][ns_ + m_ + a] = model.rows[r].rhs >= 0 ? den_[r] : -den_[r];
        }

        xb_.assign(m_, Rational(0));
        basic_.assign(m_, -1);
        row_of_.assign(ncols_, -1);
        state_.assign(ncols_, AtLower);
        for (int j = 0; j < ncols_; ++j) {
            if (!lo_[j].finite) state_[j] = AtUpper;
        }
        for (int r = 0; r < m_; ++r) {
            bool needs_art = std::find(art_rows.begin(), art_rows.end(), r) != art_rows.end();
            int bcol;
            Rational val = model.rows[r].rhs;
            if (needs_art) {
                bcol = ns_ + m_ +
                       static_cast<int>(std::find(art_rows.begin(), art_rows.end(), r) - art_rows.begin());
                val = abs(val);
            } else {
                bcol = ns_ + r;
            }
            basic_[r] = bcol;
            row_of_[bcol] = r;
            state_[bcol] = Basic;
            xb_[r] = val;
        }
    }

    LpResult run() {
        LpResult res;
        cost_.assign(ncols_, Rational(0));
        for (int a = 0; a < na_; ++a) cost_[ns_ + m_ + a] = 1;
        if (na_ > 0) {
            LpStatus s = optimize(true);
            if (s == LpStatus::IterationLimit) return finish(res, s);
            if (current_objective() > 0) return finish(res, LpStatus::Infeasible);
            for (int a = 0; a < na_; ++a) {
                lo_[ns_ + m_ + a] = {true, 0};
                hi_[ns_ + m_ + a] = {true, 0};
            }
        }
        cost_.assign(ncols_, Rational(0));
        for (int j = 0; j < ns_; ++j) cost_[j] = model_.objective[j];
        LpStatus s = optimize(false);
        return finish(res, s);
    }

private:
    Rational value_of(int j) const {
        if (state_[j] == Basic) return xb_[row_of_[j]];
        return state_[j] == AtLower ? lo_[j].v : hi_[j].v;
    }

    Rational current_objective() const {
        Rational v = 0;
        for (int j = 0; j < ncols_; ++j) {
            if (cost_[j] != 0) v += cost_[j] * value_of(j);
        }
        return v;
    }

    void recompute_reduced_costs() {
        std::vector<Rational> d(ncols_);
        for (int j = 0; j < ncols_; ++j) d[j] = cost_[j];
        for (int r = 0; r < m_; ++r) {
            const Rational& cb = cost_[basic_[r]];
            if (cb == 0) continue;
            Rational scale = cb / Rational(den_[r]);
            for (int c = 0; c < ncols_; ++c) {
                if (num_[r][c] != 0) d[c] -= scale * Rational(num_[r][c]);
            }
        }
        BigInt lcm = 1;
        for (int c = 0; c < ncols_; ++c) {
            BigInt g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d[c].get_den().get_mpz_t());
            lcm = lcm / g * d[c].get_den();
        }
        znum_.assign(ncols_, BigInt(0));
        for (int c = 0; c < ncols_; ++c) znum_[c] = d[c].get_num() * (lcm / d[c].get_den());
        zden_ = lcm;
    }

    int choose_entering(bool bland) const {
        int best = -1;
        BigInt best_mag = 0;
        for (int j = 0; j < ncols_; ++j) {
            if (state_[j] == Basic) continue;
            if (lo_[j].finite && hi_[j].finite && lo_[j].v == hi_[j].v) continue;
            int sgn = mpz_sgn(znum_[j].get_mpz_t());
            bool eligible = state_[j] == AtLower ? sgn < 0 : sgn > 0;
            if (!eligible) continue;
            if (bland) return j;
            BigInt mag = abs(znum_[j]);
            if (mag > best_mag) {
                best_mag = mag;
                best = j;
            }
        }
        return best;
    }

    void normalize_row(std::vector<BigInt>& num, BigInt& den) {
        BigInt g = den;
        for (const BigInt& x : num) {
            if (x != 0) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
                if (g == 1) break;
            }
        }
        if (mpz_sgn(den.get_mpz_t()) < 0) g = -g;
        if (g != 1 && g != 0) {
            for (BigInt& x : num) {
                if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            }
            mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
        }
    }

    // new_row = row * p - q * pivot_row over den * p, then gcd-normalized;
    // all in place, no temporaries
    void combine_row(std::vector<BigInt>& num, BigInt& den, const BigInt& q, const std::vector<BigInt>& pnum,
                     const BigInt& p) {
        for (int c = 0; c < ncols_; ++c) {
            BigInt& x = num[c];
            if (mpz_sgn(pnum[c].get_mpz_t()) == 0) {
                if (mpz_sgn(x.get_mpz_t()) != 0) mpz_mul(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
            } else if (mpz_sgn(x.get_mpz_t()) == 0) {
                mpz_mul(x.get_mpz_t(), q.get_mpz_t(), pnum[c].get_mpz_t());
                mpz_neg(x.get_mpz_t(), x.get_mpz_t());
            } else {
                mpz_mul(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
                mpz_submul(x.get_mpz_t(), q.get_mpz_t(), pnum[c].get_mpz_t());
            }
        }
        den *= p;
        normalize_row(num, den);
    }

    LpStatus optimize(bool phase1) {
        recompute_reduced_costs();
        int degenerate_run = 0;
        while (true) {
            if (iterations_ >= opt_.max_iterations) return LpStatus::IterationLimit;
            bool bland = opt_.rule == PivotRule::SmallestIndex || degenerate_run > kDegenerateRunLimit;
            int j = choose_entering(bland);
            if (j < 0) return LpStatus::Optimal;
            int dir = state_[j] == AtLower ? 1 : -1;

            bool delta_finite = lo_[j].finite && hi_[j].finite;
            Rational delta = delta_finite ? hi_[j].v - lo_[j].v : Rational(0);
            int block = -1;
            bool block_to_upper = false;
            for (int r = 0; r < m_; ++r) {
                const BigInt& alpha_num = num_[r][j];
                int asgn = mpz_sgn(alpha_num.get_mpz_t());
                if (asgn == 0) continue;
                Rational alpha(alpha_num, den_[r]);
                alpha.canonicalize();
                Rational rate = -dir * alpha;
                Rational lim;
                bool to_upper;
                int b = basic_[r];
                if (rate < 0) {
                    if (!lo_[b].finite) continue;
                    lim = (xb_[r] - lo_[b].v) / -rate;
                    to_upper = false;
                } else {
                    if (!hi_[b].finite) continue;
                    lim = (hi_[b].v - xb_[r]) / rate;
                    to_upper = true;
                }
                if (lim < 0) lim = 0;
                bool take = !delta_finite || lim < delta;
                // exact ties leave the smallest variable index (anti-cycling)
                if (!take && lim == delta && block >= 0 && basic_[r] < basic_[block]) take = true;
                if (take) {
                    delta = lim;
                    delta_finite = true;
                    block = r;
                    block_to_upper = to_upper;
                }
            }
            if (!delta_finite) return phase1 ? LpStatus::IterationLimit : LpStatus::Unbounded;
            ++iterations_;
            degenerate_run = delta == 0 ? degenerate_run + 1 : 0;

            if (block < 0) {
                for (int r = 0; r < m_; ++r) {
                    if (num_[r][j] != 0) {
                        Rational alpha(num_[r][j], den_[r]);
                        alpha.canonicalize();
                        xb_[r] -= dir * delta * alpha;
                    }
                }
                state_[j] = state_[j] == AtLower ? AtUpper : AtLower;
                continue;
            }

            Rational enter_val = value_of(j) + dir * delta;
            for (int r = 0; r < m_; ++r) {
                if (r == block || num_[r][j] == 0) continue;
                Rational alpha(num_[r][j], den_[r]);
                alpha.canonicalize();
                xb_[r] -= dir * delta * alpha;
            }
            int leaving = basic_[block];
            state_[leaving] = block_to_upper ? AtUpper : AtLower;
            row_of_[leaving] = -1;

            BigInt p = num_[block][j];
            for (int r = 0; r < m_; ++r) {
                if (r == block || num_[r][j] == 0) continue;
                BigInt q = num_[r][j];
                combine_row(num_[r], den_[r], q, num_[block], p);
            }
            if (znum_[j] != 0) {
                BigInt q = znum_[j];
                combine_row(znum_, zden_, q, num_[block], p);
            }
            den_[block] = p;
            normalize_row(num_[block], den_[block]);

            basic_[block] = j;
            row_of_[j] = block;
            state_[j] = Basic;
            xb_[block] = enter_val;
        }
    }

    LpResult finish(LpResult res, LpStatus s) {
        res.status = s;
        res.iterations = iterations_;
        res.exact = true;
        if (s == LpStatus::Optimal) {
            res.primal_exact.resize(ns_);
            res.primal.resize(ns_);
            for (int j = 0; j < ns_; ++j) {
                res.primal_exact[j] = value_of(j);
                res.primal[j] = res.primal_exact[j].get_d();
            }
            // the optimum must satisfy every row exactly
            for (const Row& row : model_.rows) {
                Rational v = 0;
                for (const auto& [col, coef] : row.terms) v += coef * res.primal_exact[col];
                bool ok = row.sense == Sense::Equal
                              ? v == row.rhs
                              : (row.sense == Sense::LessEqual ? v <= row.rhs : v >= row.rhs);
                if (!ok) throw std::logic_error("exact simplex produced an infeasible optimum");
            }
            Rational obj = 0;
            for (int j = 0; j < ns_; ++j) obj += model_.objective[j] * res.primal_exact[j];
            res.objective_exact = obj;
            res.objective = obj.get_d();
        }
        return res;
    }

    const Model& model_;
    SimplexOptions opt_;
    int m_ = 0, ns_ = 0, na_ = 0, ncols_ = 0;
    std::vector<std::vector<BigInt>> num_;
    std::vector<BigInt> den_;
    std::vector<BigInt> znum_;
    BigInt zden_ = 1;
    std::vector<Rational> xb_, cost_;
    std::vector<ExactBound> lo_, hi_;
    std::vector<int> basic_, row_of_, state_;
    long iterations_ = 0;
};

}  // namespace

LpResult solve_simplex(const Model& model, const SimplexOptions& options) {
    if (model.integral) {
        throw std::invalid_argument("solve_simplex expects a relaxed model; call relax() first");
    }
    if (options.mode == SimplexOptions::Mode::Exact) {
        return ExactSimplex(model, options).run();
    }
    return FloatSimplex(model, options).run();
}

double max_row_residual(const Model& model, const LpResult& result) {
    if (result.status != LpStatus::Optimal) return 0.0;
    double worst = 0.0;
    for (const Row& row : model.rows) {
        if (result.exact) {
            Rational v = 0;
            for (const auto& [col, coef] : row.terms) v += coef * result.primal_exact[col];
            Rational resid = 0;
            if (row.sense == Sense::Equal) {
                resid = abs(v - row.rhs);
            } else if (row.sense == Sense::LessEqual) {
                resid = v > row.rhs ? v - row.rhs : Rational(0);
            } else {
                resid = v < row.rhs ? row.rhs - v : Rational(0);
            }
            worst = std::max(worst, resid.get_d());
        } else {
            double v = 0;
            for (const auto& [col, coef] : row.terms) v += coef.get_d() * result.primal[col];
            double rhs = row.rhs.get_d();
            double resid = 0;
            if (row.sense == Sense::Equal) {
                resid = std::abs(v - rhs);
            } else if (row.sense == Sense::LessEqual) {
                resid = std::max(0.0, v - rhs);
            } else {
                resid = std::max(0.0, rhs - v);
            }
            worst = std::max(worst, resid);
        }
    }
    return worst;
}

}  // namespace ttp
