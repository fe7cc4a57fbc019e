#include "gsa/interp.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

namespace gsa {

namespace {

// Shared precomputation for the matrix builders.
struct BinomTables {
    // binom[s][mu] = C(mu, s) mod p, mu <= max_mu
    std::vector<std::vector<uint16_t>> x_binom;
    // z_binom[t][nu] = C(nu, t) mod p, nu <= ell
    std::vector<std::vector<uint16_t>> z_binom;

    BinomTables(int p, int r, int ell, int max_mu) {
        x_binom.resize(r);
        for (int s = 0; s < r; ++s) {
            x_binom[s].resize(std::max(max_mu + 1, 1));
            for (int mu = 0; mu <= max_mu; ++mu)
                x_binom[s][mu] = static_cast<uint16_t>(binom_mod_p(mu, s, p));
        }
        z_binom.resize(r);
        for (int t = 0; t < r; ++t) {
            z_binom[t].resize(ell + 1);
            for (int nu = 0; nu <= ell; ++nu)
                z_binom[t][nu] = static_cast<uint16_t>(binom_mod_p(nu, t, p));
        }
    }
};

std::vector<uint16_t> power_table(const Field& f, uint16_t base, int max_e) {
    std::vector<uint16_t> t(max_e + 1);
    t[0] = 1;
    for (int e = 1; e <= max_e; ++e) t[e] = f.mul_raw(t[e - 1], base);
    return t;
}

std::vector<uint16_t> eta_values(const GrsCode& code, const Vector& y) {
    if (static_cast<int>(y.size()) != code.n)
        throw std::invalid_argument("received vector length does not match the code");
    std::vector<uint16_t> eta(code.n);
    for (int i = 0; i < code.n; ++i) {
        if (y[i].field != code.field)
            throw std::invalid_argument("received vector entries from the wrong field");
        eta[i] = code.field->div_raw(y[i].value, code.multipliers[i].value);
    }
    return eta;
}

std::vector<ColLabel> make_col_labels(const std::vector<int>& dG, const std::vector<int>& f_set) {
    std::vector<ColLabel> labels;
    const std::set<int> fs(f_set.begin(), f_set.end());
    for (int nu = 0; nu < static_cast<int>(dG.size()); ++nu)
        for (int mu = 0; mu <= dG[nu]; ++mu)
            labels.push_back({nu, mu, fs.count(nu) != 0});
    return labels;
}

std::vector<RowLabel> make_row_labels(int r, const std::vector<int>& points) {
    std::vector<RowLabel> labels;
    for (int s = 0; s < r; ++s)
        for (int t = 0; t < r - s; ++t)
            for (int i : points) labels.push_back({s, t, i});
    return labels;
}

struct Echelon {
    FieldMatrix m;
    std::vector<int> pivot_cols;
};

Echelon echelonize(FieldMatrix m) {
    const Field& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && m.row(sel)[col] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != rank)
            std::swap_ranges(m.row(sel), m.row(sel) + cols, m.row(rank));
        uint16_t* prow = m.row(rank);
        f.row_scale(prow + col, f.inv_raw(prow[col]), cols - col);
        for (std::size_t r2 = rank + 1; r2 < rows; ++r2) {
            uint16_t* trow = m.row(r2);
            const uint16_t factor = trow[col];
            if (factor) f.row_submul(trow + col, prow + col, factor, cols - col);
        }
        pivots.push_back(static_cast<int>(col));
        ++rank;
    }
    return {std::move(m), std::move(pivots)};
}

std::vector<FieldElement> back_substitute(const Echelon& ech, int free_col) {
    const Field& f = ech.m.field();
    const std::size_t cols = ech.m.cols();
    std::vector<uint16_t> x(cols, 0);
    x[free_col] = 1;
    for (int idx = static_cast<int>(ech.pivot_cols.size()) - 1; idx >= 0; --idx) {
        const int pc = ech.pivot_cols[idx];
        const uint16_t* row = ech.m.row(idx);
        uint16_t acc = 0;
        for (std::size_t j = pc + 1; j < cols; ++j)
            if (x[j]) acc = f.add_raw(acc, f.mul_raw(row[j], x[j]));
        x[pc] = f.neg_raw(acc);
    }
    std::vector<FieldElement> out(cols);
    for (std::size_t j = 0; j < cols; ++j) out[j] = {x[j], &f};
    return out;
}

std::vector<int> free_columns(const Echelon& ech) {
    std::vector<int> frees;
    std::size_t pi = 0;
    for (std::size_t c = 0; c < ech.m.cols(); ++c) {
        if (pi < ech.pivot_cols.size() && ech.pivot_cols[pi] == static_cast<int>(c))
            ++pi;
        else
            frees.push_back(static_cast<int>(c));
    }
    return frees;
}

}  // namespace

void FieldMatrix::set(std::size_t r, std::size_t c, FieldElement v) {
    if (v.field != field_) throw std::invalid_argument("entry from the wrong field");
    row(r)[c] = v.value;
}

void dump_matrix(std::ostream& os, const FieldMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const uint16_t* row = m.row(r);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << row[c];
        }
        os << '\n';
    }
}

InterpSystem build_full_matrix(const GrsCode& code, const GsaParams& params, const Vector& y) {
    const Field& f = *code.field;
    PrefactorPlan plan = build_plan(code, params, PrefactorMode::None);
    const auto eta = eta_values(code, y);

    const int r = params.r, ell = params.ell;
    int max_dq = 0;
    for (int d : params.dQ) max_dq = std::max(max_dq, d);
    const BinomTables bt(f.p(), r, ell, max_dq);
    std::vector<std::vector<uint16_t>> xpow(code.n), epow(code.n);
    for (int i = 0; i < code.n; ++i) {
        xpow[i] = power_table(f, code.abscissas[i].value, max_dq);
        epow[i] = power_table(f, eta[i], ell);
    }

    std::vector<int> points(code.n);
    for (int i = 0; i < code.n; ++i) points[i] = i;
    const long long rows = equation_count(code.n, params, 0);
    const long long cols = unknown_count(plan);
    InterpSystem sys{FieldMatrix(f, rows, cols), make_col_labels(params.dQ, {}),
                     make_row_labels(r, points), params, std::move(plan), code};

    std::size_t row_idx = 0;
    for (int s = 0; s < r; ++s) {
        for (int t = 0; t < r - s; ++t) {
            for (int i = 0; i < code.n; ++i, ++row_idx) {
                uint16_t* row = sys.matrix.row(row_idx);
                std::size_t oc = 0;
                for (int nu = 0; nu <= ell; ++nu) {
                    const int d = params.dQ[nu];
                    if (d < 0) continue;
                    if (nu >= t) {
                        const uint16_t czt = bt.z_binom[t][nu];
                        if (czt) {
                            const uint16_t scale = f.mul_raw(czt, epow[i][nu - t]);
                            for (int mu = s; mu <= d; ++mu) {
                                const uint16_t cxs = bt.x_binom[s][mu];
                                if (!cxs) continue;
                                row[oc + mu] =
                                    f.mul_raw(scale, f.mul_raw(cxs, xpow[i][mu - s]));
                            }
                        }
                    }
                    oc += d + 1;
                }
            }
        }
    }
    return sys;
}

FieldMatrix lemma3_exchange(const FieldMatrix& A, const std::vector<FieldElement>& beta) {
    const Field& f = A.field();
    if (beta.size() != A.cols()) throw std::invalid_argument("beta length must match columns");
    for (auto b : beta)
        if (b.field != &f) throw std::invalid_argument("beta entries from the wrong field");
    if (beta[0].is_zero()) throw std::invalid_argument("beta_0 must be nonzero");

    const std::size_t cols = A.cols();
    const uint16_t inv_b0 = f.inv_raw(beta[0].value);
    std::vector<uint16_t> ratio(cols, 0);  // beta_j / beta_0
    for (std::size_t j = 1; j < cols; ++j) ratio[j] = f.mul_raw(beta[j].value, inv_b0);

    FieldMatrix out(f, A.rows(), cols);
    for (std::size_t r = 0; r < A.rows(); ++r) {
        const uint16_t* src = A.row(r);
        uint16_t* dst = out.row(r);
        const uint16_t a0 = src[0];
        for (std::size_t j = 1; j < cols; ++j)
            dst[j - 1] = f.sub_raw(src[j], f.mul_raw(ratio[j], a0));
        dst[cols - 1] = f.mul_raw(inv_b0, a0);
    }
    return out;
}

InterpSystem reduce_matrix(const InterpSystem& sys, const PrefactorPlan& plan) {
    const Field& f = sys.matrix.field();
    if (sys.plan.mode != PrefactorMode::None)
        throw std::invalid_argument("reduce_matrix expects a full (mode none) system");
    if (plan.dG.size() != sys.params.dQ.size())
        throw std::invalid_argument("plan does not match the system's parameters");

    // Column offsets of the full system's nu-blocks.
    std::vector<std::size_t> off(sys.params.dQ.size() + 1, 0);
    for (std::size_t nu = 0; nu < sys.params.dQ.size(); ++nu)
        off[nu + 1] = off[nu] + std::max(sys.params.dQ[nu] + 1, 0);
    if (off.back() != sys.matrix.cols())
        throw std::invalid_argument("system column count does not match its parameters");

    const long long out_cols = unknown_count(plan);
    InterpSystem out{FieldMatrix(f, sys.matrix.rows(), out_cols),
                     make_col_labels(plan.dG, plan.f_set), sys.row_labels, sys.params, plan,
                     sys.code};
    out.plan.skip_rows.clear();  // rows are carried over, none skipped

    for (std::size_t r = 0; r < sys.matrix.rows(); ++r) {
        const uint16_t* src = sys.matrix.row(r);
        uint16_t* dst = out.matrix.row(r);
        std::size_t oc = 0;
        for (int nu = 0; nu < static_cast<int>(plan.dG.size()); ++nu) {
            const int dg = plan.dG[nu];
            if (dg < 0) continue;
            if (plan.has_factor(nu)) {
                const Poly& F = plan.factors.at(nu);
                const auto fc = F.coeffs();
                for (int mu = 0; mu <= dg; ++mu) {
                    uint16_t acc = 0;
                    for (int delta = 0; delta < static_cast<int>(fc.size()); ++delta)
                        if (fc[delta])
                            acc = f.add_raw(acc,
                                            f.mul_raw(fc[delta], src[off[nu] + mu + delta]));
                    dst[oc + mu] = acc;
                }
            } else {
                std::copy(src + off[nu], src + off[nu] + dg + 1, dst + oc);
            }
            oc += dg + 1;
        }
    }
    return out;
}

std::size_t ReducedBuilder::lut_index(int s, int ci, int fi) const {
    return (static_cast<std::size_t>(s) * kept_points_.size() + ci) * plan_.f_set.size() + fi;
}

ReducedBuilder::ReducedBuilder(const GrsCode& code, const GsaParams& params, PrefactorPlan plan)
    : code_(code), params_(params), plan_(std::move(plan)) {
    const Field& f = *code_.field;
    const std::set<int> skip(plan_.skip_rows.begin(), plan_.skip_rows.end());
    for (int i = 0; i < code_.n; ++i)
        if (!skip.count(i)) kept_points_.push_back(i);

    for (int d : params_.dQ) max_dq_ = std::max(max_dq_, d);
    xpow_.resize(code_.n);
    for (int i : kept_points_)
        xpow_[i] = power_table(f, code_.abscissas[i].value, max_dq_);

    const BinomTables bt(f.p(), params_.r, params_.ell, max_dq_);
    lut_.resize(static_cast<std::size_t>(params_.r) * kept_points_.size() *
                std::max<std::size_t>(plan_.f_set.size(), 1));
    for (int s = 0; s < params_.r; ++s) {
        for (std::size_t ci = 0; ci < kept_points_.size(); ++ci) {
            const int i = kept_points_[ci];
            for (std::size_t fi = 0; fi < plan_.f_set.size(); ++fi) {
                const int nu = plan_.f_set[fi];
                const int dg = plan_.dG[nu];
                if (dg < 0) continue;
                const auto fc = plan_.factors.at(nu).coeffs();
                auto& lut = lut_[lut_index(s, static_cast<int>(ci), static_cast<int>(fi))];
                lut.assign(dg + 1, 0);
                for (int mu = 0; mu <= dg; ++mu) {
                    uint16_t acc = 0;
                    for (int delta = 0; delta < static_cast<int>(fc.size()); ++delta) {
                        if (!fc[delta] || mu + delta < s) continue;
                        const uint16_t cb = bt.x_binom[s][mu + delta];
                        if (!cb) continue;
                        acc = f.add_raw(
                            acc, f.mul_raw(f.mul_raw(cb, fc[delta]), xpow_[i][mu + delta - s]));
                    }
                    lut[mu] = acc;
                }
            }
        }
    }
}

InterpSystem ReducedBuilder::build(const Vector& y) const {
    const Field& f = *code_.field;
    const auto eta = eta_values(code_, y);
    for (int i : plan_.skip_rows)
        if (!y[i].is_zero())
            throw std::invalid_argument(
                "received vector does not vanish on the re-encoding set; project it first");

    const int r = params_.r, ell = params_.ell;
    const BinomTables bt(f.p(), r, ell, max_dq_);
    std::vector<std::vector<uint16_t>> epow(code_.n);
    for (int i : kept_points_) epow[i] = power_table(f, eta[i], ell);

    const std::set<int> fs(plan_.f_set.begin(), plan_.f_set.end());
    const long long rows = equation_count(code_.n, params_, plan_.skip_rows.size());
    const long long cols = unknown_count(plan_);
    InterpSystem sys{FieldMatrix(f, rows, cols), make_col_labels(plan_.dG, plan_.f_set),
                     make_row_labels(r, kept_points_), params_, plan_, code_};

    std::size_t row_idx = 0;
    for (int s = 0; s < r; ++s) {
        for (int t = 0; t < r - s; ++t) {
            for (std::size_t ci = 0; ci < kept_points_.size(); ++ci, ++row_idx) {
                const int i = kept_points_[ci];
                uint16_t* row = sys.matrix.row(row_idx);
                std::size_t oc = 0;
                std::size_t fi = 0;
                for (int nu = 0; nu <= ell; ++nu) {
                    const int dg = plan_.dG[nu];
                    const bool in_f = fs.count(nu) != 0;
                    if (dg < 0) {
                        if (in_f) ++fi;
                        continue;
                    }
                    if (nu >= t) {
                        const uint16_t czt = bt.z_binom[t][nu];
                        if (czt) {
                            const uint16_t scale = f.mul_raw(czt, epow[i][nu - t]);
                            if (in_f) {
                                const auto& lut =
                                    lut_[lut_index(s, static_cast<int>(ci), static_cast<int>(fi))];
                                for (int mu = 0; mu <= dg; ++mu)
                                    if (lut[mu]) row[oc + mu] = f.mul_raw(scale, lut[mu]);
                            } else {
                                for (int mu = s; mu <= dg; ++mu) {
                                    const uint16_t cxs = bt.x_binom[s][mu];
                                    if (!cxs) continue;
                                    row[oc + mu] =
                                        f.mul_raw(scale, f.mul_raw(cxs, xpow_[i][mu - s]));
                                }
                            }
                        }
                    }
                    oc += dg + 1;
                    if (in_f) ++fi;
                }
            }
        }
    }
    return sys;
}

InterpSystem build_reduced_matrix(const GrsCode& code, const GsaParams& params, const Vector& y,
                                  const PrefactorPlan& plan) {
    return ReducedBuilder(code, params, plan).build(y);
}

std::vector<FieldElement> nullspace_vector(const FieldMatrix& m) {
    if (m.cols() < 1) throw std::invalid_argument("matrix without columns");
    const Echelon ech = echelonize(m);
    const auto frees = free_columns(ech);
    if (frees.empty())
        throw std::runtime_error("trivial nullspace: the system admits only the zero solution");
    return back_substitute(ech, frees.front());
}

std::vector<FieldElement> nullspace_vector(const InterpSystem& sys) {
    return nullspace_vector(sys.matrix);
}

int matrix_rank(const FieldMatrix& m) {
    return static_cast<int>(echelonize(m).pivot_cols.size());
}

std::vector<std::vector<FieldElement>> nullspace_basis(const FieldMatrix& m) {
    const Echelon ech = echelonize(m);
    std::vector<std::vector<FieldElement>> basis;
    for (int fc : free_columns(ech)) basis.push_back(back_substitute(ech, fc));
    return basis;
}

bool in_nullspace(const FieldMatrix& m, std::span<const FieldElement> v) {
    if (v.size() != m.cols()) return false;
    const Field& f = m.field();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const uint16_t* row = m.row(r);
        uint16_t acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (row[c] && v[c].value) acc = f.add_raw(acc, f.mul_raw(row[c], v[c].value));
        if (acc) return false;
    }
    return true;
}

BivarPoly assemble_q(std::span<const FieldElement> solution, const InterpSystem& sys) {
    const Field& f = *sys.code.field;
    if (solution.size() != sys.matrix.cols())
        throw std::invalid_argument("solution length does not match the system");
    BivarPoly q;
    q.rows.assign(sys.params.ell + 1, Poly(f));
    std::size_t idx = 0;
    for (int nu = 0; nu <= sys.params.ell; ++nu) {
        const int dg = sys.plan.dG[nu];
        if (dg < 0) continue;
        std::vector<uint16_t> coeffs(dg + 1);
        for (int mu = 0; mu <= dg; ++mu, ++idx) coeffs[mu] = solution[idx].value;
        Poly g(f, std::move(coeffs));
        q.rows[nu] = sys.plan.has_factor(nu) ? g * sys.plan.factors.at(nu) : std::move(g);
    }
    if (q.is_zero()) throw std::logic_error("assembled polynomial is zero");
    return q;
}

}  // namespace gsa
