// The GSA interpolation linear system: full coefficient matrix, Lemma-3
// column exchanges, prefactor reduction, direct construction of the reduced
// matrix from a lookup table, nullspace extraction and reassembly of the
// bivariate solution Q(x, z).

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "gsa/plan.hpp"

namespace gsa {

// Dense row-major matrix of raw element encodings.
class FieldMatrix {
  public:
    FieldMatrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    uint16_t* row(std::size_t i) { return data_.data() + i * cols_; }
    const uint16_t* row(std::size_t i) const { return data_.data() + i * cols_; }
    FieldElement at(std::size_t r, std::size_t c) const { return {row(r)[c], field_}; }
    void set(std::size_t r, std::size_t c, FieldElement v);
    bool operator==(const FieldMatrix& o) const = default;

  private:
    const Field* field_;
    std::size_t rows_, cols_;
    std::vector<uint16_t> data_;
};

// Debug dump: one row per line, space-separated element integers. Not a
// stable interface.
void dump_matrix(std::ostream& os, const FieldMatrix& m);

struct ColLabel {
    int nu;
    int mu;
    bool quotient;  // true: G_{nu,mu}; false: Q_{nu,mu}
    bool operator==(const ColLabel&) const = default;
};

struct RowLabel {
    int s;
    int t;
    int point;
    bool operator==(const RowLabel&) const = default;
};

struct InterpSystem {
    FieldMatrix matrix;
    std::vector<ColLabel> col_labels;  // canonical order: nu ascending, mu ascending
    std::vector<RowLabel> row_labels;
    GsaParams params;
    PrefactorPlan plan;
    GrsCode code;
};

// Full system of Problem 1: rows (s, t, i) for s+t < r, i = 0..n-1; entry
// for column (nu, mu) with nu >= t, mu >= s is
// C(nu,t) C(mu,s) x_i^{mu-s} eta_i^{nu-t}, eta_i = y_i / beta_i.
InterpSystem build_full_matrix(const GrsCode& code, const GsaParams& params, const Vector& y);

// Exchanges solution variable x_0 for y = sum_i beta_i x_i (beta_0 != 0):
// returns (a_1 - (b1/b0)a_0, ..., a_{m-1} - (b_{m-1}/b0)a_0, (1/b0)a_0).
FieldMatrix lemma3_exchange(const FieldMatrix& A, const std::vector<FieldElement>& beta);

// Applies the preparation/reduction column exchanges for the plan's
// prefactors: the column for G_{nu,mu} becomes
// sum_{D=0}^{deg F_nu} F_{nu,D} a_{(nu, mu+D)}, columns for
// Q_{nu, dG+1..dQ} are dropped. Rows are kept (rows at points in J are
// identically zero when the input was built on a projected word).
InterpSystem reduce_matrix(const InterpSystem& sys, const PrefactorPlan& plan);

// Builds reduced systems directly. The lookup table
// LUT[s,i,nu,mu] = sum_D C(mu+D, s) x_i^{mu+D-s} F_{nu,D} is precomputed
// once per (code, params, plan) and shared across received words.
class ReducedBuilder {
  public:
    ReducedBuilder(const GrsCode& code, const GsaParams& params, PrefactorPlan plan);
    // For re-encoding/combined plans y must already be projected (zero on
    // the skipped positions); throws otherwise.
    InterpSystem build(const Vector& y) const;
    const PrefactorPlan& plan() const { return plan_; }

  private:
    GrsCode code_;
    GsaParams params_;
    PrefactorPlan plan_;
    std::vector<int> kept_points_;
    int max_dq_{0};
    std::vector<std::vector<uint16_t>> xpow_;  // xpow_[i][e] = x_i^e
    // lut_[((s * kept + ci) * |f_set| + fi)][mu]
    std::vector<std::vector<uint16_t>> lut_;
    std::size_t lut_index(int s, int ci, int fi) const;
};

InterpSystem build_reduced_matrix(const GrsCode& code, const GsaParams& params, const Vector& y,
                                  const PrefactorPlan& plan);

// Deterministic nonzero nullspace vector: row reduction with lexicographic
// pivoting, first free column set to 1, remaining free columns 0. Throws
// std::runtime_error when the nullspace is trivial.
std::vector<FieldElement> nullspace_vector(const FieldMatrix& m);
std::vector<FieldElement> nullspace_vector(const InterpSystem& sys);

int matrix_rank(const FieldMatrix& m);
std::vector<std::vector<FieldElement>> nullspace_basis(const FieldMatrix& m);
bool in_nullspace(const FieldMatrix& m, std::span<const FieldElement> v);

// Q_nu = G_nu * F_nu for rows with a prefactor, Q_nu read directly
// otherwise. Throws std::logic_error on an all-zero assembly.
BivarPoly assemble_q(std::span<const FieldElement> solution, const InterpSystem& sys);

}  // namespace gsa
