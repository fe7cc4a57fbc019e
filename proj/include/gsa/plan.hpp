// GSA parameterization (decoding radius, per-row degree bounds) and
// prefactor plans for the four modes: none, re-encoding, sierpinski and
// combined. A plan fixes the received-word-independent factors F_nu(x) of
// the interpolation solution rows together with the quotient degree bounds
// that size the reduced linear system.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsa/grs.hpp"
#include "gsa/sierpinski.hpp"

namespace gsa {

struct GsaParams {
    int r{0};
    int ell{0};
    long long eps0_num{0};  // exact decoding radius as a reduced fraction
    long long eps0_den{1};
    int eps_max{0};         // largest integer strictly below eps0
    std::vector<int> dQ;    // d_nu^Q for nu = 0..ell; negative means row absent
};

// eps0 = n(2l-r+1)/(2(l+1)) - l(k-1)/(2r), eps_max = ceil(eps0)-1,
// dQ[nu] = r(n - eps_max) - nu(k-1) - 1. Throws when eps_max < 0 (the
// parameters cannot correct any error) or r/ell are out of range.
GsaParams derive_params(const GrsCode& code, int r, int ell);

enum class PrefactorMode { None, Reencoding, Sierpinski, Combined };

std::string to_string(PrefactorMode m);
PrefactorMode mode_from_string(const std::string& s);

struct PrefactorPlan {
    PrefactorMode mode{PrefactorMode::None};       // requested
    PrefactorMode effective{PrefactorMode::None};  // after degeneration
    std::vector<int> J;                            // re-encoding set, empty or size k
    std::vector<int> f_set;                        // rows with nontrivial prefactor, sorted
    std::map<int, Poly> factors;                   // nu -> F_nu(x), nu in f_set
    std::vector<int> dG;                           // quotient bounds; == dQ outside f_set
    std::vector<int> skip_rows;                    // points omitted from the system
    SierpinskiContext sier;

    bool has_factor(int nu) const { return factors.count(nu) != 0; }
};

// Integer-only skeleton of a plan: f_set, dG, prefactor degrees and the
// skipped-point count, without constructing the factor polynomials. This is
// what unknown-count scans use.
struct PlanShape {
    PrefactorMode mode{PrefactorMode::None};
    PrefactorMode effective{PrefactorMode::None};
    std::vector<int> f_set;
    std::vector<int> dG;
    std::map<int, int> factor_degree;  // nu -> deg F_nu
    int skipped_points{0};
};

PlanShape plan_shape(int n, int k, const GsaParams& params, PrefactorMode mode,
                     const SierpinskiContext& sier);

// Degenerate rows (dG < 0) contribute no unknowns.
long long unknown_count(const PlanShape& shape);
long long unknown_count(const PrefactorPlan& plan);

// Rows of the (reduced) system: (n - skipped) * r(r+1)/2.
long long equation_count(int n, const GsaParams& params, int skipped_points);

// Lexicographically last k positions {n-k, ..., n-1}; the deterministic
// choice the decoder uses when no re-encoding set is supplied.
std::vector<int> default_reencoding_set(const GrsCode& code);

// Builds the full plan with factor polynomials over the code's abscissas.
// J is required for re-encoding/combined (|J| = k, distinct, in range) and
// ignored otherwise. Sierpinski mode with an empty resolvable set degrades
// to mode none; combined degrades to re-encoding (reported in `effective`).
PrefactorPlan build_plan(const GrsCode& code, const GsaParams& params, PrefactorMode mode,
                         const std::optional<std::vector<int>>& J = std::nullopt);

}  // namespace gsa
