// GSA factorization step (z-roots of Q via the Roth-Ruckenstein recursion),
// result-list assembly and the end-to-end decode pipeline over all prefactor
// modes.

#pragma once

#include <vector>

#include "gsa/interp.hpp"

namespace gsa {

// All w(x) with deg w < k and (z - w(x)) | Q(x, z). Every candidate from the
// recursion is post-verified by exact division before it is returned.
std::vector<Poly> z_roots(const BivarPoly& Q, int k);

struct ListEntry {
    Poly message;     // w(x), deg < k
    Vector codeword;  // beta_i * w(x_i) on the abscissas
    int distance;     // Hamming distance to the received word
};

struct DecodeDiagnostics {
    PrefactorMode requested{PrefactorMode::None};
    PrefactorMode effective{PrefactorMode::None};
    std::vector<int> reencoding_set;  // empty when unused
    long long unknowns{0};            // columns of the solved system
    long long unknowns_full{0};       // columns of the unreduced system
    long long rows{0};
    double build_seconds{0};
    double solve_seconds{0};
    double factor_seconds{0};
};

struct DecodeResult {
    std::vector<ListEntry> list;  // sorted by distance, then message
    BivarPoly q;                  // the interpolation solution
    DecodeDiagnostics diag;
};

// Full pipeline: (projection for re-encoding modes over J = {n-k..n-1}) ->
// plan -> reduced matrix -> nullspace -> Q -> z-roots -> candidate filter by
// distance <= eps_max. If some codeword c (on the abscissas) satisfies
// d(y, c) <= eps_max, then c is in the list, for every mode.
DecodeResult gsa_decode(const GrsCode& code, const GsaParams& params, const Vector& y,
                        PrefactorMode mode);

struct ModeApplicability {
    SierpinskiContext sier;
    bool sierpinski_applicable{false};  // R0 nonempty
    // effective mode after degeneration, indexed like PrefactorMode
    PrefactorMode effective_of[4];
};

ModeApplicability mode_applicability(const GrsCode& code, const GsaParams& params);

}  // namespace gsa
