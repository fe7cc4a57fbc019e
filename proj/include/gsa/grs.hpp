// Generalized Reed-Solomon code descriptor, encoder, erasures-only decoder
// and the re-encoding projection.

#pragma once

#include <utility>
#include <vector>

#include "gsa/poly.hpp"

namespace gsa {

using Vector = std::vector<FieldElement>;

struct GrsCode {
    const Field* field;
    int n;
    int k;
    std::vector<FieldElement> locators;     // A, distinct
    std::vector<FieldElement> multipliers;  // B, nonzero
    std::vector<FieldElement> abscissas;    // X, distinct interpolation points

    GrsCode(const Field& f, int n, int k, std::vector<FieldElement> locators,
            std::vector<FieldElement> multipliers, std::vector<FieldElement> abscissas);

    // Conventional RS layout: A = {alpha^i}, B = 1, X = {alpha^-i}.
    static GrsCode conventional(const Field& f, int n, int k);
    // Same point set for encoding and interpolation: A = X = {alpha^-i},
    // B = 1. End-to-end decoding fixtures use this layout.
    static GrsCode unified(const Field& f, int n, int k);

    // The code with locators replaced by the abscissas (B, X unchanged);
    // identical to *this when A == X.
    GrsCode abscissa_view() const;
};

// c_i = beta_i * u(alpha_i); requires deg u < k.
Vector encode(const GrsCode& code, const Poly& u);

// Unique codeword agreeing with exactly k known positions.
Vector erasures_only_decode(const GrsCode& code,
                            const std::vector<std::pair<int, FieldElement>>& known);

// Message polynomial of the erasures-only decoding (deg < k).
Poly erasures_only_message(const GrsCode& code,
                           const std::vector<std::pair<int, FieldElement>>& known);

struct ReencodeResult {
    Vector projected;  // v + codeword, zero on J
    Vector codeword;   // the annihilating codeword (c~), codeword_i = -v_i on J
    Poly message;      // its message polynomial
};

// Re-encoding projection R_J: |J| = k required; projected vanishes on J.
ReencodeResult reencode_project(const GrsCode& code, const std::vector<int>& J, const Vector& v);

bool is_codeword(const GrsCode& code, const Vector& v);

int hamming_distance(const Vector& a, const Vector& b);
int hamming_weight(const Vector& a);

}  // namespace gsa
