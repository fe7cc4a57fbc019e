// Finite field arithmetic for F_{p^m}, q <= 2^16, with exposed characteristic.
//
// Elements are encoded as packed base-p digit integers in [0, q): the base-p
// digits of the encoding are the coefficients of the residue polynomial (for
// m = 1 the encoding is the residue mod p). Multiplication and division run
// on log/antilog tables over a verified primitive element.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gsa {

class Field;

// A value of a specific field. Operations on elements from different Field
// instances throw std::invalid_argument.
struct FieldElement {
    uint16_t value{0};
    const Field* field{nullptr};

    bool is_zero() const { return value == 0; }
    bool operator==(const FieldElement& o) const = default;
};

FieldElement operator+(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a, FieldElement b);
FieldElement operator*(FieldElement a, FieldElement b);
FieldElement operator/(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a);
FieldElement inverse(FieldElement a);
FieldElement pow(FieldElement a, long long e);

// Immutable descriptor of F_{p^m}. Instances are interned (see make_field)
// and live for the duration of the program, so FieldElement may hold a plain
// pointer. All member functions are const and thread-safe.
class Field {
  public:
    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    // Monic modulus, ascending coefficients, size m+1; empty when m == 1.
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const { return {0, this}; }
    FieldElement one() const { return {1, this}; }
    FieldElement alpha() const { return {alpha_, this}; }
    FieldElement element(long long v) const;

    // (n mod p) * 1, the canonical image of an integer in the prime subfield.
    FieldElement embed_int(unsigned long long n) const {
        return {static_cast<uint16_t>(n % static_cast<unsigned long long>(p_)), this};
    }

    uint16_t add_raw(uint16_t a, uint16_t b) const;
    uint16_t sub_raw(uint16_t a, uint16_t b) const;
    uint16_t neg_raw(uint16_t a) const;
    uint16_t mul_raw(uint16_t a, uint16_t b) const;
    uint16_t div_raw(uint16_t a, uint16_t b) const;  // b != 0
    uint16_t inv_raw(uint16_t a) const;              // a != 0
    uint16_t pow_raw(uint16_t a, long long e) const;

    int log(uint16_t a) const;          // a != 0; discrete log base alpha
    uint16_t antilog(int e) const;      // alpha^e, e reduced mod q-1

    // dst[j] -= f * src[j] for j in [0, len); the elimination kernel.
    void row_submul(uint16_t* dst, const uint16_t* src, uint16_t f, std::size_t len) const;
    void row_scale(uint16_t* dst, uint16_t f, std::size_t len) const;

    std::string describe() const;  // e.g. "F_27 = F_3[x]/(1+2x+x^3)"

  private:
    friend const Field& make_field(int, int, const std::vector<int>&);
    Field(int p, int m, std::vector<int> modulus);

    uint16_t poly_mul_mod(uint16_t a, uint16_t b) const;  // table-free; setup only

    int p_, m_, q_;
    std::vector<int> modulus_;
    uint16_t alpha_{0};
    std::vector<uint16_t> antilog_;  // size q-1
    std::vector<int> log_;           // size q; log_[0] = -1
    // Dense q*q tables for small fields; empty otherwise.
    std::vector<uint16_t> add_tab_, sub_tab_, mul_tab_;
    bool xor_add_{false};  // p == 2: addition is XOR
};

// Returns the interned descriptor of F_{p^m}. With an empty modulus and
// m > 1, a built-in table supplies the lexicographically smallest monic
// irreducible for p = 2 (m <= 16) and p = 3 (m <= 8). Throws
// std::invalid_argument for non-prime p, q > 2^16, a reducible modulus, or
// an unsupported (p, m) without an explicit modulus.
const Field& make_field(int p, int m, const std::vector<int>& modulus = {});

}  // namespace gsa
