#include "gsa/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace gsa {

namespace {

constexpr int kMaxQ = 1 << 16;
constexpr int kDenseTableMaxQ = 256;  // q*q lookup tables up to 128 KiB each

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Monic polynomials over F_p packed as integers, ascending digits.
std::vector<int> unpack(long long v, int p, int deg) {
    std::vector<int> c(deg + 1, 0);
    for (int i = 0; i <= deg && v; ++i) {
        c[i] = static_cast<int>(v % p);
        v /= p;
    }
    return c;
}

// Remainder of a by monic b over F_p, both ascending-coefficient vectors.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            int& x = a[i - db + j];
            x = (x - c * b[j]) % p;
            if (x < 0) x += p;
        }
    }
    a.resize(db);
    return a;
}

bool poly_is_zero(const std::vector<int>& a) {
    return std::all_of(a.begin(), a.end(), [](int v) { return v == 0; });
}

// Trial division by all monic polynomials of degree 1..deg/2.
bool is_irreducible(const std::vector<int>& f, int p) {
    const int m = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= m / 2; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long t = 0; t < count; ++t) {
            std::vector<int> g = unpack(t, p, d);
            g[d] = 1;
            if (poly_is_zero(poly_rem(f, g, p))) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducibles (ascending coefficients,
// leading 1 omitted, packed base p).
const std::map<std::pair<int, int>, std::vector<int>>& default_moduli() {
    static const std::map<std::pair<int, int>, std::vector<int>> tab = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {{2, 9}, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 10}, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 11}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 12}, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 13}, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 14}, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 15}, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 16}, {1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{3, 2}, {1, 0, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 1, 0, 0, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{3, 6}, {2, 1, 0, 0, 0, 0, 1}},
        {{3, 7}, {2, 0, 1, 0, 0, 0, 0, 1}},
        {{3, 8}, {2, 0, 1, 0, 0, 0, 0, 0, 1}},
    };
    return tab;
}

std::vector<int> prime_factors(int n) {
    std::vector<int> fs;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

void check_same_field(FieldElement a, FieldElement b) {
    if (a.field == nullptr || a.field != b.field)
        throw std::invalid_argument("field elements from different descriptors");
}

}  // namespace

Field::Field(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw std::invalid_argument("p is not prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxQ) throw std::invalid_argument("field order exceeds 2^16");
    }
    q_ = static_cast<int>(q);

    if (m_ == 1) {
        if (!modulus_.empty())
            throw std::invalid_argument("prime fields take no modulus");
    } else {
        if (modulus_.empty()) {
            auto it = default_moduli().find({p_, m_});
            if (it == default_moduli().end())
                throw std::invalid_argument("no default modulus for this (p, m); supply one");
            modulus_ = it->second;
        }
        if (static_cast<int>(modulus_.size()) != m_ + 1 || modulus_.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree m");
        for (int c : modulus_)
            if (c < 0 || c >= p_) throw std::invalid_argument("modulus coefficient out of range");
        if (!is_irreducible(modulus_, p_))
            throw std::invalid_argument("modulus is reducible");
    }

    // Locate the smallest primitive element by encoding, then build tables.
    const auto factors = prime_factors(q_ - 1);
    auto raw_pow = [&](uint16_t a, int e) {
        uint16_t r = 1, b = a;
        while (e) {
            if (e & 1) r = poly_mul_mod(r, b);
            b = poly_mul_mod(b, b);
            e >>= 1;
        }
        return r;
    };
    for (int cand = 1; cand < q_; ++cand) {
        bool primitive = true;
        for (int f : factors) {
            if (raw_pow(static_cast<uint16_t>(cand), (q_ - 1) / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            alpha_ = static_cast<uint16_t>(cand);
            break;
        }
    }
    if (alpha_ == 0 && q_ > 2)
        throw std::logic_error("no primitive element found");
    if (q_ == 2) alpha_ = 1;

    antilog_.resize(q_ - 1);
    log_.assign(q_, -1);
    uint16_t cur = 1;
    for (int e = 0; e < q_ - 1; ++e) {
        antilog_[e] = cur;
        if (log_[cur] != -1) throw std::logic_error("primitive element has short order");
        log_[cur] = e;
        cur = poly_mul_mod(cur, alpha_);
    }
    if (cur != 1) throw std::logic_error("primitive element order mismatch");

    xor_add_ = (p_ == 2);
    if (q_ <= kDenseTableMaxQ) {
        add_tab_.resize(static_cast<size_t>(q_) * q_);
        sub_tab_.resize(static_cast<size_t>(q_) * q_);
        mul_tab_.resize(static_cast<size_t>(q_) * q_);
        for (int a = 0; a < q_; ++a) {
            for (int b = 0; b < q_; ++b) {
                uint16_t s = 0, d = 0;
                if (xor_add_) {
                    s = static_cast<uint16_t>(a ^ b);
                    d = s;
                } else {
                    int va = a, vb = b, mul = 1;
                    long long sum = 0, dif = 0;
                    for (int i = 0; i < m_; ++i) {
                        int da = va % p_, db = vb % p_;
                        sum += static_cast<long long>((da + db) % p_) * mul;
                        dif += static_cast<long long>(((da - db) % p_ + p_) % p_) * mul;
                        va /= p_;
                        vb /= p_;
                        mul *= p_;
                    }
                    s = static_cast<uint16_t>(sum);
                    d = static_cast<uint16_t>(dif);
                }
                add_tab_[static_cast<size_t>(a) * q_ + b] = s;
                sub_tab_[static_cast<size_t>(a) * q_ + b] = d;
                mul_tab_[static_cast<size_t>(a) * q_ + b] =
                    (a && b) ? antilog_[(log_[a] + log_[b]) % (q_ - 1)] : 0;
            }
        }
    }
}

uint16_t Field::poly_mul_mod(uint16_t a, uint16_t b) const {
    if (m_ == 1) return static_cast<uint16_t>((static_cast<int>(a) * b) % p_);
    // digit vectors
    int da[17] = {0}, db[17] = {0}, prod[33] = {0};
    int va = a, vb = b;
    for (int i = 0; i < m_; ++i) {
        da[i] = va % p_;
        db[i] = vb % p_;
        va /= p_;
        vb /= p_;
    }
    for (int i = 0; i < m_; ++i) {
        if (!da[i]) continue;
        for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (int i = 2 * m_ - 2; i >= m_; --i) {
        int c = prod[i];
        if (!c) continue;
        for (int j = 0; j <= m_; ++j) {
            int& x = prod[i - m_ + j];
            x = (x - c * modulus_[j]) % p_;
            if (x < 0) x += p_;
        }
    }
    long long out = 0, mul = 1;
    for (int i = 0; i < m_; ++i) {
        out += prod[i] * mul;
        mul *= p_;
    }
    return static_cast<uint16_t>(out);
}

FieldElement Field::element(long long v) const {
    if (v < 0 || v >= q_) throw std::invalid_argument("element encoding out of range");
    return {static_cast<uint16_t>(v), this};
}

uint16_t Field::add_raw(uint16_t a, uint16_t b) const {
    if (xor_add_) return a ^ b;
    if (!add_tab_.empty()) return add_tab_[static_cast<size_t>(a) * q_ + b];
    long long out = 0, mul = 1;
    int va = a, vb = b;
    for (int i = 0; i < m_; ++i) {
        out += static_cast<long long>((va % p_ + vb % p_) % p_) * mul;
        va /= p_;
        vb /= p_;
        mul *= p_;
    }
    return static_cast<uint16_t>(out);
}

uint16_t Field::sub_raw(uint16_t a, uint16_t b) const {
    if (xor_add_) return a ^ b;
    if (!sub_tab_.empty()) return sub_tab_[static_cast<size_t>(a) * q_ + b];
    long long out = 0, mul = 1;
    int va = a, vb = b;
    for (int i = 0; i < m_; ++i) {
        out += static_cast<long long>(((va % p_ - vb % p_) % p_ + p_) % p_) * mul;
        va /= p_;
        vb /= p_;
        mul *= p_;
    }
    return static_cast<uint16_t>(out);
}

uint16_t Field::neg_raw(uint16_t a) const { return sub_raw(0, a); }

uint16_t Field::mul_raw(uint16_t a, uint16_t b) const {
    if (!mul_tab_.empty()) return mul_tab_[static_cast<size_t>(a) * q_ + b];
    if (a == 0 || b == 0) return 0;
    return antilog_[(log_[a] + log_[b]) % (q_ - 1)];
}

uint16_t Field::inv_raw(uint16_t a) const {
    if (a == 0) throw std::invalid_argument("division by zero");
    return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint16_t Field::div_raw(uint16_t a, uint16_t b) const {
    if (b == 0) throw std::invalid_argument("division by zero");
    if (a == 0) return 0;
    return antilog_[(log_[a] - log_[b] + q_ - 1) % (q_ - 1)];
}

uint16_t Field::pow_raw(uint16_t a, long long e) const {
    if (a == 0) {
        if (e < 0) throw std::invalid_argument("division by zero");
        return e == 0 ? 1 : 0;
    }
    long long le = (static_cast<long long>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    if (le < 0) le += q_ - 1;
    return antilog_[le];
}

int Field::log(uint16_t a) const {
    if (a == 0) throw std::invalid_argument("log of zero");
    return log_[a];
}

uint16_t Field::antilog(int e) const {
    int r = e % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return antilog_[r];
}

void Field::row_submul(uint16_t* dst, const uint16_t* src, uint16_t f, std::size_t len) const {
    if (f == 0) return;
    if (!mul_tab_.empty()) {
        const uint16_t* mrow = &mul_tab_[static_cast<size_t>(f) * q_];
        if (xor_add_) {
            for (std::size_t j = 0; j < len; ++j) dst[j] ^= mrow[src[j]];
        } else {
            const uint16_t* stab = sub_tab_.data();
            for (std::size_t j = 0; j < len; ++j)
                dst[j] = stab[static_cast<size_t>(dst[j]) * q_ + mrow[src[j]]];
        }
        return;
    }
    if (xor_add_) {
        const int lf = log_[f];
        for (std::size_t j = 0; j < len; ++j) {
            uint16_t v = src[j];
            if (v) dst[j] ^= antilog_[(lf + log_[v]) % (q_ - 1)];
        }
        return;
    }
    for (std::size_t j = 0; j < len; ++j) dst[j] = sub_raw(dst[j], mul_raw(f, src[j]));
}

void Field::row_scale(uint16_t* dst, uint16_t f, std::size_t len) const {
    if (f == 1) return;
    if (!mul_tab_.empty()) {
        const uint16_t* mrow = &mul_tab_[static_cast<size_t>(f) * q_];
        for (std::size_t j = 0; j < len; ++j) dst[j] = mrow[dst[j]];
        return;
    }
    for (std::size_t j = 0; j < len; ++j) dst[j] = mul_raw(f, dst[j]);
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << q_;
    if (m_ > 1) {
        os << " = F_" << p_ << "[x]/(";
        bool first = true;
        for (size_t i = 0; i < modulus_.size(); ++i) {
            if (!modulus_[i]) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0 || modulus_[i] != 1) os << modulus_[i];
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
        }
        os << ")";
    }
    return os.str();
}

const Field& make_field(int p, int m, const std::vector<int>& modulus) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, std::vector<int>>, std::unique_ptr<Field>> registry;
    // Resolve the default so (p, m, {}) and (p, m, default) intern together.
    std::vector<int> mod = modulus;
    if (m > 1 && mod.empty()) {
        auto it = default_moduli().find({p, m});
        if (it != default_moduli().end()) mod = it->second;
    }
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, m, mod);
    auto it = registry.find(key);
    if (it == registry.end()) {
        auto f = std::unique_ptr<Field>(new Field(p, m, mod));
        it = registry.emplace(key, std::move(f)).first;
    }
    return *it->second;
}

FieldElement operator+(FieldElement a, FieldElement b) {
    check_same_field(a, b);
    return {a.field->add_raw(a.value, b.value), a.field};
}

FieldElement operator-(FieldElement a, FieldElement b) {
    check_same_field(a, b);
    return {a.field->sub_raw(a.value, b.value), a.field};
}

FieldElement operator*(FieldElement a, FieldElement b) {
    check_same_field(a, b);
    return {a.field->mul_raw(a.value, b.value), a.field};
}

FieldElement operator/(FieldElement a, FieldElement b) {
    check_same_field(a, b);
    return {a.field->div_raw(a.value, b.value), a.field};
}

FieldElement operator-(FieldElement a) {
    if (!a.field) throw std::invalid_argument("element without field");
    return {a.field->neg_raw(a.value), a.field};
}

FieldElement inverse(FieldElement a) {
    if (!a.field) throw std::invalid_argument("element without field");
    return {a.field->inv_raw(a.value), a.field};
}

FieldElement pow(FieldElement a, long long e) {
    if (!a.field) throw std::invalid_argument("element without field");
    return {a.field->pow_raw(a.value, e), a.field};
}

}  // namespace gsa
