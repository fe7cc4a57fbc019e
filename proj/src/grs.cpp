#include "gsa/grs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gsa {

namespace {

void check_distinct(const std::vector<FieldElement>& v, const char* what) {
    std::set<uint16_t> seen;
    for (auto e : v)
        if (!seen.insert(e.value).second)
            throw std::invalid_argument(std::string(what) + " must be distinct");
}

void check_length(const GrsCode& code, const Vector& v) {
    if (static_cast<int>(v.size()) != code.n)
        throw std::invalid_argument("vector length does not match the code");
    for (auto e : v)
        if (e.field != code.field)
            throw std::invalid_argument("vector entries from the wrong field");
}

}  // namespace

GrsCode::GrsCode(const Field& f, int n_, int k_, std::vector<FieldElement> locators_,
                 std::vector<FieldElement> multipliers_, std::vector<FieldElement> abscissas_)
    : field(&f),
      n(n_),
      k(k_),
      locators(std::move(locators_)),
      multipliers(std::move(multipliers_)),
      abscissas(std::move(abscissas_)) {
    if (k < 1 || k > n || n > f.q() - 1)
        throw std::invalid_argument("need 1 <= k <= n <= q-1");
    if (static_cast<int>(locators.size()) != n || static_cast<int>(multipliers.size()) != n ||
        static_cast<int>(abscissas.size()) != n)
        throw std::invalid_argument("locators, multipliers, abscissas must have length n");
    for (auto e : locators)
        if (e.field != &f) throw std::invalid_argument("locator from the wrong field");
    for (auto e : abscissas)
        if (e.field != &f) throw std::invalid_argument("abscissa from the wrong field");
    for (auto e : multipliers)
        if (e.field != &f || e.is_zero())
            throw std::invalid_argument("multipliers must be nonzero field elements");
    check_distinct(locators, "locators");
    check_distinct(abscissas, "abscissas");
}

GrsCode GrsCode::conventional(const Field& f, int n, int k) {
    std::vector<FieldElement> a, b, x;
    for (int i = 0; i < n; ++i) {
        a.push_back({f.antilog(i), &f});
        b.push_back(f.one());
        x.push_back({f.antilog(-i), &f});
    }
    return GrsCode(f, n, k, std::move(a), std::move(b), std::move(x));
}

GrsCode GrsCode::unified(const Field& f, int n, int k) {
    std::vector<FieldElement> a, b;
    for (int i = 0; i < n; ++i) {
        a.push_back({f.antilog(-i), &f});
        b.push_back(f.one());
    }
    auto x = a;
    return GrsCode(f, n, k, std::move(a), std::move(b), std::move(x));
}

GrsCode GrsCode::abscissa_view() const {
    return GrsCode(*field, n, k, abscissas, multipliers, abscissas);
}

Vector encode(const GrsCode& code, const Poly& u) {
    if (&u.field() != code.field) throw std::invalid_argument("message from the wrong field");
    if (u.degree() >= code.k) throw std::invalid_argument("message degree must be < k");
    Vector c(code.n);
    for (int i = 0; i < code.n; ++i) c[i] = code.multipliers[i] * u(code.locators[i]);
    return c;
}

Poly erasures_only_message(const GrsCode& code,
                           const std::vector<std::pair<int, FieldElement>>& known) {
    if (static_cast<int>(known.size()) != code.k)
        throw std::invalid_argument("erasures-only decoding needs exactly k known positions");
    std::vector<FieldElement> xs, ys;
    std::set<int> seen;
    for (const auto& [pos, val] : known) {
        if (pos < 0 || pos >= code.n) throw std::invalid_argument("position out of range");
        if (!seen.insert(pos).second) throw std::invalid_argument("duplicate known position");
        if (val.field != code.field) throw std::invalid_argument("value from the wrong field");
        xs.push_back(code.locators[pos]);
        ys.push_back(val / code.multipliers[pos]);
    }
    return interpolate(xs, ys);
}

Vector erasures_only_decode(const GrsCode& code,
                            const std::vector<std::pair<int, FieldElement>>& known) {
    return encode(code, erasures_only_message(code, known));
}

ReencodeResult reencode_project(const GrsCode& code, const std::vector<int>& J, const Vector& v) {
    check_length(code, v);
    if (static_cast<int>(J.size()) != code.k)
        throw std::invalid_argument("re-encoding set must have size k");
    std::vector<std::pair<int, FieldElement>> known;
    known.reserve(J.size());
    for (int i : J) {
        if (i < 0 || i >= code.n) throw std::invalid_argument("re-encoding index out of range");
        known.emplace_back(i, -v[i]);
    }
    ReencodeResult out{Vector(code.n), Vector(code.n), erasures_only_message(code, known)};
    out.codeword = encode(code, out.message);
    for (int i = 0; i < code.n; ++i) out.projected[i] = v[i] + out.codeword[i];
    return out;
}

bool is_codeword(const GrsCode& code, const Vector& v) {
    check_length(code, v);
    std::vector<std::pair<int, FieldElement>> known;
    for (int i = 0; i < code.k; ++i) known.emplace_back(i, v[i]);
    const Vector w = erasures_only_decode(code, known);
    return w == v;
}

int hamming_distance(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) ++d;
    return d;
}

int hamming_weight(const Vector& a) {
    return static_cast<int>(std::count_if(a.begin(), a.end(),
                                          [](FieldElement e) { return !e.is_zero(); }));
}

}  // namespace gsa
