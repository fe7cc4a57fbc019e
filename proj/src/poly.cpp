#include "gsa/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gsa/sierpinski.hpp"

namespace gsa {

namespace {

const Field& common_field(const Poly& a, const Poly& b) {
    if (&a.field() != &b.field())
        throw std::invalid_argument("polynomials over different fields");
    return a.field();
}

}  // namespace

Poly::Poly(const Field& f, std::vector<uint16_t> coeffs)
    : field_(&f), coeffs_(std::move(coeffs)) {
    for (uint16_t c : coeffs_)
        if (c >= f.q()) throw std::invalid_argument("coefficient encoding out of range");
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::from_ints(const Field& f, std::initializer_list<long long> ascending) {
    std::vector<uint16_t> c;
    c.reserve(ascending.size());
    for (long long v : ascending) c.push_back(f.element(v).value);
    return Poly(f, std::move(c));
}

Poly Poly::constant(FieldElement c) {
    if (!c.field) throw std::invalid_argument("element without field");
    return Poly(*c.field, {c.value});
}

Poly Poly::monomial(const Field& f, int deg, FieldElement c) {
    if (c.field != &f) throw std::invalid_argument("coefficient from wrong field");
    if (c.is_zero()) return Poly(f);
    std::vector<uint16_t> v(deg + 1, 0);
    v[deg] = c.value;
    return Poly(f, std::move(v));
}

FieldElement Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return {0, field_};
    return {coeffs_[i], field_};
}

FieldElement Poly::operator()(FieldElement x) const {
    if (x.field != field_) throw std::invalid_argument("evaluation point from wrong field");
    uint16_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = field_->add_raw(field_->mul_raw(acc, x.value), *it);
    return {acc, field_};
}

Poly& Poly::operator+=(const Poly& o) {
    common_field(*this, o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] = field_->add_raw(coeffs_[i], o.coeffs_[i]);
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    common_field(*this, o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] = field_->sub_raw(coeffs_[i], o.coeffs_[i]);
    normalize();
    return *this;
}

bool Poly::operator==(const Poly& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly operator*(const Poly& a, const Poly& b) {
    const Field& f = common_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(f);
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::vector<uint16_t> out(ca.size() + cb.size() - 1, 0);
    for (size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        for (size_t j = 0; j < cb.size(); ++j)
            out[i + j] = f.add_raw(out[i + j], f.mul_raw(ca[i], cb[j]));
    }
    return Poly(f, std::move(out));
}

Poly operator*(const Poly& a, FieldElement c) {
    if (c.field != &a.field()) throw std::invalid_argument("scalar from wrong field");
    if (c.is_zero() || a.is_zero()) return Poly(a.field());
    std::vector<uint16_t> out(a.coeffs().begin(), a.coeffs().end());
    a.field().row_scale(out.data(), c.value, out.size());
    return Poly(a.field(), std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    const Field& f = common_field(a, b);
    if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (a.degree() < b.degree()) return {Poly(f), a};
    const int dq = a.degree() - b.degree();
    std::vector<uint16_t> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<uint16_t> quot(dq + 1, 0);
    const uint16_t lead_inv = f.inv_raw(b.coeffs().back());
    const auto& cb = b.coeffs();
    for (int i = dq; i >= 0; --i) {
        const uint16_t c = f.mul_raw(rem[i + b.degree()], lead_inv);
        quot[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < cb.size(); ++j)
            rem[i + j] = f.sub_raw(rem[i + j], f.mul_raw(c, cb[j]));
    }
    rem.resize(b.degree() < 0 ? 0 : b.degree());
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly divexact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("divexact: nonzero remainder");
    return q;
}

Poly pow(const Poly& base, int e) {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly result = Poly::constant(base.field().one());
    Poly b = base;
    while (e) {
        if (e & 1) result = result * b;
        if (e >>= 1) b = b * b;
    }
    return result;
}

Poly locator_product(const std::vector<int>& S, std::span<const FieldElement> points) {
    if (points.empty()) throw std::invalid_argument("locator_product needs a point list");
    const Field& f = *points[0].field;
    Poly acc = Poly::constant(f.one());  // P_S = 1 for empty S
    std::set<uint16_t> seen;
    for (int i : S) {
        if (i < 0 || i >= static_cast<int>(points.size()))
            throw std::invalid_argument("locator index out of range");
        const FieldElement xi = points[i];
        if (!seen.insert(xi.value).second)
            throw std::invalid_argument("duplicate abscissas in locator product");
        acc = acc * Poly(f, {f.neg_raw(xi.value), 1});
    }
    return acc;
}

Poly hasse_derivative(const Poly& P, int s) {
    if (s < 0) throw std::invalid_argument("negative derivative order");
    const Field& f = P.field();
    if (P.degree() < s) return Poly(f);
    std::vector<uint16_t> out(P.degree() - s + 1, 0);
    for (int mu = s; mu <= P.degree(); ++mu) {
        const int binom = binom_mod_p(mu, s, f.p());
        out[mu - s] = f.mul_raw(static_cast<uint16_t>(binom), P.coeff(mu).value);
    }
    return Poly(f, std::move(out));
}

Poly interpolate(std::span<const FieldElement> xs, std::span<const FieldElement> ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("interpolation needs matching nonempty point lists");
    const Field& f = *xs[0].field;
    // Newton's divided differences are overkill here; Lagrange is fine at
    // the degrees this library handles.
    Poly acc(f);
    for (size_t j = 0; j < xs.size(); ++j) {
        Poly basis = Poly::constant(f.one());
        uint16_t denom = 1;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i == j) continue;
            if (xs[i].value == xs[j].value)
                throw std::invalid_argument("duplicate interpolation abscissas");
            basis = basis * Poly(f, {f.neg_raw(xs[i].value), 1});
            denom = f.mul_raw(denom, f.sub_raw(xs[j].value, xs[i].value));
        }
        acc += basis * FieldElement{f.div_raw(ys[j].value, denom), &f};
    }
    return acc;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const uint16_t c = coeffs_[i];
        if (!c) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

bool BivarPoly::is_zero() const {
    return std::all_of(rows.begin(), rows.end(), [](const Poly& p) { return p.is_zero(); });
}

int BivarPoly::z_degree() const {
    for (int nu = static_cast<int>(rows.size()) - 1; nu >= 0; --nu)
        if (!rows[nu].is_zero()) return nu;
    return Poly::kNegInfDegree;
}

FieldElement BivarPoly::operator()(FieldElement x, FieldElement z) const {
    if (rows.empty()) throw std::invalid_argument("bivariate polynomial without rows");
    const Field& f = rows[0].field();
    uint16_t acc = 0;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        acc = f.add_raw(f.mul_raw(acc, z.value), (*it)(x).value);
    return {acc, &f};
}

bool BivarPoly::operator==(const BivarPoly& o) const {
    const int d = z_degree(), od = o.z_degree();
    if (d != od) return false;
    for (int nu = 0; nu <= d && nu >= 0; ++nu)
        if (!(rows[nu] == o.rows[nu])) return false;
    return true;
}

FieldElement hasse_eval(const BivarPoly& Q, int s, int t, FieldElement x0, FieldElement z0) {
    if (s < 0 || t < 0) throw std::invalid_argument("negative derivative order");
    if (Q.rows.empty()) throw std::invalid_argument("bivariate polynomial without rows");
    const Field& f = Q.rows[0].field();
    const int p = f.p();
    uint16_t acc = 0;
    for (int nu = t; nu < static_cast<int>(Q.rows.size()); ++nu) {
        const int cz = binom_mod_p(nu, t, p);
        if (cz == 0) continue;
        const Poly& row = Q.rows[nu];
        uint16_t inner = 0;
        uint16_t xpow = 1;
        for (int mu = s; mu <= row.degree(); ++mu) {
            const int cx = binom_mod_p(mu, s, p);
            if (cx)
                inner = f.add_raw(inner,
                                  f.mul_raw(f.mul_raw(static_cast<uint16_t>(cx), row.coeff(mu).value), xpow));
            xpow = f.mul_raw(xpow, x0.value);
        }
        const uint16_t zfac = f.pow_raw(z0.value, nu - t);
        acc = f.add_raw(acc, f.mul_raw(f.mul_raw(static_cast<uint16_t>(cz), zfac), inner));
    }
    return {acc, &f};
}

Poly bivar_rem_linear(const BivarPoly& Q, const Poly& w) {
    if (Q.rows.empty()) throw std::invalid_argument("bivariate polynomial without rows");
    const Field& f = Q.rows[0].field();
    Poly acc(f);
    for (auto it = Q.rows.rbegin(); it != Q.rows.rend(); ++it) acc = acc * w + *it;
    return acc;
}

}  // namespace gsa
