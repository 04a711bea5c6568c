#include "macq/qfield.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>

namespace macq {

namespace {

using ZVec = std::vector<BigInt>;

void trim_z(ZVec& v)
{
    while (!v.empty() && v.back() == 0) {
        v.pop_back();
    }
}

BigInt content(const ZVec& v)
{
    BigInt g = 0;
    for (const auto& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

// Primitive part with positive leading coefficient.
void make_primitive(ZVec& v)
{
    trim_z(v);
    if (v.empty()) {
        return;
    }
    BigInt g = content(v);
    if (v.back() < 0) {
        g = -g;
    }
    if (g != 1) {
        for (auto& c : v) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
    }
}

ZVec to_integer_primitive(const QPoly& p)
{
    BigInt l = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    ZVec out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        BigInt z = c.get_num() * (l / c.get_den());
        out.push_back(std::move(z));
    }
    make_primitive(out);
    return out;
}

// Pseudo-remainder of u by v (deg u >= deg v >= 1).
ZVec pseudo_remainder(ZVec u, const ZVec& v)
{
    const std::size_t dv = v.size() - 1;
    const BigInt& lc = v.back();
    while (!u.empty() && u.size() - 1 >= dv) {
        const std::size_t shift = u.size() - 1 - dv;
        BigInt lu = u.back();
        for (auto& c : u) {
            c *= lc;
        }
        for (std::size_t i = 0; i <= dv; ++i) {
            u[i + shift] -= lu * v[i];
        }
        trim_z(u);
    }
    return u;
}

} // namespace

BigRat parse_bigrat(const std::string& text)
{
    BigRat r;
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty() || r.set_str(s, 10) != 0) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    if (r.get_den() == 0) {
        throw std::invalid_argument("zero denominator: '" + text + "'");
    }
    r.canonicalize();
    return r;
}

std::string to_string(const BigRat& r)
{
    return r.get_str();
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_) {
        c.canonicalize();
    }
    trim();
}

QPoly QPoly::constant(const BigRat& c)
{
    return QPoly(std::vector<BigRat>{c});
}

QPoly QPoly::monomial(const BigRat& c, int degree)
{
    if (degree < 0) {
        throw std::invalid_argument("QPoly::monomial: negative degree");
    }
    std::vector<BigRat> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return QPoly(std::move(v));
}

void QPoly::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

int QPoly::low_degree() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

BigRat QPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

QPoly QPoly::operator-() const
{
    QPoly r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const BigRat& c)
{
    if (sgn(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigRat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    BigRat tmp;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
            out[i + j] += tmp;
        }
    }
    QPoly r;
    r.coeffs_ = std::move(out);
    r.trim();
    return r;
}

QPoly QPoly::shifted(int shift) const
{
    if (is_zero() || shift == 0) {
        return *this;
    }
    QPoly r;
    if (shift > 0) {
        r.coeffs_.assign(static_cast<std::size_t>(shift), BigRat(0));
        r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return r;
    }
    const auto drop = static_cast<std::size_t>(-shift);
    if (low_degree() < -shift) {
        throw std::logic_error("QPoly::shifted: negative shift would drop nonzero terms");
    }
    r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(drop), coeffs_.end());
    return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b)
{
    if (b.is_zero()) {
        throw std::domain_error("QPoly::divmod: division by zero polynomial");
    }
    if (a.degree() < b.degree()) {
        return {QPoly{}, a};
    }
    std::vector<BigRat> rem = a.coeffs_;
    std::vector<BigRat> quo(a.coeffs_.size() - b.coeffs_.size() + 1);
    const BigRat inv_lc = 1 / b.leading();
    const std::size_t db = b.coeffs_.size() - 1;
    for (std::size_t top = rem.size(); top-- > db;) {
        if (sgn(rem[top]) == 0) {
            continue;
        }
        BigRat f = rem[top] * inv_lc;
        const std::size_t shift = top - db;
        for (std::size_t i = 0; i <= db; ++i) {
            rem[i + shift] -= f * b.coeffs_[i];
        }
        quo[shift] = std::move(f);
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::exact_div(const QPoly& a, const QPoly& b)
{
    auto [quo, rem] = divmod(a, b);
    if (!rem.is_zero()) {
        throw std::logic_error("QPoly::exact_div: nonzero remainder");
    }
    return quo;
}

BigRat QPoly::eval(const BigRat& q0) const
{
    BigRat acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * q0 + coeffs_[i];
    }
    return acc;
}

std::string QPoly::to_string(const std::string& var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigRat& c = coeffs_[i];
        if (sgn(c) == 0) {
            continue;
        }
        BigRat mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            os << mag.get_str() << "*";
        }
        os << var;
        if (i > 1) {
            os << "^" << i;
        }
    }
    return os.str();
}

QPoly gcd(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() && b.is_zero()) {
        return {};
    }
    if (a.is_zero() || b.is_zero()) {
        ZVec z = to_integer_primitive(a.is_zero() ? b : a);
        std::vector<BigRat> c(z.begin(), z.end());
        return QPoly(std::move(c));
    }
    const int la = a.low_degree();
    const int lb = b.low_degree();
    const int e = std::min(la, lb);
    QPoly pa = a.shifted(-la);
    QPoly pb = b.shifted(-lb);
    if (pa.is_constant() || pb.is_constant()) {
        return QPoly::monomial(1, e);
    }
    ZVec u = to_integer_primitive(pa);
    ZVec v = to_integer_primitive(pb);
    if (u.size() < v.size()) {
        std::swap(u, v);
    }
    while (!v.empty()) {
        if (v.size() == 1) {
            return QPoly::monomial(1, e);
        }
        ZVec r = pseudo_remainder(u, v);
        make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    make_primitive(u);
    std::vector<BigRat> c(u.begin(), u.end());
    return QPoly(std::move(c)).shifted(e);
}

// ---------------------------------------------------------------- QRat

QRat::QRat(const BigRat& c) : num_(QPoly::constant(c)), den_(QPoly::constant(1)) {}

QRat::QRat(QPoly num) : num_(std::move(num)), den_(QPoly::constant(1)) {}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw std::domain_error("QRat: zero denominator");
    }
    normalize();
}

QRat QRat::q_power(int e)
{
    return monomial(1, e);
}

QRat QRat::monomial(const BigRat& c, int e)
{
    QRat r;
    if (sgn(c) == 0) {
        return r;
    }
    if (e >= 0) {
        r.num_ = QPoly::monomial(c, e);
    } else {
        r.num_ = QPoly::constant(c);
        r.den_ = QPoly::monomial(1, -e);
    }
    return r;
}

bool QRat::is_one() const
{
    return num_.degree() == 0 && num_.leading() == 1 && den_.degree() == 0;
}

void QRat::normalize()
{
    if (num_.is_zero()) {
        den_ = QPoly::constant(1);
        return;
    }
    if (!den_.is_constant()) {
        QPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = QPoly::exact_div(num_, g);
            den_ = QPoly::exact_div(den_, g);
        }
    }
    scale_den_canonical();
}

void QRat::scale_den_canonical()
{
    if (num_.is_zero()) {
        den_ = QPoly::constant(1);
        return;
    }
    BigInt l = 1;
    for (const auto& c : den_.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    BigInt g = 0;
    for (const auto& c : den_.coeffs()) {
        BigInt z = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    }
    BigRat s(l, g);
    s.canonicalize();
    if (sgn(den_.coeff(den_.low_degree())) < 0) {
        s = -s;
    }
    if (s != 1) {
        num_ *= s;
        den_ *= s;
    }
}

QRat QRat::operator-() const
{
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat QRat::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("QRat: inverse of zero");
    }
    QRat r;
    r.num_ = den_;
    r.den_ = num_;
    r.scale_den_canonical();
    return r;
}

QRat QRat::pow(int e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    QRat result(1);
    QRat base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

QRat& QRat::operator+=(const QRat& o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        if (den_.is_constant()) {
            if (num_.is_zero()) {
                den_ = QPoly::constant(1);
            }
            return *this;
        }
        normalize();
        return *this;
    }
    QPoly g = gcd(den_, o.den_);
    if (g.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        scale_den_canonical();
        return *this;
    }
    QPoly d1 = QPoly::exact_div(den_, g);
    QPoly d2 = QPoly::exact_div(o.den_, g);
    num_ = num_ * d2 + o.num_ * d1;
    den_ = den_ * d2;
    if (num_.is_zero()) {
        den_ = QPoly::constant(1);
        return *this;
    }
    QPoly g2 = gcd(num_, g);
    if (g2.degree() > 0) {
        num_ = QPoly::exact_div(num_, g2);
        den_ = QPoly::exact_div(den_, g2);
    }
    scale_den_canonical();
    return *this;
}

QRat& QRat::operator-=(const QRat& o)
{
    return *this += -o;
}

QRat& QRat::operator*=(const QRat& o)
{
    if (is_zero() || o.is_zero()) {
        *this = QRat();
        return *this;
    }
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ = num_ * o.num_;
        return *this;
    }
    QPoly n1 = num_;
    QPoly d1 = den_;
    QPoly n2 = o.num_;
    QPoly d2 = o.den_;
    if (!d2.is_constant()) {
        QPoly g = gcd(n1, d2);
        if (g.degree() > 0) {
            n1 = QPoly::exact_div(n1, g);
            d2 = QPoly::exact_div(d2, g);
        }
    }
    if (!d1.is_constant()) {
        QPoly g = gcd(n2, d1);
        if (g.degree() > 0) {
            n2 = QPoly::exact_div(n2, g);
            d1 = QPoly::exact_div(d1, g);
        }
    }
    num_ = n1 * n2;
    den_ = d1 * d2;
    scale_den_canonical();
    return *this;
}

QRat& QRat::operator/=(const QRat& o)
{
    return *this *= o.inverse();
}

BigRat QRat::eval(const BigRat& q0) const
{
    BigRat d = den_.eval(q0);
    if (sgn(d) == 0) {
        throw std::domain_error("QRat::eval: denominator vanishes at q = " + q0.get_str());
    }
    return num_.eval(q0) / d;
}

std::string QRat::to_string() const
{
    if (den_.is_constant()) {
        return num_.to_string();
    }
    auto wrap = [](const QPoly& p) {
        std::string s = p.to_string();
        bool single = p.coeffs().size() - static_cast<std::size_t>(std::max(p.low_degree(), 0)) == 1;
        return single ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

QRat qrat_arith(const QRat& a, const QRat& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add:
        return a + b;
    case ArithOp::sub:
        return a - b;
    case ArithOp::mul:
        return a * b;
    case ArithOp::div:
        if (b.is_zero()) {
            throw std::domain_error("qrat_arith: division by zero");
        }
        return a / b;
    }
    throw std::invalid_argument("qrat_arith: unknown op");
}

QRat pochhammer(const QRat& a, int count)
{
    if (count < 0) {
        throw std::invalid_argument("pochhammer: negative count");
    }
    QRat result(1);
    QRat term = a;
    const QRat q = QRat::q_power(1);
    for (int s = 0; s < count; ++s) {
        result *= QRat(1) - term;
        if (result.is_zero()) {
            return result;
        }
        term *= q;
    }
    return result;
}

QRat q_binomial(int n, int r)
{
    if (r < 0 || n < 0 || r > n) {
        return QRat();
    }
    const QRat q = QRat::q_power(1);
    return pochhammer(q, n) / (pochhammer(q, r) * pochhammer(q, n - r));
}

BigRat qrat_eval(const QRat& a, const BigRat& q0)
{
    return a.eval(q0);
}

nlohmann::json bigint_to_json(const BigInt& z)
{
    if (z.fits_slong_p()) {
        return static_cast<std::int64_t>(z.get_si());
    }
    return z.get_str();
}

BigInt bigint_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer()) {
        return BigInt(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        BigInt z;
        if (z.set_str(j.get<std::string>(), 10) != 0) {
            throw std::invalid_argument("bad integer string in JSON");
        }
        return z;
    }
    throw std::invalid_argument("expected integer in JSON");
}

namespace {

nlohmann::json poly_to_json(const QPoly& p)
{
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) {
        arr.push_back(nlohmann::json::array({bigint_to_json(c.get_num()), bigint_to_json(c.get_den())}));
    }
    return arr;
}

QPoly poly_from_json(const nlohmann::json& j)
{
    std::vector<BigRat> coeffs;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("QRat JSON: coefficient must be [numer, denom]");
        }
        BigInt d = bigint_from_json(pair[1]);
        if (d == 0) {
            throw std::invalid_argument("QRat JSON: zero denominator");
        }
        coeffs.emplace_back(bigint_from_json(pair[0]), d);
    }
    return QPoly(std::move(coeffs));
}

} // namespace

void to_json(nlohmann::json& j, const QRat& r)
{
    j = nlohmann::json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}

void from_json(const nlohmann::json& j, QRat& r)
{
    r = QRat(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

} // namespace macq
