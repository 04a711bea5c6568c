#ifndef MACQ_QFIELD_HPP
#define MACQ_QFIELD_HPP

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <json.hpp>

namespace macq {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Parses "3", "-7/2" into a canonical rational; throws std::invalid_argument.
BigRat parse_bigrat(const std::string& text);
std::string to_string(const BigRat& r);

/// Dense univariate polynomial in q with rational coefficients, ascending order.
/// The highest stored coefficient is always nonzero; the zero polynomial is empty.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<BigRat> coeffs);

    static QPoly constant(const BigRat& c);
    static QPoly monomial(const BigRat& c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Exponent of the lowest nonzero coefficient, -1 for zero.
    int low_degree() const;
    const std::vector<BigRat>& coeffs() const { return coeffs_; }
    BigRat coeff(int i) const;
    const BigRat& leading() const { return coeffs_.back(); }

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const BigRat& c);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const BigRat& c) { return a *= c; }

    /// Multiplies by q^shift; shift may be negative only if the low terms vanish.
    QPoly shifted(int shift) const;

    /// Euclidean division; throws std::domain_error on a zero divisor.
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
    /// Exact division; throws std::logic_error if the remainder is nonzero.
    static QPoly exact_div(const QPoly& a, const QPoly& b);

    BigRat eval(const BigRat& q0) const;

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "q") const;

private:
    void trim();
    std::vector<BigRat> coeffs_;
};

/// Greatest common divisor over Q, normalized to a primitive integer polynomial
/// with positive leading coefficient. gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Element of Q(q) in canonical form: num and den coprime, den a primitive integer
/// polynomial whose lowest nonzero coefficient is positive. Zero is 0/1.
class QRat {
public:
    QRat() : den_(QPoly::constant(1)) {}
    QRat(long v) : QRat(BigRat(v)) {} // NOLINT(google-explicit-constructor)
    QRat(int v) : QRat(BigRat(v)) {}  // NOLINT(google-explicit-constructor)
    QRat(const BigRat& c);            // NOLINT(google-explicit-constructor)
    explicit QRat(QPoly num);
    /// Throws std::domain_error if den is zero.
    QRat(QPoly num, QPoly den);

    /// q^e for any integer e.
    static QRat q_power(int e);
    /// c * q^e
    static QRat monomial(const BigRat& c, int e);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.is_constant(); }

    QRat operator-() const;
    QRat inverse() const;
    QRat pow(int e) const;

    QRat& operator+=(const QRat& o);
    QRat& operator-=(const QRat& o);
    QRat& operator*=(const QRat& o);
    QRat& operator/=(const QRat& o);
    friend QRat operator+(QRat a, const QRat& b) { return a += b; }
    friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
    friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
    friend QRat operator/(QRat a, const QRat& b) { return a /= b; }

    friend bool operator==(const QRat& a, const QRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

    /// Exact value at q = q0. Throws std::domain_error if q0 is a pole.
    BigRat eval(const BigRat& q0) const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const QRat& r) { return os << r.to_string(); }

private:
    void normalize();
    void scale_den_canonical();

    QPoly num_;
    QPoly den_;
};

enum class ArithOp { add, sub, mul, div };

/// Binary field operation; div by zero throws std::domain_error.
QRat qrat_arith(const QRat& a, const QRat& b, ArithOp op);

/// Finite q-Pochhammer symbol (a;q)_count = prod_{s<count} (1 - a q^s).
QRat pochhammer(const QRat& a, int count);

/// Gaussian binomial [n choose r]_q; zero when r is out of range.
QRat q_binomial(int n, int r);

BigRat qrat_eval(const QRat& a, const BigRat& q0);

// JSON: {"num": [[numer, denom], ...], "den": [...]}, ascending in q-degree.
void to_json(nlohmann::json& j, const QRat& r);
void from_json(const nlohmann::json& j, QRat& r);
nlohmann::json bigint_to_json(const BigInt& z);
BigInt bigint_from_json(const nlohmann::json& j);

} // namespace macq

#endif
