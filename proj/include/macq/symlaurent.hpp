#ifndef MACQ_SYMLAURENT_HPP
#define MACQ_SYMLAURENT_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "macq/partitions.hpp"
#include "macq/qfield.hpp"

namespace macq {

/// Exponent vector of a Laurent monomial; negative entries allowed.
using ExpVec = std::vector<int>;

struct ExpVecHash {
    std::size_t operator()(const ExpVec& e) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int v : e) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

/// Sparse Laurent polynomial in a fixed number of variables with Q(q) coefficients.
/// No zero coefficient is ever stored.
class LaurentPoly {
public:
    using TermMap = std::unordered_map<ExpVec, QRat, ExpVecHash>;

    explicit LaurentPoly(std::size_t n_vars = 0) : n_vars_(n_vars) {}

    static LaurentPoly constant(std::size_t n_vars, const QRat& c);
    static LaurentPoly monomial(std::size_t n_vars, ExpVec e, const QRat& c = QRat(1));
    /// x_i (0-based).
    static LaurentPoly variable(std::size_t n_vars, std::size_t i);

    std::size_t n_vars() const { return n_vars_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    QRat coeff(const ExpVec& e) const;
    /// Adds c * x^e, pruning the entry if it cancels.
    void add_term(const ExpVec& e, const QRat& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const QRat& c);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const QRat& c) { return a *= c; }
    friend LaurentPoly operator*(const QRat& c, LaurentPoly a) { return a *= c; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// True when every term has the same exponent sum; the zero polynomial counts.
    bool is_homogeneous() const;
    /// Exponent sum of an arbitrary term; 0 for the zero polynomial.
    int total_degree() const;

    /// Keeps only the terms accepted by `keep`.
    LaurentPoly filtered(const std::function<bool(const ExpVec&)>& keep) const;
    /// Swaps variables i and j.
    LaurentPoly swapped(std::size_t i, std::size_t j) const;
    /// Places this polynomial's variables at positions `slots` of a wider space.
    LaurentPoly embedded(std::size_t n_total, const std::vector<std::size_t>& slots) const;
    /// Substitutes QRat values for every variable.
    QRat evaluate(const std::vector<QRat>& point) const;

    /// Terms sorted graded-lex: higher total degree first, then lexicographically larger.
    std::vector<std::pair<ExpVec, QRat>> sorted_terms() const;
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::size_t n_vars_;
    TermMap terms_;
};

LaurentPoly bar(const LaurentPoly& f);
QRat constant_term(const LaurentPoly& f);

enum class LaurentOp { add, mul };
/// Throws std::invalid_argument on a variable-count mismatch.
LaurentPoly lp_arith(const LaurentPoly& f, const LaurentPoly& g, LaurentOp op);
LaurentPoly lp_scalar_mul(const LaurentPoly& f, const QRat& c);

/// Sum of all distinct permutations of (lambda_1, ..., lambda_n).
LaurentPoly monomial_symmetric(const Partition& lambda, int n);

/// Weight prod_{i != j} (x_i/x_j; q)_k, fully expanded.
LaurentPoly delta_weight(int n, int k);

/// <f, g> = [f bar(g) Delta]_1 / n!, with Delta supplied by the caller.
QRat inner_product(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& delta);
QRat inner_product(const LaurentPoly& f, const LaurentPoly& g, int n, int k);

/// Truncated power series in the y-variables of a polynomial over (x_1..x_n, y_1..y_m).
/// Variables are ordered x first, then y. Every term has y-degree <= cap.
struct BiSeries {
    LaurentPoly poly;
    std::size_t n_x = 0;
    std::size_t n_y = 0;
    int cap = 0;

    int y_degree(const ExpVec& e) const;
    /// Product truncated at the cap.
    BiSeries truncated_mul(const LaurentPoly& f) const;
};

/// prod_{i<=m, j<=n} 1/(y_i x_j; q)_k as a series to total y-degree N.
BiSeries kernel_truncated(int m, int n, int k, int N);

/// prod_{i<=m, j<=n} (y_i x_j; q)_k over the combined variable list, truncated
/// at y-degree N.
BiSeries kernel_inverse(int m, int n, int k, int N);

/// True when kernel_truncated times kernel_inverse is 1 through the cap.
bool kernel_self_check(int m, int n, int k, int N);

// JSON: {"n": 2, "terms": [{"e": [1,-1], "c": <QRat>}, ...]} sorted graded-lex.
void to_json(nlohmann::json& j, const LaurentPoly& f);
void from_json(const nlohmann::json& j, LaurentPoly& f);

} // namespace macq

#endif
