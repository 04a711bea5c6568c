#ifndef MACQ_RESIDUES_HPP
#define MACQ_RESIDUES_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "macq/macdonald.hpp"
#include "macq/partitions.hpp"
#include "macq/qfield.hpp"
#include "macq/report.hpp"
#include "macq/symlaurent.hpp"

namespace macq {

class NonGenericSample : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Names the point x_j = y_{assignment[j]} q^{exponents[j]} (all indices 0-based).
struct ResiduePoint {
    std::vector<int> assignment;
    std::vector<int> exponents;
};

/// Rational values for y_1..y_m.
struct YSample {
    std::vector<BigRat> values;

    std::vector<std::string> strings() const;
};

/// Draws m values a/b in (1, 100) with small denominators. Uses only raw
/// mt19937_64 output, so samples are identical on every platform.
YSample draw_sample(int m, std::mt19937_64& rng);

/// Residue of dx/(x (c/x; q)_k) at x = c q^l: 1 / [(q^-l; q)_l (q; q)_{k-1-l}].
QRat simple_pole_factor(int l, int k);

/// Residue at x_var = point of g(x) / d(x_var), where d has coefficients
/// `denom` (ascending) and g is Laurent in every variable. Computed from the
/// Laurent expansion in eps = x_var - point, so poles of any order work.
/// The result keeps the variable count, with x_var's exponent set to zero.
LaurentPoly series_residue(const LaurentPoly& g, std::size_t var, const std::vector<QRat>& denom, const QRat& point);

/// Exact quotient num / den, both viewed as polynomials in x_var with Laurent
/// coefficients in the other variables. den's leading coefficient in x_var must
/// be a single monomial. Throws std::logic_error on a nonzero remainder.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den, std::size_t var);

/// Two-variable residue at x_1 = y q^l with symbolic y, in closed form.
/// psi is over (x_1, x_2); the result is over (x_2, y).
LaurentPoly residue_31(int l, int k, const LaurentPoly& psi);
/// The same residue from series expansion in x_1 = y z around z = q^l.
LaurentPoly residue_31_bruteforce(int l, int k, const LaurentPoly& psi);

/// Returns a description of the first vanishing factor, or nullopt if the
/// closed-form evaluation at pt is valid.
std::optional<std::string> genericity_check(const ResiduePoint& pt, const YSample& y, int n, int m, int k);

/// Residue of prod_{i,j} 1/(y_i/x_j; q)_k Delta(x) psi(x) dx/(x_1..x_n) at pt,
/// evaluated by dropping the simple-pole factors. Throws NonGenericSample.
QRat iterated_residue(const ResiduePoint& pt, const YSample& y, const LaurentPoly& psi, int n, int k);
/// Oracle: takes series residues one variable at a time, x_n first.
QRat iterated_residue_sequential(const ResiduePoint& pt, const YSample& y, const LaurentPoly& psi, int n, int k);

struct ResidueSum {
    QRat term_sum;
    QRat closed_form;
    bool agree = false;
};

/// sum_{l<k} Res_{x=q^l} x^p / (1/x; q)_k dx/x, both termwise and in closed form.
ResidueSum single_var_residue_sum(int p, int k);

/// Sum over l in [0,k)^n of the residues at the diagonal points x_j = y_j q^{l_j}
/// with psi = P_lambda. y must have n entries.
QRat residue_sum_33(const Partition& lambda, const YSample& y, MacdonaldBasis& basis);
/// The same quantity before the symmetry collapse: (1/n!) times the sum over
/// every permutation and every exponent vector.
QRat residue_sum_33_full(const Partition& lambda, const YSample& y, MacdonaldBasis& basis);

/// residue_sum_33 = b_lambda P_lambda(y) <P_lambda, P_lambda> at `samples` seeded
/// generic samples. With sigma_check, also compares the collapsed and full sums.
Report verify_33(const Partition& lambda, MacdonaldBasis& basis, int samples, std::uint64_t seed,
                 bool sigma_check = false);

/// n = 1 Lemma with symbolic y: constant term of psi(x)/(y/x; q)_k against the
/// residue sum, compared coefficient by coefficient. psi must be a polynomial.
Report verify_lemma_n1(const LaurentPoly& psi, int k);

/// residue_31 against residue_31_bruteforce for psi = x_1^a x_2^b, a, b <= max_exp,
/// every k' <= max_k and l < k'.
Report verify_eq31(int max_k, int max_exp);

/// single_var_residue_sum agreement for 0 <= p <= max_p, 1 <= k <= max_k.
Report verify_residue_sums(int max_p, int max_k);

} // namespace macq

#endif
