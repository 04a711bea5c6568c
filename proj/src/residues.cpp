#include "macq/residues.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace macq {

namespace {

QRat q_pow(int e)
{
    return QRat::q_power(e);
}

// a (a-1) ... (a-j+1) / j!, for any integer a.
BigRat generalized_binomial(int a, int j)
{
    BigRat r = 1;
    for (int i = 0; i < j; ++i) {
        r *= BigRat(a - i, i + 1);
    }
    r.canonicalize();
    return r;
}

std::pair<int, int> var_degree_range(const LaurentPoly& f, std::size_t var)
{
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (const auto& [e, c] : f.terms()) {
        lo = std::min(lo, e[var]);
        hi = std::max(hi, e[var]);
    }
    return {lo, hi};
}

void validate_point(const ResiduePoint& pt, int n, int m, int k)
{
    if (static_cast<int>(pt.assignment.size()) != n || static_cast<int>(pt.exponents.size()) != n) {
        throw std::invalid_argument("ResiduePoint: expected " + std::to_string(n) + " entries");
    }
    std::vector<int> seen = pt.assignment;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        throw std::invalid_argument("ResiduePoint: assignment indices must be distinct");
    }
    for (int i : pt.assignment) {
        if (i < 0 || i >= m) {
            throw std::invalid_argument("ResiduePoint: assignment index out of range");
        }
    }
    for (int l : pt.exponents) {
        if (l < 0 || l >= k) {
            throw std::invalid_argument("ResiduePoint: exponent must lie in 0..k-1");
        }
    }
}

std::vector<QRat> as_qrats(const YSample& y)
{
    std::vector<QRat> out;
    out.reserve(y.values.size());
    for (const auto& v : y.values) {
        out.emplace_back(v);
    }
    return out;
}

std::vector<QRat> evaluation_point(const ResiduePoint& pt, const std::vector<QRat>& y)
{
    std::vector<QRat> x;
    for (std::size_t j = 0; j < pt.assignment.size(); ++j) {
        x.push_back(y[static_cast<std::size_t>(pt.assignment[j])] * q_pow(pt.exponents[j]));
    }
    return x;
}

// Advances an odometer over [0, k)^n; false after the last vector.
bool next_exponents(std::vector<int>& l, int k)
{
    for (std::size_t i = l.size(); i-- > 0;) {
        if (++l[i] < k) {
            return true;
        }
        l[i] = 0;
    }
    return false;
}

QRat factorial(int n)
{
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return QRat(BigRat(f));
}

std::vector<std::vector<int>> all_permutations(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

std::vector<std::string> YSample::strings() const
{
    std::vector<std::string> out;
    for (const auto& v : values) {
        out.push_back(v.get_str());
    }
    return out;
}

YSample draw_sample(int m, std::mt19937_64& rng)
{
    YSample y;
    for (int i = 0; i < m; ++i) {
        const std::uint64_t b = 1 + rng() % 6;
        const std::uint64_t a = b + 1 + rng() % (99 * b - 1);
        BigRat v(BigInt(std::to_string(a)), BigInt(std::to_string(b)));
        v.canonicalize();
        y.values.push_back(std::move(v));
    }
    return y;
}

QRat simple_pole_factor(int l, int k)
{
    if (k < 1 || l < 0 || l >= k) {
        throw std::invalid_argument("simple_pole_factor: need 0 <= l < k");
    }
    return (pochhammer(q_pow(-l), l) * pochhammer(q_pow(1), k - 1 - l)).inverse();
}

LaurentPoly series_residue(const LaurentPoly& g, std::size_t var, const std::vector<QRat>& denom, const QRat& point)
{
    if (var >= g.n_vars()) {
        throw std::invalid_argument("series_residue: variable index out of range");
    }
    // d(point + eps) = sum_j dt[j] eps^j
    std::vector<QRat> dt(denom.size());
    for (std::size_t j = 0; j < denom.size(); ++j) {
        for (std::size_t i = j; i < denom.size(); ++i) {
            if (denom[i].is_zero()) {
                continue;
            }
            dt[j] += denom[i] * QRat(generalized_binomial(static_cast<int>(i), static_cast<int>(j))) *
                     point.pow(static_cast<int>(i - j));
        }
    }
    std::size_t order = 0;
    while (order < dt.size() && dt[order].is_zero()) {
        ++order;
    }
    if (order == dt.size()) {
        throw std::domain_error("series_residue: denominator is identically zero");
    }
    LaurentPoly out(g.n_vars());
    if (order == 0) {
        return out;
    }
    // 1 / (dt[order] + dt[order+1] eps + ...) up to eps^(order-1)
    std::vector<QRat> inv(order);
    const QRat lead_inv = dt[order].inverse();
    inv[0] = lead_inv;
    for (std::size_t t = 1; t < order; ++t) {
        QRat acc;
        for (std::size_t s = 1; s <= t && order + s < dt.size(); ++s) {
            acc += dt[order + s] * inv[t - s];
        }
        inv[t] = -(acc * lead_inv);
    }
    // Coefficient of eps^-1 in g(point + eps) * eps^-order * inv(eps).
    for (const auto& [e, c] : g.terms()) {
        const int a = e[var];
        QRat coeff;
        for (std::size_t j = 0; j < order; ++j) {
            const BigRat binom = generalized_binomial(a, static_cast<int>(j));
            if (sgn(binom) == 0) {
                continue;
            }
            coeff += QRat(binom) * point.pow(a - static_cast<int>(j)) * inv[order - 1 - j];
        }
        if (coeff.is_zero()) {
            continue;
        }
        ExpVec rest = e;
        rest[var] = 0;
        out.add_term(rest, c * coeff);
    }
    return out;
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den, std::size_t var)
{
    if (num.n_vars() != den.n_vars() || var >= num.n_vars()) {
        throw std::invalid_argument("divide_exact: variable mismatch");
    }
    if (den.is_zero()) {
        throw std::domain_error("divide_exact: division by zero");
    }
    LaurentPoly quo(num.n_vars());
    if (num.is_zero()) {
        return quo;
    }
    const auto [den_lo, den_hi] = var_degree_range(den, var);
    const LaurentPoly lead = den.filtered([&](const ExpVec& e) { return e[var] == den_hi; });
    if (lead.size() != 1) {
        throw std::invalid_argument("divide_exact: leading coefficient is not a monomial");
    }
    const ExpVec& lead_exp = lead.terms().begin()->first;
    const QRat lead_inv = lead.terms().begin()->second.inverse();
    const int min_quo_degree = var_degree_range(num, var).first - den_lo;

    LaurentPoly rem = num;
    while (!rem.is_zero()) {
        const int top = var_degree_range(rem, var).second;
        if (top - den_hi < min_quo_degree) {
            break;
        }
        LaurentPoly step(num.n_vars());
        for (const auto& [e, c] : rem.terms()) {
            if (e[var] != top) {
                continue;
            }
            ExpVec qe(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                qe[i] = e[i] - lead_exp[i];
            }
            step.add_term(qe, c * lead_inv);
        }
        quo += step;
        rem -= step * den;
    }
    if (!rem.is_zero()) {
        throw std::logic_error("divide_exact: nonzero remainder");
    }
    return quo;
}

LaurentPoly residue_31(int l, int k, const LaurentPoly& psi)
{
    if (psi.n_vars() != 2) {
        throw std::invalid_argument("residue_31: psi must have two variables");
    }
    const QRat scale = simple_pole_factor(l, k);
    // Variables of the result: (x2, y). u = y / x2.
    const ExpVec u{-1, 1};
    const ExpVec u_inv{1, -1};
    const LaurentPoly one = LaurentPoly::constant(2, QRat(1));
    auto one_minus = [&](const ExpVec& e, const QRat& c) { return one - LaurentPoly::monomial(2, e, c); };

    // (u q^l; q)_k (q^-l / u; q)_k / (u; q)_k after cancelling (u; q)_k.
    LaurentPoly kernel = one;
    for (int s = 0; s <= l; ++s) {
        kernel = kernel * LaurentPoly::monomial(2, u_inv, -q_pow(s - l));
    }
    kernel = kernel * one_minus(u, q_pow(l));
    for (int j = k; j <= l + k - 1; ++j) {
        kernel = kernel * one_minus(u, q_pow(j));
    }
    for (int s = l + 1; s <= k - 1; ++s) {
        kernel = kernel * one_minus(u_inv, q_pow(s - l));
    }

    // psi(y q^l, x2)
    LaurentPoly shifted(2);
    for (const auto& [e, c] : psi.terms()) {
        shifted.add_term(ExpVec{e[1], e[0]}, c * q_pow(l * e[0]));
    }
    return kernel * shifted * scale;
}

LaurentPoly residue_31_bruteforce(int l, int k, const LaurentPoly& psi)
{
    if (psi.n_vars() != 2) {
        throw std::invalid_argument("residue_31_bruteforce: psi must have two variables");
    }
    if (k < 1 || l < 0 || l >= k) {
        throw std::invalid_argument("residue_31_bruteforce: need 0 <= l < k");
    }
    // Variables (z, x2, y) with x1 = y z; dx1/x1 = dz/z.
    const LaurentPoly one = LaurentPoly::constant(3, QRat(1));
    const ExpVec ratio{1, -1, 1}; // x1 / x2
    const ExpVec ratio_inv{-1, 1, -1};
    LaurentPoly numer = LaurentPoly::monomial(3, ExpVec{k - 1, 0, 0});
    for (int s = 0; s < k; ++s) {
        numer = numer * (one - LaurentPoly::monomial(3, ratio, q_pow(s)));
        numer = numer * (one - LaurentPoly::monomial(3, ratio_inv, q_pow(s)));
    }
    LaurentPoly psi_sub(3);
    for (const auto& [e, c] : psi.terms()) {
        psi_sub.add_term(ExpVec{e[0], e[1], e[0]}, c);
    }
    numer = numer * psi_sub;

    // 1/(1/z; q)_k = z^k / prod_s (z - q^s); one z was absorbed by dz/z.
    std::vector<QRat> denom{QRat(1)};
    for (int s = 0; s < k; ++s) {
        std::vector<QRat> next(denom.size() + 1);
        for (std::size_t i = 0; i < denom.size(); ++i) {
            next[i + 1] += denom[i];
            next[i] -= denom[i] * q_pow(s);
        }
        denom = std::move(next);
    }
    const LaurentPoly res3 = series_residue(numer, 0, denom, q_pow(l));

    LaurentPoly res(2);
    for (const auto& [e, c] : res3.terms()) {
        res.add_term(ExpVec{e[1], e[2]}, c);
    }
    // Remaining constant factor 1/(y/x2; q)_k.
    LaurentPoly w = LaurentPoly::constant(2, QRat(1));
    for (int s = 0; s < k; ++s) {
        w = w * (LaurentPoly::constant(2, QRat(1)) - LaurentPoly::monomial(2, ExpVec{-1, 1}, q_pow(s)));
    }
    return divide_exact(res, w, 1);
}

std::optional<std::string> genericity_check(const ResiduePoint& pt, const YSample& y, int n, int m, int k)
{
    if (static_cast<int>(y.values.size()) != m) {
        return "sample has " + std::to_string(y.values.size()) + " values, expected " + std::to_string(m);
    }
    for (std::size_t i = 0; i < y.values.size(); ++i) {
        if (sgn(y.values[i]) == 0) {
            return "y_" + std::to_string(i + 1) + " = 0";
        }
    }
    validate_point(pt, n, m, k);
    const auto yq = as_qrats(y);
    const auto x = evaluation_point(pt, yq);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
            if (i == pt.assignment[static_cast<std::size_t>(j)]) {
                continue;
            }
            if (pochhammer(yq[static_cast<std::size_t>(i)] / x[static_cast<std::size_t>(j)], k).is_zero()) {
                return "(y_" + std::to_string(i + 1) + "/x_" + std::to_string(j + 1) + "; q)_k vanishes";
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a != b && pochhammer(x[static_cast<std::size_t>(a)] / x[static_cast<std::size_t>(b)], k).is_zero()) {
                return "Delta factor (x_" + std::to_string(a + 1) + "/x_" + std::to_string(b + 1) +
                       "; q)_k vanishes";
            }
        }
    }
    return std::nullopt;
}

QRat iterated_residue(const ResiduePoint& pt, const YSample& y, const LaurentPoly& psi, int n, int k)
{
    const int m = static_cast<int>(y.values.size());
    if (m < n) {
        throw std::invalid_argument("iterated_residue: need m >= n");
    }
    if (psi.n_vars() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("iterated_residue: psi has the wrong number of variables");
    }
    if (auto bad = genericity_check(pt, y, n, m, k)) {
        throw NonGenericSample("non-generic sample: " + *bad + "; resample y");
    }
    const auto yq = as_qrats(y);
    const auto x = evaluation_point(pt, yq);
    QRat value = psi.evaluate(x);
    for (std::size_t a = 0; a < x.size() && !value.is_zero(); ++a) {
        for (std::size_t b = 0; b < x.size(); ++b) {
            if (a != b) {
                value *= pochhammer(x[a] / x[b], k);
            }
        }
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        for (int i = 0; i < m; ++i) {
            if (i != pt.assignment[j]) {
                value /= pochhammer(yq[static_cast<std::size_t>(i)] / x[j], k);
            }
        }
        value *= simple_pole_factor(pt.exponents[j], k);
    }
    return value;
}

QRat iterated_residue_sequential(const ResiduePoint& pt, const YSample& y, const LaurentPoly& psi, int n, int k)
{
    const int m = static_cast<int>(y.values.size());
    validate_point(pt, n, m, k);
    const auto nv = static_cast<std::size_t>(n);
    const auto yq = as_qrats(y);

    // prod_i 1/(y_i/x; q)_k dx/x = x^(mk-1) / prod_{i,s} (x - y_i q^s) dx
    std::vector<QRat> denom{QRat(1)};
    for (int i = 0; i < m; ++i) {
        for (int s = 0; s < k; ++s) {
            const QRat root = yq[static_cast<std::size_t>(i)] * q_pow(s);
            std::vector<QRat> next(denom.size() + 1);
            for (std::size_t d = 0; d < denom.size(); ++d) {
                next[d + 1] += denom[d];
                next[d] -= denom[d] * root;
            }
            denom = std::move(next);
        }
    }
    LaurentPoly g = delta_weight(n, k) * psi * LaurentPoly::monomial(nv, ExpVec(nv, m * k - 1));
    for (std::size_t j = nv; j-- > 0;) {
        const QRat point = yq[static_cast<std::size_t>(pt.assignment[j])] * q_pow(pt.exponents[j]);
        g = series_residue(g, j, denom, point);
    }
    return constant_term(g);
}

ResidueSum single_var_residue_sum(int p, int k)
{
    if (p < 0 || k < 1) {
        throw std::invalid_argument("single_var_residue_sum: need p >= 0 and k >= 1");
    }
    ResidueSum out;
    for (int l = 0; l < k; ++l) {
        out.term_sum += q_pow(l * p) * simple_pole_factor(l, k);
    }
    out.closed_form = pochhammer(q_pow(p + 1), k - 1) / pochhammer(q_pow(1), k - 1);
    out.agree = out.term_sum == out.closed_form;
    return out;
}

QRat residue_sum_33(const Partition& lambda, const YSample& y, MacdonaldBasis& basis)
{
    const int n = basis.n();
    const int k = basis.k();
    if (static_cast<int>(y.values.size()) != n) {
        throw std::invalid_argument("residue_sum_33: sample must have n values");
    }
    const LaurentPoly& psi = basis.p(lambda);
    ResiduePoint pt;
    pt.assignment.resize(static_cast<std::size_t>(n));
    std::iota(pt.assignment.begin(), pt.assignment.end(), 0);
    pt.exponents.assign(static_cast<std::size_t>(n), 0);
    QRat sum;
    do {
        sum += iterated_residue(pt, y, psi, n, k);
    } while (next_exponents(pt.exponents, k));
    return sum;
}

QRat residue_sum_33_full(const Partition& lambda, const YSample& y, MacdonaldBasis& basis)
{
    const int n = basis.n();
    const int k = basis.k();
    if (static_cast<int>(y.values.size()) != n) {
        throw std::invalid_argument("residue_sum_33_full: sample must have n values");
    }
    const LaurentPoly& psi = basis.p(lambda);
    QRat sum;
    for (const auto& sigma : all_permutations(n)) {
        ResiduePoint pt{sigma, std::vector<int>(static_cast<std::size_t>(n), 0)};
        do {
            sum += iterated_residue(pt, y, psi, n, k);
        } while (next_exponents(pt.exponents, k));
    }
    return sum / factorial(n);
}

namespace {

bool sample_is_generic(const YSample& y, int n, int k, bool all_assignments)
{
    const auto perms = all_assignments ? all_permutations(n) : std::vector<std::vector<int>>{[n] {
        std::vector<int> id(static_cast<std::size_t>(n));
        std::iota(id.begin(), id.end(), 0);
        return id;
    }()};
    for (const auto& sigma : perms) {
        ResiduePoint pt{sigma, std::vector<int>(static_cast<std::size_t>(n), 0)};
        do {
            if (genericity_check(pt, y, n, n, k)) {
                return false;
            }
        } while (next_exponents(pt.exponents, k));
    }
    return true;
}

constexpr int kMaxResample = 32;

} // namespace

Report verify_33(const Partition& lambda, MacdonaldBasis& basis, int samples, std::uint64_t seed, bool sigma_check)
{
    const int n = basis.n();
    const int k = basis.k();
    const Partition lam = lambda.with_slots(n);
    Report r;
    r.identity = "eq33";
    r.details["lambda"] = lam.padded();
    r.details["n"] = n;
    r.details["k"] = k;
    r.details["seed"] = seed;

    const QRat b = b_lambda_armleg(lam, k);
    const QRat nrm = basis.norm(lam);
    const LaurentPoly& p = basis.p(lam);
    std::mt19937_64 rng(seed);
    auto sample_list = nlohmann::json::array();
    for (int s = 0; s < samples; ++s) {
        YSample y;
        bool generic = false;
        for (int attempt = 0; attempt < kMaxResample && !generic; ++attempt) {
            y = draw_sample(n, rng);
            generic = sample_is_generic(y, n, k, sigma_check);
        }
        if (!generic) {
            r.record(false, "no generic sample found after " + std::to_string(kMaxResample) + " draws");
            continue;
        }
        const QRat lhs = residue_sum_33(lam, y, basis);
        const QRat rhs = b * p.evaluate(as_qrats(y)) * nrm;
        const bool ok = lhs == rhs;
        r.record(ok, "sample " + std::to_string(s) + ": residue sum " + lhs.to_string() + " != " + rhs.to_string());
        nlohmann::json entry{{"y", y.strings()}, {"pass", ok}};
        if (sigma_check) {
            const bool sigma_ok = residue_sum_33_full(lam, y, basis) == lhs;
            r.record(sigma_ok, "sample " + std::to_string(s) + ": permutation sum differs from diagonal sum");
            entry["sigma_pass"] = sigma_ok;
        }
        sample_list.push_back(std::move(entry));
    }
    r.details["samples"] = std::move(sample_list);
    return r;
}

Report verify_lemma_n1(const LaurentPoly& psi, int k)
{
    if (psi.n_vars() != 1) {
        throw std::invalid_argument("verify_lemma_n1: psi must have one variable");
    }
    int top = 0;
    for (const auto& [e, c] : psi.terms()) {
        if (e[0] < 0) {
            throw std::invalid_argument("verify_lemma_n1: psi must be a polynomial");
        }
        top = std::max(top, e[0]);
    }
    // 1/(y/x; q)_k from the kernel series in (x, y) with x -> 1/x.
    const BiSeries kernel = kernel_truncated(1, 1, k, top);
    LaurentPoly series(2);
    for (const auto& [e, c] : kernel.poly.terms()) {
        series.add_term(ExpVec{-e[0], e[1]}, c);
    }
    const LaurentPoly product = series * psi.embedded(2, {0});
    LaurentPoly lhs(1);
    for (const auto& [e, c] : product.terms()) {
        if (e[0] == 0) {
            lhs.add_term(ExpVec{e[1]}, c);
        }
    }
    LaurentPoly rhs(1);
    for (int l = 0; l < k; ++l) {
        const QRat factor = simple_pole_factor(l, k);
        for (const auto& [e, c] : psi.terms()) {
            rhs.add_term(e, c * q_pow(l * e[0]) * factor);
        }
    }
    Report r;
    r.identity = "lemma1";
    r.details["psi"] = psi;
    r.details["k"] = k;
    r.details["lhs"] = lhs;
    r.details["rhs"] = rhs;
    r.record(lhs == rhs, "constant term " + lhs.to_string({"y"}) + " != residue sum " + rhs.to_string({"y"}));
    return r;
}

Report verify_eq31(int max_k, int max_exp)
{
    Report r;
    r.identity = "eq31";
    r.details["max_k"] = max_k;
    r.details["max_exp"] = max_exp;
    for (int k = 1; k <= max_k; ++k) {
        for (int l = 0; l < k; ++l) {
            for (int a = 0; a <= max_exp; ++a) {
                for (int b = 0; b <= max_exp; ++b) {
                    const LaurentPoly psi = LaurentPoly::monomial(2, ExpVec{a, b});
                    const std::string where = "k=" + std::to_string(k) + " l=" + std::to_string(l) +
                                              " psi=x1^" + std::to_string(a) + "*x2^" + std::to_string(b);
                    try {
                        r.record(residue_31(l, k, psi) == residue_31_bruteforce(l, k, psi),
                                 "closed form differs from series residue at " + where);
                    } catch (const std::logic_error& e) {
                        r.record(false, where + ": " + e.what());
                    }
                }
            }
        }
    }
    return r;
}

Report verify_residue_sums(int max_p, int max_k)
{
    Report r;
    r.identity = "ressum";
    r.details["max_p"] = max_p;
    r.details["max_k"] = max_k;
    for (int k = 1; k <= max_k; ++k) {
        for (int p = 0; p <= max_p; ++p) {
            const ResidueSum s = single_var_residue_sum(p, k);
            r.record(s.agree, "k=" + std::to_string(k) + " p=" + std::to_string(p) + ": " + s.term_sum.to_string() +
                                  " != " + s.closed_form.to_string());
        }
    }
    return r;
}

} // namespace macq
