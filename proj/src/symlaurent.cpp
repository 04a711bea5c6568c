#include "macq/symlaurent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace macq {

namespace {

int exp_sum(const ExpVec& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

void require_same_vars(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.n_vars() != b.n_vars()) {
        throw std::invalid_argument("LaurentPoly: variable count mismatch (" + std::to_string(a.n_vars()) + " vs " +
                                    std::to_string(b.n_vars()) + ")");
    }
}

QRat factorial(int n)
{
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return QRat(BigRat(f));
}

} // namespace

LaurentPoly LaurentPoly::constant(std::size_t n_vars, const QRat& c)
{
    return monomial(n_vars, ExpVec(n_vars, 0), c);
}

LaurentPoly LaurentPoly::monomial(std::size_t n_vars, ExpVec e, const QRat& c)
{
    if (e.size() != n_vars) {
        throw std::invalid_argument("LaurentPoly::monomial: exponent length mismatch");
    }
    LaurentPoly p(n_vars);
    if (!c.is_zero()) {
        p.terms_.emplace(std::move(e), c);
    }
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t n_vars, std::size_t i)
{
    ExpVec e(n_vars, 0);
    e.at(i) = 1;
    return monomial(n_vars, std::move(e));
}

QRat LaurentPoly::coeff(const ExpVec& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? QRat() : it->second;
}

void LaurentPoly::add_term(const ExpVec& e, const QRat& c)
{
    if (c.is_zero()) {
        return;
    }
    if (e.size() != n_vars_) {
        throw std::invalid_argument("LaurentPoly::add_term: exponent length mismatch");
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const QRat& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c.is_one()) {
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [e, v] : r.terms_) {
        v = -v;
    }
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    require_same_vars(a, b);
    LaurentPoly r(a.n_vars_);
    ExpVec e(a.n_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            auto [it, inserted] = r.terms_.try_emplace(e, ca);
            if (inserted) {
                it->second *= cb;
            } else {
                it->second += ca * cb;
            }
        }
    }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

bool LaurentPoly::is_homogeneous() const
{
    if (terms_.empty()) {
        return true;
    }
    const int d = exp_sum(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& kv) { return exp_sum(kv.first) == d; });
}

int LaurentPoly::total_degree() const
{
    return terms_.empty() ? 0 : exp_sum(terms_.begin()->first);
}

LaurentPoly LaurentPoly::filtered(const std::function<bool(const ExpVec&)>& keep) const
{
    LaurentPoly r(n_vars_);
    for (const auto& [e, c] : terms_) {
        if (keep(e)) {
            r.terms_.emplace(e, c);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::swapped(std::size_t i, std::size_t j) const
{
    LaurentPoly r(n_vars_);
    for (const auto& [e, c] : terms_) {
        ExpVec f = e;
        std::swap(f.at(i), f.at(j));
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

LaurentPoly LaurentPoly::embedded(std::size_t n_total, const std::vector<std::size_t>& slots) const
{
    if (slots.size() != n_vars_) {
        throw std::invalid_argument("LaurentPoly::embedded: slot list has wrong length");
    }
    LaurentPoly r(n_total);
    for (const auto& [e, c] : terms_) {
        ExpVec f(n_total, 0);
        for (std::size_t i = 0; i < n_vars_; ++i) {
            f.at(slots[i]) += e[i];
        }
        r.add_term(f, c);
    }
    return r;
}

QRat LaurentPoly::evaluate(const std::vector<QRat>& point) const
{
    if (point.size() != n_vars_) {
        throw std::invalid_argument("LaurentPoly::evaluate: point has wrong dimension");
    }
    std::vector<std::map<int, QRat>> powers(n_vars_);
    auto power = [&](std::size_t i, int e) -> const QRat& {
        auto it = powers[i].find(e);
        if (it == powers[i].end()) {
            it = powers[i].emplace(e, point[i].pow(e)).first;
        }
        return it->second;
    };
    QRat sum;
    for (const auto& [e, c] : sorted_terms()) {
        QRat term = c;
        for (std::size_t i = 0; i < n_vars_ && !term.is_zero(); ++i) {
            if (e[i] != 0) {
                term *= power(i, e[i]);
            }
        }
        sum += term;
    }
    return sum;
}

std::vector<std::pair<ExpVec, QRat>> LaurentPoly::sorted_terms() const
{
    std::vector<std::pair<ExpVec, QRat>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const int da = exp_sum(a.first);
        const int db = exp_sum(b.first);
        if (da != db) {
            return da > db;
        }
        return a.first > b.first;
    });
    return out;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted_terms()) {
        if (!first) {
            os << " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
            if (e[i] != 1) {
                mono += "^" + std::to_string(e[i]);
            }
        }
        if (mono.empty()) {
            os << "(" << c.to_string() << ")";
        } else if (c.is_one()) {
            os << mono;
        } else {
            os << "(" << c.to_string() << ")*" << mono;
        }
    }
    return os.str();
}

LaurentPoly bar(const LaurentPoly& f)
{
    LaurentPoly r(f.n_vars());
    for (const auto& [e, c] : f.terms()) {
        ExpVec neg(e.size());
        std::transform(e.begin(), e.end(), neg.begin(), [](int v) { return -v; });
        r.add_term(neg, c);
    }
    return r;
}

QRat constant_term(const LaurentPoly& f)
{
    return f.coeff(ExpVec(f.n_vars(), 0));
}

LaurentPoly lp_arith(const LaurentPoly& f, const LaurentPoly& g, LaurentOp op)
{
    require_same_vars(f, g);
    return op == LaurentOp::add ? f + g : f * g;
}

LaurentPoly lp_scalar_mul(const LaurentPoly& f, const QRat& c)
{
    return f * c;
}

LaurentPoly monomial_symmetric(const Partition& lambda, int n)
{
    if (n < 0 || lambda.length() > n) {
        throw std::invalid_argument("monomial_symmetric: partition " + lambda.to_string() + " has more than " +
                                    std::to_string(n) + " parts");
    }
    ExpVec e = lambda.with_slots(n).padded();
    std::sort(e.begin(), e.end());
    LaurentPoly r(static_cast<std::size_t>(n));
    do {
        r.add_term(e, QRat(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return r;
}

LaurentPoly delta_weight(int n, int k)
{
    if (n < 1 || k < 1) {
        throw std::invalid_argument("delta_weight: need n >= 1 and k >= 1");
    }
    const auto nv = static_cast<std::size_t>(n);
    LaurentPoly delta = LaurentPoly::constant(nv, QRat(1));
    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = 0; j < nv; ++j) {
            if (i == j) {
                continue;
            }
            ExpVec ratio(nv, 0);
            ratio[i] = 1;
            ratio[j] = -1;
            for (int s = 0; s < k; ++s) {
                LaurentPoly factor = LaurentPoly::constant(nv, QRat(1));
                factor.add_term(ratio, -QRat::q_power(s));
                delta = delta * factor;
            }
        }
    }
    for (const auto& [e, c] : delta.terms()) {
        if (exp_sum(e) != 0) {
            throw std::logic_error("delta_weight: non-homogeneous term");
        }
    }
    return delta;
}

QRat inner_product(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& delta)
{
    require_same_vars(f, delta);
    require_same_vars(g, delta);
    if (f.is_zero() || g.is_zero()) {
        return QRat();
    }
    if (f.is_homogeneous() && g.is_homogeneous() && f.total_degree() != g.total_degree()) {
        return QRat();
    }
    // [f bar(g) Delta]_1 = sum over a in f, b in g of f_a g_b Delta_{b - a}
    const std::size_t nv = delta.n_vars();
    ExpVec diff(nv);
    QRat sum;
    for (const auto& [ea, ca] : f.terms()) {
        for (const auto& [eb, cb] : g.terms()) {
            for (std::size_t i = 0; i < nv; ++i) {
                diff[i] = eb[i] - ea[i];
            }
            auto it = delta.terms().find(diff);
            if (it == delta.terms().end()) {
                continue;
            }
            sum += ca * cb * it->second;
        }
    }
    return sum / factorial(static_cast<int>(nv));
}

QRat inner_product(const LaurentPoly& f, const LaurentPoly& g, int n, int k)
{
    return inner_product(f, g, delta_weight(n, k));
}

int BiSeries::y_degree(const ExpVec& e) const
{
    int d = 0;
    for (std::size_t i = n_x; i < n_x + n_y; ++i) {
        d += e[i];
    }
    return d;
}

BiSeries BiSeries::truncated_mul(const LaurentPoly& f) const
{
    BiSeries out{LaurentPoly(poly.n_vars()), n_x, n_y, cap};
    require_same_vars(poly, f);
    LaurentPoly::TermMap acc;
    ExpVec e(poly.n_vars());
    for (const auto& [ea, ca] : poly.terms()) {
        const int da = y_degree(ea);
        for (const auto& [eb, cb] : f.terms()) {
            if (da + y_degree(eb) > cap) {
                continue;
            }
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.poly.add_term(e, ca * cb);
        }
    }
    return out;
}

namespace {

void check_kernel_args(int m, int n, int k, int N)
{
    if (m < 1 || n < 1 || k < 1 || N < 0) {
        throw std::invalid_argument("kernel: need m, n, k >= 1 and N >= 0");
    }
}

// Applies f(y_i x_j) for every pair, where `factor` builds the series in one pair.
BiSeries kernel_product(int m, int n, int N, const std::function<LaurentPoly(std::size_t, std::size_t)>& factor)
{
    const auto nx = static_cast<std::size_t>(n);
    const auto ny = static_cast<std::size_t>(m);
    BiSeries acc{LaurentPoly::constant(nx + ny, QRat(1)), nx, ny, N};
    for (std::size_t i = 0; i < ny; ++i) {
        for (std::size_t j = 0; j < nx; ++j) {
            acc = acc.truncated_mul(factor(i, j));
        }
    }
    return acc;
}

} // namespace

BiSeries kernel_truncated(int m, int n, int k, int N)
{
    check_kernel_args(m, n, k, N);
    const auto nx = static_cast<std::size_t>(n);
    const auto nv = nx + static_cast<std::size_t>(m);
    // 1/(u;q)_k = sum_r [r+k-1 choose r]_q u^r
    std::vector<QRat> coeffs;
    for (int r = 0; r <= N; ++r) {
        coeffs.push_back(q_binomial(r + k - 1, r));
    }
    return kernel_product(m, n, N, [&](std::size_t i, std::size_t j) {
        LaurentPoly f(nv);
        for (int r = 0; r <= N; ++r) {
            ExpVec e(nv, 0);
            e[j] = r;
            e[nx + i] = r;
            f.add_term(e, coeffs[static_cast<std::size_t>(r)]);
        }
        return f;
    });
}

BiSeries kernel_inverse(int m, int n, int k, int N)
{
    check_kernel_args(m, n, k, N);
    const auto nx = static_cast<std::size_t>(n);
    const auto nv = nx + static_cast<std::size_t>(m);
    return kernel_product(m, n, N, [&](std::size_t i, std::size_t j) {
        LaurentPoly f = LaurentPoly::constant(nv, QRat(1));
        ExpVec e(nv, 0);
        e[j] = 1;
        e[nx + i] = 1;
        LaurentPoly u = LaurentPoly::monomial(nv, e);
        for (int s = 0; s < k; ++s) {
            f = f * (LaurentPoly::constant(nv, QRat(1)) - u * QRat::q_power(s));
        }
        return f;
    });
}

bool kernel_self_check(int m, int n, int k, int N)
{
    const BiSeries kernel = kernel_truncated(m, n, k, N);
    const BiSeries inverse = kernel_inverse(m, n, k, N);
    const BiSeries product = kernel.truncated_mul(inverse.poly);
    return product.poly == LaurentPoly::constant(product.poly.n_vars(), QRat(1));
}

void to_json(nlohmann::json& j, const LaurentPoly& f)
{
    auto terms = nlohmann::json::array();
    for (const auto& [e, c] : f.sorted_terms()) {
        terms.push_back(nlohmann::json{{"e", e}, {"c", c}});
    }
    j = nlohmann::json{{"n", f.n_vars()}, {"terms", std::move(terms)}};
}

void from_json(const nlohmann::json& j, LaurentPoly& f)
{
    const auto n = j.at("n").get<std::size_t>();
    LaurentPoly r(n);
    for (const auto& t : j.at("terms")) {
        r.add_term(t.at("e").get<ExpVec>(), t.at("c").get<QRat>());
    }
    f = std::move(r);
}

} // namespace macq
