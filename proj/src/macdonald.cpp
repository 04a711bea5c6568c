#include "macq/macdonald.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <string>

namespace macq {

MacdonaldBasis::MacdonaldBasis(int n, int k) : n_(n), k_(k)
{
    if (n < 1 || k < 1) {
        throw std::invalid_argument("MacdonaldBasis: need n >= 1 and k >= 1");
    }
}

const LaurentPoly& MacdonaldBasis::delta()
{
    if (!delta_) {
        delta_ = delta_weight(n_, k_);
    }
    return *delta_;
}

QRat MacdonaldBasis::inner(const LaurentPoly& f, const LaurentPoly& g)
{
    return inner_product(f, g, delta());
}

const MacdonaldBasis::Entry& MacdonaldBasis::entry(const Partition& lambda)
{
    const Partition lam = lambda.with_slots(n_);
    if (auto it = table_.find(lam); it != table_.end()) {
        return it->second;
    }
    const LaurentPoly m_lambda = monomial_symmetric(lam, n_);
    LaurentPoly p = m_lambda;
    for (const Partition& mu : enumerate_partitions(lam.weight(), n_)) {
        if (mu == lam || !dominance_leq(mu, lam)) {
            continue;
        }
        const Entry& lower = entry(mu);
        const QRat c = inner(m_lambda, lower.poly) / lower.norm;
        if (!c.is_zero()) {
            p -= lower.poly * c;
        }
    }
    QRat nrm = inner(p, p);
    if (nrm.is_zero()) {
        throw DegenerateGramError("degenerate Gram matrix: <P, P> = 0 for " + lam.to_string() + " at n = " +
                                  std::to_string(n_) + ", k = " + std::to_string(k_));
    }
    auto [it, inserted] = table_.emplace(lam, Entry{std::move(p), std::move(nrm)});
    return it->second;
}

const LaurentPoly& MacdonaldBasis::p(const Partition& lambda)
{
    return entry(lambda).poly;
}

const QRat& MacdonaldBasis::norm(const Partition& lambda)
{
    return entry(lambda).norm;
}

std::vector<std::pair<Partition, QRat>> MacdonaldBasis::m_expansion(const Partition& lambda)
{
    const LaurentPoly& poly = p(lambda);
    std::vector<std::pair<Partition, QRat>> out;
    for (const Partition& mu : enumerate_partitions(lambda.weight(), n_)) {
        QRat c = poly.coeff(mu.padded());
        if (!c.is_zero()) {
            out.emplace_back(mu, std::move(c));
        }
    }
    return out;
}

std::filesystem::path MacdonaldBasis::cache_file(const std::filesystem::path& dir) const
{
    return dir / ("macdonald_n" + std::to_string(n_) + "_k" + std::to_string(k_) + "_v" +
                  std::to_string(format_version) + ".json");
}

void MacdonaldBasis::save(const std::filesystem::path& dir) const
{
    std::filesystem::create_directories(dir);
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [lam, e] : table_) {
        entries[lam.key()] = nlohmann::json{{"poly", e.poly}, {"norm", e.norm}};
    }
    const nlohmann::json doc{
        {"format_version", format_version}, {"n", n_}, {"k", k_}, {"entries", std::move(entries)}};
    const auto target = cache_file(dir);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write cache file " + tmp.string());
        }
        out << doc.dump() << '\n';
        if (!out) {
            throw std::runtime_error("failed writing cache file " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
}

bool MacdonaldBasis::load(const std::filesystem::path& dir)
{
    const auto path = cache_file(dir);
    std::ifstream in(path);
    if (!in) {
        return false;
    }
    std::map<Partition, Entry> loaded;
    try {
        const auto doc = nlohmann::json::parse(in);
        if (doc.at("format_version").get<int>() != format_version || doc.at("n").get<int>() != n_ ||
            doc.at("k").get<int>() != k_) {
            return false;
        }
        for (const auto& [key, value] : doc.at("entries").items()) {
            Partition lam = Partition::parse(key, n_);
            auto poly = value.at("poly").get<LaurentPoly>();
            if (poly.n_vars() != static_cast<std::size_t>(n_)) {
                return false;
            }
            loaded.emplace(std::move(lam), Entry{std::move(poly), value.at("norm").get<QRat>()});
        }
    } catch (const std::exception&) {
        return false;
    }
    for (auto& [lam, e] : loaded) {
        table_.try_emplace(lam, std::move(e));
    }
    return true;
}

const LaurentPoly& macdonald_p(const Partition& lambda, MacdonaldBasis& basis)
{
    return basis.p(lambda);
}

QRat norm_via_ct(const Partition& lambda, MacdonaldBasis& basis)
{
    return basis.norm(lambda);
}

std::vector<Partition> ordered_weight_class(int weight, int n, LinearExtension order)
{
    std::vector<Partition> parts = enumerate_partitions(weight, n);
    switch (order) {
    case LinearExtension::lex:
        std::reverse(parts.begin(), parts.end());
        break;
    case LinearExtension::conjugate_lex:
        std::sort(parts.begin(), parts.end(),
                  [](const Partition& a, const Partition& b) { return conjugate(b) < conjugate(a); });
        break;
    }
    return parts;
}

std::map<Partition, LaurentPoly> gram_schmidt_total_order(int weight, int n, int k, LinearExtension order)
{
    const LaurentPoly delta = delta_weight(n, k);
    std::vector<std::pair<LaurentPoly, QRat>> done;
    std::map<Partition, LaurentPoly> out;
    for (const Partition& lam : ordered_weight_class(weight, n, order)) {
        const LaurentPoly m_lambda = monomial_symmetric(lam, n);
        LaurentPoly p = m_lambda;
        for (const auto& [prev, prev_norm] : done) {
            const QRat c = inner_product(m_lambda, prev, delta) / prev_norm;
            if (!c.is_zero()) {
                p -= prev * c;
            }
        }
        QRat nrm = inner_product(p, p, delta);
        if (nrm.is_zero()) {
            throw DegenerateGramError("degenerate Gram matrix in total-order Gram-Schmidt at " + lam.to_string());
        }
        done.emplace_back(p, std::move(nrm));
        out.emplace(lam, std::move(p));
    }
    return out;
}

Report verify_theorem(int max_weight, MacdonaldBasis& basis)
{
    Report r;
    r.identity = "theorem";
    r.details["n"] = basis.n();
    r.details["k"] = basis.k();
    r.details["max_weight"] = max_weight;
    auto cases = nlohmann::json::array();
    for (int w = 0; w <= max_weight; ++w) {
        for (const Partition& lam : enumerate_partitions(w, basis.n())) {
            const QRat ct = norm_via_ct(lam, basis);
            const QRat formula = norm_formula(lam, basis.n(), basis.k());
            const bool ok = ct == formula;
            r.record(ok, "norm mismatch at " + lam.to_string() + ": ct = " + ct.to_string() +
                             ", formula = " + formula.to_string());
            cases.push_back(nlohmann::json{{"lambda", lam}, {"ct", ct}, {"formula", formula}, {"equal", ok}});
        }
    }
    r.details["cases"] = std::move(cases);
    return r;
}

Report verify_constant_term(MacdonaldBasis& basis)
{
    Report r;
    r.identity = "ct";
    const int n = basis.n();
    const int k = basis.k();
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) {
        fact *= i;
    }
    const QRat n_fact{BigRat(fact)};
    const Partition empty(std::vector<int>{}, n);
    const QRat ct = constant_term(basis.delta());
    const QRat via_formula = n_fact * norm_formula(empty, n, k);
    const QRat via_norm = n_fact * norm_via_ct(empty, basis);
    r.record(ct == via_formula, "[Delta]_1 = " + ct.to_string() + " but n! * formula = " + via_formula.to_string());
    r.record(ct == via_norm, "[Delta]_1 = " + ct.to_string() + " but n! * <1,1> = " + via_norm.to_string());
    r.details["n"] = n;
    r.details["k"] = k;
    r.details["constant_term"] = ct;
    r.details["n_factorial_times_formula"] = via_formula;
    return r;
}

Report verify_orthogonality(int weight, MacdonaldBasis& basis)
{
    Report r;
    r.identity = "orthogonality";
    r.details["n"] = basis.n();
    r.details["k"] = basis.k();
    r.details["weight"] = weight;
    const auto parts = enumerate_partitions(weight, basis.n());
    for (const Partition& a : parts) {
        for (const Partition& b : parts) {
            if (a == b) {
                continue;
            }
            const QRat ip = basis.inner(basis.p(a), basis.p(b));
            r.record(ip.is_zero(), "<P" + a.to_string() + ", P" + b.to_string() + "> = " + ip.to_string());
        }
    }
    return r;
}

Report verify_cauchy(int N, MacdonaldBasis& x_basis, MacdonaldBasis& y_basis)
{
    if (x_basis.k() != y_basis.k()) {
        throw std::invalid_argument("verify_cauchy: bases use different k");
    }
    const int n = x_basis.n();
    const int m = y_basis.n();
    const int k = x_basis.k();
    const auto nx = static_cast<std::size_t>(n);
    const auto ny = static_cast<std::size_t>(m);
    std::vector<std::size_t> x_slots(nx);
    std::vector<std::size_t> y_slots(ny);
    std::iota(x_slots.begin(), x_slots.end(), 0);
    std::iota(y_slots.begin(), y_slots.end(), nx);

    const BiSeries kernel = kernel_truncated(m, n, k, N);
    LaurentPoly residual = kernel.poly;
    for (int w = 0; w <= N; ++w) {
        for (const Partition& lam : enumerate_partitions(w, std::min(m, n))) {
            const LaurentPoly px = x_basis.p(lam).embedded(nx + ny, x_slots);
            const LaurentPoly py = y_basis.p(lam).embedded(nx + ny, y_slots);
            residual -= (py * px) * b_lambda_armleg(lam, k);
        }
    }

    Report r;
    r.identity = "cauchy";
    r.details["m"] = m;
    r.details["n"] = n;
    r.details["k"] = k;
    r.details["degree"] = N;
    for (int d = 0; d <= N; ++d) {
        const LaurentPoly part = residual.filtered([&](const ExpVec& e) { return kernel.y_degree(e) == d; });
        r.record(part.is_zero(), "residual has " + std::to_string(part.size()) + " terms in y-degree " +
                                     std::to_string(d));
    }
    r.record(residual.is_zero(), "residual has terms beyond the degree cap");
    r.details["residual_terms"] = residual.size();
    return r;
}

} // namespace macq
