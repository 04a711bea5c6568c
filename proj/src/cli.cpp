#include "macq/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <memory>
#include <ostream>
#include <utility>

#include <CLI11.hpp>

#include "macq/macdonald.hpp"
#include "macq/residues.hpp"
#include "macq/symlaurent.hpp"

namespace macq {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bases per (n, k), backed by the on-disk cache.
class BasisStore {
public:
    explicit BasisStore(const RunConfig& cfg) : cfg_(cfg) {}

    MacdonaldBasis& get(int n, int k)
    {
        auto key = std::make_pair(n, k);
        auto it = bases_.find(key);
        if (it == bases_.end()) {
            auto basis = std::make_unique<MacdonaldBasis>(n, k);
            if (cfg_.use_cache) {
                basis->load(cfg_.cache_path);
            }
            loaded_size_[key] = basis->size();
            it = bases_.emplace(key, std::move(basis)).first;
        }
        return *it->second;
    }

    void flush()
    {
        if (!cfg_.use_cache) {
            return;
        }
        for (const auto& [key, basis] : bases_) {
            if (basis->size() != loaded_size_[key]) {
                basis->save(cfg_.cache_path);
            }
        }
    }

private:
    const RunConfig& cfg_;
    std::map<std::pair<int, int>, std::unique_ptr<MacdonaldBasis>> bases_;
    std::map<std::pair<int, int>, std::size_t> loaded_size_;
};

int require_positive(const std::optional<int>& v, int fallback, const char* name)
{
    const int value = v.value_or(fallback);
    if (value < 1) {
        throw UsageError(std::string("--") + name + " must be a positive integer");
    }
    return value;
}

int require_non_negative(const std::optional<int>& v, int fallback, const char* name)
{
    const int value = v.value_or(fallback);
    if (value < 0) {
        throw UsageError(std::string("--") + name + " must be non-negative");
    }
    return value;
}

Partition parse_lambda(const RunConfig& cfg, int n)
{
    try {
        return Partition::parse(cfg.lambda_text, n);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid --lambda: ") + e.what());
    }
}

void emit(const Report& r, const RunConfig& cfg, std::ostream& out)
{
    if (cfg.json) {
        out << r.to_json().dump() << '\n';
        return;
    }
    out << (r.pass ? "PASS " : "FAIL ") << r.identity;
    for (const char* key : {"n", "m", "k", "max_weight", "degree", "weight", "max_k", "max_exp", "max_p", "seed"}) {
        if (r.details.contains(key)) {
            out << ' ' << key << '=' << r.details[key].dump();
        }
    }
    if (r.details.contains("lambda")) {
        out << " lambda=" << r.details["lambda"].dump();
    }
    if (r.details.contains("psi")) {
        out << " psi=" << r.details["psi"].get<LaurentPoly>().to_string({"x"});
    }
    out << " (" << r.checks << " checks)\n";
    for (const auto& v : r.violations) {
        out << "  violation: " << v << '\n';
    }
}

int cmd_compute(const RunConfig& cfg, BasisStore& store, std::ostream& out)
{
    const int n = require_positive(cfg.n, 2, "n");
    const int k = require_positive(cfg.k, 2, "k");
    const Partition lam = parse_lambda(cfg, n);
    MacdonaldBasis& basis = store.get(n, k);
    const auto expansion = basis.m_expansion(lam);
    const LaurentPoly& poly = basis.p(lam);
    if (cfg.json) {
        auto m_basis = nlohmann::json::array();
        for (const auto& [mu, c] : expansion) {
            m_basis.push_back(nlohmann::json{{"mu", mu}, {"c", c}});
        }
        out << nlohmann::json{{"lambda", lam}, {"n", n}, {"k", k}, {"m_basis", std::move(m_basis)}, {"poly", poly}}.dump()
            << '\n';
        return 0;
    }
    out << "P" << lam.to_string() << " with n=" << n << ", k=" << k << " (t = q^" << k << ")\n";
    out << "m-basis:\n";
    for (const auto& [mu, c] : expansion) {
        out << "  m" << mu.to_string() << ": " << c.to_string() << '\n';
    }
    out << "x-basis:\n  " << poly.to_string() << '\n';
    return 0;
}

int cmd_norm(const RunConfig& cfg, BasisStore& store, std::ostream& out)
{
    const int n = require_positive(cfg.n, 2, "n");
    const int k = require_positive(cfg.k, 2, "k");
    const Partition lam = parse_lambda(cfg, n);
    MacdonaldBasis& basis = store.get(n, k);
    const QRat ct = norm_via_ct(lam, basis);
    const QRat formula = norm_formula(lam, n, k);
    const bool equal = ct == formula;
    if (cfg.json) {
        out << nlohmann::json{{"lambda", lam}, {"n", n}, {"k", k}, {"ct", ct}, {"formula", formula}, {"equal", equal}}
                   .dump()
            << '\n';
    } else {
        out << "lambda=" << lam.to_string() << " n=" << n << " k=" << k << '\n';
        out << "  constant term: " << ct.to_string() << '\n';
        out << "  closed form:   " << formula.to_string() << '\n';
        out << "  " << (equal ? "equal" : "NOT equal") << '\n';
    }
    return equal ? 0 : 1;
}

std::vector<Report> run_verify(const RunConfig& cfg, BasisStore& store)
{
    const std::string& t = cfg.target;
    std::vector<Report> reports;
    if (t == "theorem") {
        const int n = require_positive(cfg.n, 2, "n");
        const int k = require_positive(cfg.k, 2, "k");
        reports.push_back(verify_theorem(require_non_negative(cfg.max_weight, 4, "max-weight"), store.get(n, k)));
    } else if (t == "ct") {
        const int n = require_positive(cfg.n, 2, "n");
        const int k = require_positive(cfg.k, 2, "k");
        reports.push_back(verify_constant_term(store.get(n, k)));
    } else if (t == "ortho") {
        const int n = require_positive(cfg.n, 2, "n");
        const int k = require_positive(cfg.k, 2, "k");
        const int w_max = require_non_negative(cfg.max_weight, 4, "max-weight");
        for (int w = 0; w <= w_max; ++w) {
            reports.push_back(verify_orthogonality(w, store.get(n, k)));
        }
    } else if (t == "blambda" || t == "normforms") {
        const bool blambda = t == "blambda";
        const int n_max = require_positive(cfg.n, 4, "n");
        const int k_max = require_positive(cfg.k, 3, "k");
        const int w_max = require_non_negative(cfg.max_weight, blambda ? 6 : 5, "max-weight");
        Report r;
        r.identity = t;
        r.details["n"] = n_max;
        r.details["k"] = k_max;
        r.details["max_weight"] = w_max;
        for (int n = 1; n <= n_max; ++n) {
            for (int k = 1; k <= k_max; ++k) {
                for (int w = 0; w <= w_max; ++w) {
                    for (const Partition& lam : enumerate_partitions(w, n)) {
                        const std::string where =
                            lam.to_string() + " n=" + std::to_string(n) + " k=" + std::to_string(k);
                        if (blambda) {
                            r.record(b_lambda_armleg(lam, k) == b_lambda_product(lam, n, k),
                                     "arm/leg and product forms differ at " + where);
                        } else {
                            r.record(norm_formula(lam, n, k) == norm_formula_poch(lam, n, k),
                                     "norm forms differ at " + where);
                        }
                    }
                }
            }
        }
        reports.push_back(std::move(r));
    } else if (t == "cauchy") {
        const int n = require_positive(cfg.n, 2, "n");
        const int k = require_positive(cfg.k, 2, "k");
        MacdonaldBasis& basis = store.get(n, k);
        reports.push_back(verify_cauchy(require_non_negative(cfg.degree, 3, "degree"), basis, basis));
    } else if (t == "eq31") {
        reports.push_back(verify_eq31(require_positive(cfg.k, 3, "k"), require_non_negative(cfg.degree, 2, "degree")));
    } else if (t == "lemma1") {
        const int k_max = require_positive(cfg.k, 3, "k");
        const int d_max = require_non_negative(cfg.degree, 3, "degree");
        for (int k = 1; k <= k_max; ++k) {
            for (int d = 0; d <= d_max; ++d) {
                reports.push_back(verify_lemma_n1(LaurentPoly::monomial(1, ExpVec{d}), k));
            }
        }
    } else if (t == "eq33") {
        const int n = require_positive(cfg.n, 2, "n");
        const int k = require_positive(cfg.k, 2, "k");
        const Partition lam = parse_lambda(cfg, n);
        if (cfg.samples < 1) {
            throw UsageError("--samples must be positive");
        }
        reports.push_back(verify_33(lam, store.get(n, k), cfg.samples, cfg.seed, true));
    } else if (t == "ressum") {
        reports.push_back(verify_residue_sums(require_non_negative(cfg.max_weight, 10, "max-weight"),
                                              require_positive(cfg.k, 4, "k")));
    } else {
        throw UsageError("unknown verify target '" + t + "'");
    }
    return reports;
}

int cmd_verify(const RunConfig& cfg, BasisStore& store, std::ostream& out)
{
    const auto reports = run_verify(cfg, store);
    bool pass = true;
    int checks = 0;
    int failed = 0;
    for (const Report& r : reports) {
        emit(r, cfg, out);
        pass = pass && r.pass;
        checks += r.checks;
        failed += static_cast<int>(r.violations.size());
    }
    if (cfg.json) {
        out << nlohmann::json{{"summary",
                               {{"target", cfg.target},
                                {"reports", reports.size()},
                                {"checks", checks},
                                {"failed", failed},
                                {"seed", cfg.seed},
                                {"pass", pass}}}}
                   .dump()
            << '\n';
    } else {
        out << (pass ? "ALL PASS" : "FAILED") << ": " << cfg.target << ", " << checks << " checks, " << failed
            << " failed\n";
    }
    return pass ? 0 : 1;
}

void add_common_flags(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--n", cfg.n, "number of x variables");
    sub->add_option("--k", cfg.k, "t = q^k");
    sub->add_option("--lambda", cfg.lambda_text, "partition, comma separated (e.g. 2,1)");
    sub->add_flag("--json", cfg.json, "machine-readable output");
    sub->add_option("--cache", cfg.cache_path, "basis cache directory")->capture_default_str();
    sub->add_flag("!--no-cache", cfg.use_cache, "do not read or write the basis cache");
}

} // namespace

const std::vector<std::string>& verify_targets()
{
    static const std::vector<std::string> targets{"theorem", "ct",     "ortho",  "blambda", "normforms",
                                                  "cauchy",  "eq31",   "lemma1", "eq33",    "ressum"};
    return targets;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Exact Macdonald polynomials at t = q^k and checks of their norm identities", "macq"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "print P_lambda in the monomial-symmetric and x-monomial bases");
    add_common_flags(compute, cfg);

    auto* norm = app.add_subcommand("norm", "compare <P_lambda, P_lambda> from the constant term with the closed form");
    add_common_flags(norm, cfg);

    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("target", cfg.target, "what to verify")
        ->required()
        ->check(CLI::IsMember(verify_targets()));
    add_common_flags(verify, cfg);
    verify->add_option("--max-weight", cfg.max_weight, "largest partition weight (or exponent p for ressum)");
    verify->add_option("--degree", cfg.degree, "y-degree cap (cauchy) or exponent bound (eq31, lemma1)");
    verify->add_option("--samples", cfg.samples, "number of random y samples (eq33)")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "seed for y sampling (eq33)")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (compute->parsed()) {
        cfg.command = Command::compute;
    } else if (norm->parsed()) {
        cfg.command = Command::norm;
    } else {
        cfg.command = Command::verify;
    }

    try {
        BasisStore store(cfg);
        int code = 0;
        switch (cfg.command) {
        case Command::compute:
            code = cmd_compute(cfg, store, out);
            break;
        case Command::norm:
            code = cmd_norm(cfg, store, out);
            break;
        case Command::verify:
            code = cmd_verify(cfg, store, out);
            break;
        }
        store.flush();
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace macq
