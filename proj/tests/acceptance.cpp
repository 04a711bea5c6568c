// Acceptance sweep: one PASS/FAIL line per criterion, exit status 0 only if all pass.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "macq/macdonald.hpp"
#include "macq/partitions.hpp"
#include "macq/qfield.hpp"
#include "macq/residues.hpp"
#include "macq/symlaurent.hpp"

#ifndef MACQ_CLI_PATH
#error "MACQ_CLI_PATH must name the macq executable"
#endif

using namespace macq;

namespace {

struct Outcome {
    bool pass = true;
    int checks = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok && pass) {
            pass = false;
            first_failure = what;
        }
    }
    void absorb(const Report& r)
    {
        checks += r.checks;
        if (!r.pass && pass) {
            pass = false;
            first_failure = r.identity + ": " + (r.violations.empty() ? "failed" : r.violations.front());
        }
    }
};

std::string run_command(const std::string& cmd, int& status)
{
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) {
        status = -1;
        return {};
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) {
        out.append(buf.data(), got);
    }
    status = pclose(pipe.release());
    return out;
}

Outcome theorem()
{
    Outcome o;
    for (int n : {2, 3}) {
        for (int k : {1, 2, 3}) {
            MacdonaldBasis basis(n, k);
            o.absorb(verify_theorem(4, basis));
        }
    }
    return o;
}

Outcome constant_term_corollary()
{
    Outcome o;
    const std::vector<std::pair<int, int>> cases{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}};
    for (const auto& [n, k] : cases) {
        MacdonaldBasis basis(n, k);
        o.absorb(verify_constant_term(basis));
    }
    const QRat q = QRat::q_power(1);
    o.check(constant_term(delta_weight(2, 2)) == QRat(2) * (QRat(1) + q + q * q), "spot value n=2 k=2");
    return o;
}

Outcome orthogonality()
{
    Outcome o;
    MacdonaldBasis basis(3, 2);
    for (int w = 0; w <= 4; ++w) {
        o.absorb(verify_orthogonality(w, basis));
    }
    return o;
}

Outcome b_lambda()
{
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 3; ++k) {
            for (int w = 0; w <= 6; ++w) {
                for (const auto& lam : enumerate_partitions(w, n)) {
                    o.check(b_lambda_armleg(lam, k) == b_lambda_product(lam, n, k),
                            "b " + lam.to_string() + " n=" + std::to_string(n) + " k=" + std::to_string(k));
                }
            }
        }
    }
    return o;
}

Outcome norm_forms()
{
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 3; ++k) {
            for (int w = 0; w <= 5; ++w) {
                for (const auto& lam : enumerate_partitions(w, n)) {
                    o.check(norm_formula(lam, n, k) == norm_formula_poch(lam, n, k),
                            "norm " + lam.to_string() + " n=" + std::to_string(n) + " k=" + std::to_string(k));
                }
            }
        }
    }
    return o;
}

Outcome cauchy()
{
    Outcome o;
    {
        MacdonaldBasis x(2, 2);
        MacdonaldBasis y(2, 2);
        o.absorb(verify_cauchy(3, x, y));
    }
    {
        MacdonaldBasis x(3, 2);
        MacdonaldBasis y(3, 2);
        o.absorb(verify_cauchy(2, x, y));
    }
    return o;
}

Outcome two_variable_residue()
{
    Outcome o;
    o.absorb(verify_eq31(3, 2));
    return o;
}

Outcome lemma_n1()
{
    Outcome o;
    for (int k = 1; k <= 3; ++k) {
        for (int d = 0; d <= 3; ++d) {
            o.absorb(verify_lemma_n1(LaurentPoly::monomial(1, {d}), k));
        }
    }
    return o;
}

Outcome residue_sum()
{
    Outcome o;
    const std::uint64_t seed = 1;
    {
        MacdonaldBasis basis(2, 2);
        for (const auto& lam : {Partition({}, 2), Partition({1, 0}, 2), Partition({2, 1}, 2)}) {
            o.absorb(verify_33(lam, basis, 3, seed));
        }
    }
    {
        MacdonaldBasis basis(3, 2);
        o.absorb(verify_33(Partition({1, 0, 0}, 3), basis, 3, seed));
    }
    {
        MacdonaldBasis basis(2, 1);
        for (const auto& lam : {Partition({}, 2), Partition({1, 0}, 2), Partition({2, 1}, 2)}) {
            o.absorb(verify_33(lam, basis, 3, seed, true));
        }
    }
    return o;
}

Outcome single_variable_sum()
{
    Outcome o;
    o.absorb(verify_residue_sums(10, 4));
    const QRat q = QRat::q_power(1);
    o.check(single_var_residue_sum(0, 2).term_sum == QRat(1), "spot value k=2 p=0");
    o.check(single_var_residue_sum(1, 2).term_sum == QRat(1) + q, "spot value k=2 p=1");
    return o;
}

QRat random_scalar(std::mt19937_64& rng)
{
    std::vector<BigRat> num;
    std::vector<BigRat> den;
    for (int i = 0; i < 3; ++i) {
        num.emplace_back(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
        den.emplace_back(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    }
    QPoly d(den);
    if (d.is_zero()) {
        d = QPoly::constant(1);
    }
    return QRat(QPoly(num), d);
}

LaurentPoly random_laurent(std::mt19937_64& rng, std::size_t n)
{
    LaurentPoly f(n);
    for (int t = 0; t < 6; ++t) {
        ExpVec e(n);
        for (auto& v : e) {
            v = static_cast<int>(rng() % 5) - 2;
        }
        f.add_term(e, random_scalar(rng));
    }
    return f;
}

Outcome properties()
{
    Outcome o;
    std::mt19937_64 rng(2718);

    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_laurent(rng, 3);
        const auto g = random_laurent(rng, 3);
        o.check(bar(bar(f)) == f, "bar involution");
        o.check(bar(f * g) == bar(f) * bar(g), "bar multiplicative");
    }

    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 3; ++k) {
            const auto d = delta_weight(n, k);
            o.check(d.is_homogeneous() && d.total_degree() == 0, "Delta homogeneous of degree 0");
            o.check(bar(d) == d, "Delta bar-invariant");
        }
    }

    for (int trial = 0; trial < 8; ++trial) {
        const QRat a = random_scalar(rng) * QRat::q_power(static_cast<int>(rng() % 5) - 2);
        for (int m = 0; m <= 5; ++m) {
            for (int n = 0; n <= 5; ++n) {
                o.check(pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a * QRat::q_power(m), n),
                        "pochhammer splitting");
            }
        }
    }

    for (int n = 2; n <= 3; ++n) {
        for (int k = 1; k <= 3; ++k) {
            MacdonaldBasis basis(n, k);
            for (int w = 0; w <= 3; ++w) {
                for (auto order : {LinearExtension::lex, LinearExtension::conjugate_lex}) {
                    const auto ps = gram_schmidt_total_order(w, n, k, order);
                    for (const auto& lam : enumerate_partitions(w, n)) {
                        o.check(ps.at(lam) == basis.p(lam), "linear-extension independence " + lam.to_string());
                    }
                }
            }
        }
    }

    const std::string cmd = std::string("'") + MACQ_CLI_PATH +
                            "' verify eq33 --lambda 2,1 --n 2 --k 2 --samples 3 --seed 5 --json --no-cache";
    int s1 = 0;
    int s2 = 0;
    const std::string out1 = run_command(cmd, s1);
    const std::string out2 = run_command(cmd, s2);
    o.check(s1 == 0 && s2 == 0, "CLI exit status");
    o.check(!out1.empty() && out1 == out2, "CLI output byte-identical across runs");
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "norm theorem, n in {2,3}, k <= 3, |lambda| <= 4", theorem},
        {2, "constant term of Delta equals n! times the norm of P_0", constant_term_corollary},
        {3, "orthogonality, n=3, k=2, weight <= 4", orthogonality},
        {4, "b_lambda arm/leg product equals row product, |lambda| <= 6, n <= 4, k <= 3", b_lambda},
        {5, "two norm formulas agree, |lambda| <= 5, n <= 4, k <= 3", norm_forms},
        {6, "Cauchy kernel expansion, m=n=2 to degree 3 and m=n=3 to degree 2", cauchy},
        {7, "two-variable residue, closed form vs series, k <= 3, a,b <= 2", two_variable_residue},
        {8, "one-variable constant term vs residues, psi = x^d, d <= 3, k <= 3", lemma_n1},
        {9, "residue sum equals b_lambda P_lambda(y) norm, seeded samples", residue_sum},
        {10, "single-variable residue sum, p <= 10, k <= 4", single_variable_sum},
        {11, "property suite", properties},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.first_failure = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << o.checks << " checks, "
             << secs << "s)";
        if (!o.pass) {
            line << ": " << o.first_failure;
        }
        std::cout << line.str() << std::endl;
        all = all && o.pass;
    }
    std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
    return all ? 0 : 1;
}
