#ifndef MACQ_MACDONALD_HPP
#define MACQ_MACDONALD_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "macq/partitions.hpp"
#include "macq/qfield.hpp"
#include "macq/report.hpp"
#include "macq/symlaurent.hpp"

namespace macq {

/// A zero norm showed up during orthogonalization. For t = q^k this means the
/// arithmetic is broken, not that the input is bad.
class DegenerateGramError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Cache of symmetric Macdonald polynomials P_lambda(x_1..x_n; q, t = q^k).
///
/// Each P_lambda is built by Gram-Schmidt against the Delta inner product,
/// subtracting projections only onto P_mu with mu strictly below lambda in
/// dominance order. Lower partitions are built on demand, so lookups may
/// recurse. Stored polynomials are monic in m_lambda and triangular.
class MacdonaldBasis {
public:
    static constexpr int format_version = 1;

    MacdonaldBasis(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }

    const LaurentPoly& delta();
    QRat inner(const LaurentPoly& f, const LaurentPoly& g);

    /// Throws std::invalid_argument if lambda has more than n parts.
    const LaurentPoly& p(const Partition& lambda);
    const QRat& norm(const Partition& lambda);
    /// Coefficients c_{lambda mu} over m_mu, reverse-lex order, zeros dropped.
    std::vector<std::pair<Partition, QRat>> m_expansion(const Partition& lambda);

    bool contains(const Partition& lambda) const { return table_.count(lambda.with_slots(n_)) != 0; }
    std::size_t size() const { return table_.size(); }

    /// <dir>/macdonald_n<n>_k<k>_v<version>.json
    std::filesystem::path cache_file(const std::filesystem::path& dir) const;
    /// Writes via a temporary file and rename.
    void save(const std::filesystem::path& dir) const;
    /// Merges a matching cache file. Returns false if it is missing, unreadable,
    /// or written for another (n, k, version); the basis is left untouched then.
    bool load(const std::filesystem::path& dir);

private:
    struct Entry {
        LaurentPoly poly;
        QRat norm;
    };

    const Entry& entry(const Partition& lambda);

    int n_;
    int k_;
    std::optional<LaurentPoly> delta_;
    std::map<Partition, Entry> table_;
};

const LaurentPoly& macdonald_p(const Partition& lambda, MacdonaldBasis& basis);
QRat norm_via_ct(const Partition& lambda, MacdonaldBasis& basis);

/// Total orders on a weight class that extend dominance (lower partitions first).
enum class LinearExtension {
    lex,          // ascending lexicographic
    conjugate_lex // descending lexicographic order of the conjugates
};

std::vector<Partition> ordered_weight_class(int weight, int n, LinearExtension order);

/// Classical Gram-Schmidt over every predecessor in `order` (not just the
/// dominance-lower ones), starting from the monomial symmetric functions.
std::map<Partition, LaurentPoly> gram_schmidt_total_order(int weight, int n, int k, LinearExtension order);

/// norm_via_ct equals norm_formula for every lambda with |lambda| <= max_weight.
Report verify_theorem(int max_weight, MacdonaldBasis& basis);
/// [Delta]_1 = n! * norm_formula(0) = n! * norm_via_ct(0).
Report verify_constant_term(MacdonaldBasis& basis);
/// <P_lambda, P_mu> = 0 for all distinct lambda, mu of the given weight.
Report verify_orthogonality(int weight, MacdonaldBasis& basis);
/// Kernel series minus sum_lambda b_lambda P_lambda(y) P_lambda(x) vanishes through
/// y-degree N. x_basis has n variables, y_basis has m; both share k.
Report verify_cauchy(int N, MacdonaldBasis& x_basis, MacdonaldBasis& y_basis);

} // namespace macq

#endif
