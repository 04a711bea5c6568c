#ifndef MACQ_PARTITIONS_HPP
#define MACQ_PARTITIONS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "macq/qfield.hpp"

namespace macq {

/// Weakly decreasing sequence of non-negative integers living in an ambient
/// number of slots n. Trailing zeros are not stored; part(i) returns 0 past the
/// length. The slot count matters for formulas indexed by 1..n.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are weakly decreasing, non-negative,
    /// and have at most n_slots nonzero entries. n_slots < 0 means "use the length".
    explicit Partition(std::vector<int> parts, int n_slots = -1);

    /// Parses "2,1,0" (empty string or "0" is the empty partition).
    static Partition parse(const std::string& text, int n_slots = -1);

    const std::vector<int>& parts() const { return parts_; }
    int n_slots() const { return n_slots_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    /// 1-based part; zero beyond the length.
    int part(int i) const;
    /// The n_slots-long exponent vector (lambda_1, ..., lambda_n).
    std::vector<int> padded() const;
    Partition with_slots(int n_slots) const { return Partition(parts_, n_slots); }

    /// "2,1" (empty partition prints as "").
    std::string key() const;
    /// "(2,1)"
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    /// Lexicographic order on the parts; slots are ignored.
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
    int n_slots_ = 0;
};

/// A box (row, col) of a Young diagram, both 1-based.
struct Cell {
    int row = 1;
    int col = 1;
};

Partition conjugate(const Partition& lambda);

/// mu <= lambda in dominance order (equal weights, prefix sums of lambda dominate).
bool dominance_leq(const Partition& mu, const Partition& lambda);
/// True when either dominance_leq(a, b) or dominance_leq(b, a).
bool dominance_comparable(const Partition& a, const Partition& b);

struct ArmLeg {
    int arm = 0;
    int leg = 0;
};

/// Throws std::out_of_range for a cell outside the diagram.
ArmLeg arm_leg(const Partition& lambda, Cell s);

/// b_lambda as a product over cells with t = q^k.
QRat b_lambda_armleg(const Partition& lambda, int k);
/// b_lambda as a row-indexed Pochhammer product over n slots, t = q^k.
QRat b_lambda_product(const Partition& lambda, int n, int k);

/// Closed-form <P_lambda, P_lambda> as a double product over pairs and r = 1..k-1.
QRat norm_formula(const Partition& lambda, int n, int k);
/// The same norm written as a ratio of Pochhammer symbols over pairs i < j.
QRat norm_formula_poch(const Partition& lambda, int n, int k);

/// All partitions of `weight` with at most `max_len` parts, reverse-lexicographic
/// (largest first). Each partition carries n_slots = max_len.
std::vector<Partition> enumerate_partitions(int weight, int max_len);

// JSON: {"parts": [2,1], "n": 3}
void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

} // namespace macq

#endif
