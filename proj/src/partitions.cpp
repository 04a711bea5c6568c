#include "macq/partitions.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace macq {

Partition::Partition(std::vector<int> parts, int n_slots)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) {
            throw std::invalid_argument("partition has a negative part");
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    while (!parts.empty() && parts.back() == 0) {
        parts.pop_back();
    }
    parts_ = std::move(parts);
    n_slots_ = n_slots < 0 ? length() : n_slots;
    if (length() > n_slots_) {
        throw std::invalid_argument("partition " + to_string() + " has more than " + std::to_string(n_slots_) +
                                    " nonzero parts");
    }
}

Partition Partition::parse(const std::string& text, int n_slots)
{
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition entry '" + item + "'");
        }
        if (used != item.size()) {
            throw std::invalid_argument("bad partition entry '" + item + "'");
        }
        parts.push_back(v);
    }
    return Partition(std::move(parts), n_slots);
}

int Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const
{
    if (i < 1 || i > length()) {
        return 0;
    }
    return parts_[static_cast<std::size_t>(i - 1)];
}

std::vector<int> Partition::padded() const
{
    std::vector<int> v = parts_;
    v.resize(static_cast<std::size_t>(std::max(n_slots_, length())), 0);
    return v;
}

std::string Partition::key() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::string Partition::to_string() const
{
    return "(" + key() + ")";
}

Partition conjugate(const Partition& lambda)
{
    std::vector<int> conj;
    const int top = lambda.part(1);
    conj.reserve(static_cast<std::size_t>(top));
    for (int i = 1; i <= top; ++i) {
        int count = 0;
        for (int p : lambda.parts()) {
            if (p >= i) {
                ++count;
            }
        }
        conj.push_back(count);
    }
    return Partition(std::move(conj));
}

bool dominance_leq(const Partition& mu, const Partition& lambda)
{
    if (mu.weight() != lambda.weight()) {
        return false;
    }
    const int len = std::max(mu.length(), lambda.length());
    int sum_mu = 0;
    int sum_lambda = 0;
    for (int i = 1; i <= len; ++i) {
        sum_mu += mu.part(i);
        sum_lambda += lambda.part(i);
        if (sum_lambda < sum_mu) {
            return false;
        }
    }
    return true;
}

bool dominance_comparable(const Partition& a, const Partition& b)
{
    return dominance_leq(a, b) || dominance_leq(b, a);
}

ArmLeg arm_leg(const Partition& lambda, Cell s)
{
    if (s.row < 1 || s.col < 1 || s.col > lambda.part(s.row)) {
        throw std::out_of_range("cell (" + std::to_string(s.row) + "," + std::to_string(s.col) +
                                ") is outside the diagram of " + lambda.to_string());
    }
    const Partition conj = conjugate(lambda);
    return {lambda.part(s.row) - s.col, conj.part(s.col) - s.row};
}

namespace {

// 1 - q^e as an element of Q(q); e may be negative.
QRat one_minus_q_power(int e)
{
    return QRat(1) - QRat::q_power(e);
}

} // namespace

QRat b_lambda_armleg(const Partition& lambda, int k)
{
    if (k < 1) {
        throw std::invalid_argument("k must be positive");
    }
    const Partition conj = conjugate(lambda);
    QPoly num = QPoly::constant(1);
    QPoly den = QPoly::constant(1);
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            const int a = lambda.part(i) - j;
            const int l = conj.part(j) - i;
            // (1 - q^a t^(l+1)) / (1 - q^(a+1) t^l)
            num = num * (QPoly::constant(1) - QPoly::monomial(1, a + k * (l + 1)));
            den = den * (QPoly::constant(1) - QPoly::monomial(1, a + 1 + k * l));
        }
    }
    return QRat(std::move(num), std::move(den));
}

QRat b_lambda_product(const Partition& lambda, int n, int k)
{
    if (k < 1 || n < 0) {
        throw std::invalid_argument("b_lambda_product: need k >= 1 and n >= 0");
    }
    if (lambda.length() > n) {
        throw std::invalid_argument("b_lambda_product: length exceeds n");
    }
    QRat result(1);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int d = lambda.part(i) - lambda.part(j);
            result *= pochhammer(QRat::q_power(d + 1 + (j - i - 1) * k), k - 1);
            result /= pochhammer(QRat::q_power(d + 1 + (j - i) * k), k - 1);
        }
    }
    const QRat qq = pochhammer(QRat::q_power(1), k - 1);
    for (int i = 1; i <= n; ++i) {
        result *= pochhammer(QRat::q_power(lambda.part(i) + 1 + k * (n - i)), k - 1);
        result /= qq;
    }
    return result;
}

QRat norm_formula(const Partition& lambda, int n, int k)
{
    if (k < 1 || n < 0) {
        throw std::invalid_argument("norm_formula: need k >= 1 and n >= 0");
    }
    if (lambda.length() > n) {
        throw std::invalid_argument("norm_formula: length exceeds n");
    }
    QRat result(1);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int d = lambda.part(i) - lambda.part(j);
            for (int r = 1; r <= k - 1; ++r) {
                // t^(j-i) = q^(k (j-i))
                result *= one_minus_q_power(d + r + k * (j - i));
                result /= one_minus_q_power(d - r + k * (j - i));
            }
        }
    }
    return result;
}

QRat norm_formula_poch(const Partition& lambda, int n, int k)
{
    if (k < 1 || n < 0) {
        throw std::invalid_argument("norm_formula_poch: need k >= 1 and n >= 0");
    }
    if (lambda.length() > n) {
        throw std::invalid_argument("norm_formula_poch: length exceeds n");
    }
    QRat result(1);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int d = lambda.part(i) - lambda.part(j);
            result *= pochhammer(QRat::q_power(d + 1 + (j - i) * k), k - 1);
            result /= pochhammer(QRat::q_power(d + 1 + (j - i - 1) * k), k - 1);
        }
    }
    return result;
}

namespace {

void enumerate_into(int remaining, int max_part, int slots_left, std::vector<int>& prefix, int n_slots,
                    std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix, n_slots);
        return;
    }
    if (slots_left == 0) {
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate_into(remaining - p, p, slots_left - 1, prefix, n_slots, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int weight, int max_len)
{
    if (weight < 0 || max_len < 0) {
        throw std::invalid_argument("enumerate_partitions: negative argument");
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_into(weight, weight, max_len, prefix, max_len, out);
    return out;
}

void to_json(nlohmann::json& j, const Partition& p)
{
    j = nlohmann::json{{"parts", p.parts()}, {"n", p.n_slots()}};
}

void from_json(const nlohmann::json& j, Partition& p)
{
    p = Partition(j.at("parts").get<std::vector<int>>(), j.at("n").get<int>());
}

} // namespace macq
