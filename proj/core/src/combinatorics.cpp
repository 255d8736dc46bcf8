#include "figulat/combinatorics.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "figulat/errors.hpp"

namespace figulat {
namespace {

void require_nonneg(int v, const char* what) {
    if (v < 0) throw DomainError(std::string(what) + " must be nonnegative, got " + std::to_string(v));
}

// Triangular table rows_[m][j], 0 <= j <= m. Readers take a shared lock;
// growth happens under the exclusive lock and only appends rows, so a value
// once visible never changes.
class StirlingTable {
public:
    Count get(int m, int j) {
        if (j > m) return Count{0};
        {
            std::shared_lock lock(mutex_);
            if (static_cast<std::size_t>(m) < rows_.size()) return rows_[m][j];
        }
        std::unique_lock lock(mutex_);
        while (rows_.size() <= static_cast<std::size_t>(m)) append_row();
        return rows_[m][j];
    }

private:
    void append_row() {
        const std::size_t m = rows_.size();
        std::vector<Count> row(m + 1);
        if (m == 0) {
            row[0] = Count{1};
        } else {
            const auto& prev = rows_[m - 1];
            row[0] = Count{0};
            for (std::size_t j = 1; j <= m; ++j) {
                Count term = j < m ? Count{j} * prev[j] : Count{0};
                row[j] = term + prev[j - 1];
            }
        }
        rows_.push_back(std::move(row));
    }

    std::shared_mutex mutex_;
    std::vector<std::vector<Count>> rows_;
};

StirlingTable& stirling_table() {
    static StirlingTable table;
    return table;
}

}  // namespace

Count binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) return Count{0};
    if (b > a - b) b = a - b;
    BigInt r = 1;
    // r = C(a - b + i, i) after step i, always integral.
    for (std::uint64_t i = 1; i <= b; ++i) {
        r *= (a - b + i);
        r /= i;
    }
    return Count{r};
}

Count figurate(int k, std::uint64_t n) {
    if (k < 1) throw DomainError("figurate: dimension k must be >= 1, got " + std::to_string(k));
    if (n < 1) throw DomainError("figurate: side n must be >= 1, got 0");
    return binomial(n + static_cast<std::uint64_t>(k) - 1, static_cast<std::uint64_t>(k));
}

Count stirling2_recurrence(int m, int j) {
    require_nonneg(m, "stirling2: m");
    require_nonneg(j, "stirling2: j");
    return stirling_table().get(m, j);
}

Count stirling2_inclusion_exclusion(int m, int j) {
    require_nonneg(m, "stirling2_inclusion_exclusion: m");
    if (j < 1) throw DomainError("stirling2_inclusion_exclusion: j must be >= 1, got " + std::to_string(j));
    BigInt sum = 0;
    for (int i = 0; i <= j; ++i) {
        BigInt term = binomial(static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(i)).value() *
                      boost::multiprecision::pow(BigInt(j - i), static_cast<unsigned>(m));
        if (i % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    const BigInt jfact = factorial(j).value();
    if (sum % jfact != 0) {
        throw InternalError("stirling2_inclusion_exclusion: alternating sum " + sum.str() +
                            " not divisible by " + std::to_string(j) + "!");
    }
    return Count{BigInt(sum / jfact)};
}

Count factorial(int n) {
    require_nonneg(n, "factorial: n");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return Count{r};
}

Count surjection_count(int m, int j) {
    require_nonneg(m, "surjection_count: m");
    require_nonneg(j, "surjection_count: j");
    if (j > m) return Count{0};
    return factorial(j) * stirling2_recurrence(m, j);
}

Count facet_count(int p, int l) {
    if (p < 1) throw DomainError("facet_count: dimension p must be >= 1, got " + std::to_string(p));
    if (l < 0 || l >= p) {
        throw DomainError("facet_count: codimension l must lie in [0, " + std::to_string(p - 1) +
                          "], got " + std::to_string(l));
    }
    return surjection_count(p, p - l);
}

SignedCount falling_factorial(std::int64_t x, int j) {
    require_nonneg(j, "falling_factorial: j");
    SignedCount r = 1;
    for (int i = 0; i < j; ++i) r *= SignedCount(x) - i;
    return r;
}

SignedCount stirling_identity_eval(int p, std::int64_t x) {
    if (p < 1) throw DomainError("stirling_identity_eval: p must be >= 1, got " + std::to_string(p));
    SignedCount sum = 0;
    for (int j = 1; j <= p; ++j) sum += stirling2_recurrence(p, j).value() * falling_factorial(x, j);
    return sum;
}

SignedCount rhs_identity(int p, std::uint64_t n) {
    if (p < 1) throw DomainError("rhs_identity: p must be >= 1, got " + std::to_string(p));
    if (n < 1) throw DomainError("rhs_identity: n must be >= 1, got 0");
    SignedCount sum = 0;
    for (int l = 0; l < p; ++l) {
        SignedCount term = (facet_count(p, l) * figurate(p - l, n)).as_signed();
        if (l % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Count power(std::uint64_t n, int p) {
    require_nonneg(p, "power: p");
    return Count{boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(p))};
}

}  // namespace figulat
