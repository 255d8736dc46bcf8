#include "figulat/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "figulat/errors.hpp"

namespace figulat::oracle {
namespace {

std::uint64_t checked_space(std::uint64_t base, int exp, const Budget& budget, const char* what) {
    const std::uint64_t size = saturating_pow(base, static_cast<unsigned>(exp));
    if (size > budget.max_points) {
        throw ResourceError("max-points", budget.max_points, std::string(what) + " needs " + std::to_string(size) +
                                                                 " candidates");
    }
    return size;
}

// Odometer over all length-len tuples with entries in [0, base).
bool odometer_step(std::vector<int>& digits, int base) {
    for (std::size_t i = digits.size(); i > 0; --i) {
        if (++digits[i - 1] < base) return true;
        digits[i - 1] = 0;
    }
    return false;
}

}  // namespace

std::vector<Surjection> surjections(int m, int k, const Budget& budget) {
    if (m < 0 || k < 0) throw DomainError("oracle::surjections: negative size");
    std::vector<Surjection> out;
    if (k == 0 && m > 0) return out;
    checked_space(static_cast<std::uint64_t>(k), m, budget, "oracle::surjections");
    std::vector<int> digits(static_cast<std::size_t>(m), 0);
    do {
        std::vector<bool> hit(static_cast<std::size_t>(k), false);
        for (int d : digits) hit[static_cast<std::size_t>(d)] = true;
        if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
            std::vector<int> values(digits.begin(), digits.end());
            for (auto& v : values) ++v;
            out.emplace_back(std::move(values), k);
        }
    } while (odometer_step(digits, k));
    return out;
}

std::vector<SetPartition> set_partitions(int m) {
    if (m < 0) throw DomainError("oracle::set_partitions: negative size");
    if (m > kMaxSetPartitionSize) {
        throw ResourceError("set-partition-size", kMaxSetPartitionSize,
                            "oracle::set_partitions at m = " + std::to_string(m));
    }
    std::vector<SetPartition> out;
    if (m == 0) {
        out.emplace_back();
        return out;
    }
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> rgs(static_cast<std::size_t>(m), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int max_label) {
        if (i == rgs.size()) {
            SetPartition part(static_cast<std::size_t>(max_label) + 1);
            for (std::size_t e = 0; e < rgs.size(); ++e) {
                part[static_cast<std::size_t>(rgs[e])].push_back(static_cast<int>(e) + 1);
            }
            out.push_back(std::move(part));
            return;
        }
        for (int label = 0; label <= max_label + 1; ++label) {
            rgs[i] = label;
            rec(i + 1, std::max(max_label, label));
        }
    };
    rec(1, 0);
    return out;
}

Count weakly_decreasing_tuples(int k, std::uint64_t n, const Budget& budget) {
    if (k < 0) throw DomainError("oracle::weakly_decreasing_tuples: negative length");
    if (n < 1) throw DomainError("oracle::weakly_decreasing_tuples: n must be >= 1");
    checked_space(n, k, budget, "oracle::weakly_decreasing_tuples");
    std::uint64_t hits = 0;
    std::vector<int> digits(static_cast<std::size_t>(k), 0);
    do {
        bool ok = true;
        for (std::size_t i = 1; i < digits.size(); ++i) ok = ok && digits[i - 1] >= digits[i];
        hits += ok ? 1 : 0;
    } while (odometer_step(digits, static_cast<int>(n)));
    return Count{hits};
}

std::uint64_t cube_scan_count(const OrderedSetPartition& f, std::uint64_t n, const Budget& budget) {
    if (n < 1) throw DomainError("oracle::cube_scan_count: n must be >= 1");
    const int p = f.dimension();
    checked_space(n, p, budget, "oracle::cube_scan_count");
    std::uint64_t hits = 0;
    std::vector<int> x(static_cast<std::size_t>(p), 0);
    do {
        bool inside = true;
        for (std::size_t b = 0; b < f.blocks().size() && inside; ++b) {
            const auto& block = f.blocks()[b];
            for (int idx : block) inside = inside && x[static_cast<std::size_t>(idx - 1)] == x[static_cast<std::size_t>(block[0] - 1)];
            if (b > 0) {
                inside = inside && x[static_cast<std::size_t>(f.blocks()[b - 1][0] - 1)] >=
                                       x[static_cast<std::size_t>(block[0] - 1)];
            }
        }
        hits += inside ? 1 : 0;
    } while (odometer_step(x, static_cast<int>(n)));
    return hits;
}

SignedCount signed_cover(const LatticePoint& pt, int p) {
    if (pt.dimension() != p) throw DomainError("oracle::signed_cover: dimension mismatch");
    std::map<std::int64_t, int> group_sizes;
    for (auto c : pt.coords()) ++group_sizes[c];
    SignedCount product = 1;
    for (const auto& [value, g] : group_sizes) {
        SignedCount factor = 0;
        for (int j = 1; j <= g; ++j) {
            const auto surj = static_cast<long>(surjections(g, j).size());
            if ((g - j) % 2 == 0) {
                factor += surj;
            } else {
                factor -= surj;
            }
        }
        product *= factor;
    }
    return product;
}

}  // namespace figulat::oracle
