#include "figulat/facets.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "figulat/errors.hpp"

namespace figulat {
namespace {

void require_permutation(const std::vector<int>& sigma) {
    std::vector<bool> seen(sigma.size() + 1, false);
    for (int v : sigma) {
        if (v < 1 || v > static_cast<int>(sigma.size()) || seen[static_cast<std::size_t>(v)]) {
            throw DomainError("chain expression: sigma is not a permutation of {1.." +
                              std::to_string(sigma.size()) + "}");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

void require_codimension(int p, int l) {
    if (p < 1) throw DomainError("dimension p must be >= 1, got " + std::to_string(p));
    if (l < 0 || l >= p) {
        throw DomainError("codimension l must lie in [0, " + std::to_string(p - 1) + "], got " +
                          std::to_string(l));
    }
}

}  // namespace

ChainExpression::ChainExpression(std::vector<int> sigma, std::vector<Relation> relations)
    : sigma_(std::move(sigma)), relations_(std::move(relations)) {
    if (sigma_.empty()) throw DomainError("chain expression: empty permutation");
    require_permutation(sigma_);
    if (relations_.size() + 1 != sigma_.size()) {
        throw DomainError("chain expression: expected " + std::to_string(sigma_.size() - 1) +
                          " relations, got " + std::to_string(relations_.size()));
    }
}

int ChainExpression::codimension() const noexcept {
    return static_cast<int>(std::count(relations_.begin(), relations_.end(), Relation::Eq));
}

std::string ChainExpression::str() const {
    std::string s = "x" + std::to_string(sigma_[0]);
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        s += relations_[i] == Relation::Eq ? "=" : ">=";
        s += "x" + std::to_string(sigma_[i + 1]);
    }
    return s;
}

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw DomainError("ordered set partition: no blocks");
    std::size_t total = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw DomainError("ordered set partition: empty block");
        std::sort(b.begin(), b.end());
        total += b.size();
    }
    std::vector<bool> seen(total + 1, false);
    for (const auto& b : blocks_) {
        for (int v : b) {
            if (v < 1 || v > static_cast<int>(total) || seen[static_cast<std::size_t>(v)]) {
                throw DomainError("ordered set partition: blocks do not partition {1.." +
                                  std::to_string(total) + "}");
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
    dimension_ = static_cast<int>(total);
}

OrderedSetPartition OrderedSetPartition::parse(std::string_view text) {
    std::vector<std::vector<int>> blocks;
    std::size_t pos = 0;
    auto fail = [&]() -> OrderedSetPartition {
        throw DomainError("cannot parse facet '" + std::string(text) + "'");
    };
    while (true) {
        if (pos >= text.size() || text[pos] != '{') return fail();
        ++pos;
        std::vector<int> block;
        while (true) {
            int v = 0;
            auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
            if (ec != std::errc{}) return fail();
            pos = static_cast<std::size_t>(ptr - text.data());
            block.push_back(v);
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == '}') {
                ++pos;
                break;
            }
            return fail();
        }
        blocks.push_back(std::move(block));
        if (pos == text.size()) break;
        if (text.substr(pos, 2) != ">=") return fail();
        pos += 2;
    }
    return OrderedSetPartition(std::move(blocks));
}

std::string OrderedSetPartition::str() const {
    std::string s;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i > 0) s += ">=";
        s += '{';
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j > 0) s += ',';
            s += std::to_string(blocks_[i][j]);
        }
        s += '}';
    }
    return s;
}

Surjection::Surjection(std::vector<int> values, int codomain) : values_(std::move(values)), codomain_(codomain) {
    if (codomain_ < 0) throw DomainError("surjection: negative codomain size");
    std::vector<bool> hit(static_cast<std::size_t>(codomain_) + 1, false);
    for (int v : values_) {
        if (v < 1 || v > codomain_) {
            throw DomainError("surjection: value " + std::to_string(v) + " outside {1.." +
                              std::to_string(codomain_) + "}");
        }
        hit[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 1; v <= codomain_; ++v) {
        if (!hit[static_cast<std::size_t>(v)]) {
            throw DomainError("surjection: value " + std::to_string(v) + " is never attained");
        }
    }
}

std::string Surjection::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(values_[i]);
    }
    return s + "]";
}

ChainExpressionStream::ChainExpressionStream(int p, int l, const Budget& budget) {
    require_codimension(p, l);
    if (raw_expression_total(p) > budget.max_expressions) {
        throw ResourceError("max-expressions", budget.max_expressions,
                            "enumerating chain expressions at p = " + std::to_string(p) + " needs " +
                                std::to_string(raw_expression_total(p)) + " expressions");
    }
    sigma_.resize(static_cast<std::size_t>(p));
    std::iota(sigma_.begin(), sigma_.end(), 1);
    relations_.assign(static_cast<std::size_t>(p - 1), Relation::Geq);
    std::fill(relations_.end() - l, relations_.end(), Relation::Eq);
}

bool ChainExpressionStream::advance_relations() {
    return std::next_permutation(relations_.begin(), relations_.end());
}

std::optional<ChainExpression> ChainExpressionStream::next() {
    if (done_) return std::nullopt;
    if (started_) {
        // next_permutation wraps back to the smallest arrangement on false,
        // which is exactly the starting relation vector for the next sigma.
        if (!advance_relations() && !std::next_permutation(sigma_.begin(), sigma_.end())) {
            done_ = true;
            return std::nullopt;
        }
    }
    started_ = true;
    return ChainExpression(sigma_, relations_);
}

std::vector<ChainExpression> enumerate_chain_expressions(int p, int l, const Budget& budget) {
    ChainExpressionStream stream(p, l, budget);
    std::vector<ChainExpression> out;
    while (auto e = stream.next()) out.push_back(std::move(*e));
    return out;
}

OrderedSetPartition canonicalize(const ChainExpression& e) {
    std::vector<std::vector<int>> blocks;
    blocks.push_back({e.sigma()[0]});
    for (std::size_t i = 0; i < e.relations().size(); ++i) {
        if (e.relations()[i] == Relation::Geq) blocks.emplace_back();
        blocks.back().push_back(e.sigma()[i + 1]);
    }
    return OrderedSetPartition(std::move(blocks));
}

std::vector<FacetPreimage> enumerate_facets_with_preimages(int p, int l, const Budget& budget) {
    std::map<OrderedSetPartition, std::uint64_t> seen;
    ChainExpressionStream stream(p, l, budget);
    while (auto e = stream.next()) ++seen[canonicalize(*e)];
    std::vector<FacetPreimage> out;
    out.reserve(seen.size());
    for (auto& [facet, n] : seen) out.push_back({facet, n});
    return out;
}

std::vector<OrderedSetPartition> enumerate_facets(int p, int l, const Budget& budget) {
    auto with = enumerate_facets_with_preimages(p, l, budget);
    std::vector<OrderedSetPartition> out;
    out.reserve(with.size());
    for (auto& fp : with) out.push_back(std::move(fp.facet));
    return out;
}

FacetCatalog::FacetCatalog(int p, const Budget& budget) : dimension_(p) {
    require_codimension(p, 0);
    by_codim_.reserve(static_cast<std::size_t>(p));
    for (int l = 0; l < p; ++l) by_codim_.push_back(enumerate_facets(p, l, budget));
}

Surjection facet_to_surjection(const OrderedSetPartition& f) {
    std::vector<int> values(static_cast<std::size_t>(f.dimension()));
    for (std::size_t b = 0; b < f.blocks().size(); ++b) {
        for (int idx : f.blocks()[b]) values[static_cast<std::size_t>(idx - 1)] = static_cast<int>(b) + 1;
    }
    return Surjection(std::move(values), f.block_count());
}

OrderedSetPartition surjection_to_facet(const Surjection& s) {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(s.codomain_size()));
    for (int i = 1; i <= s.domain_size(); ++i) blocks[static_cast<std::size_t>(s(i) - 1)].push_back(i);
    return OrderedSetPartition(std::move(blocks));
}

}  // namespace figulat
