#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "figulat/budget.hpp"

// Faces of the order decomposition of the cube [0, n-1]^p. Every face is cut
// out by a chain x_{s1} L1 x_{s2} ... x_{sp} with each L either ">=" or "=";
// a face of codimension l uses exactly l equalities. Following the usual
// naming in this area, faces of every codimension are called facets here.
//
// Indices are 1-based throughout to match the printed form "{1,2}>={3}".

namespace figulat {

enum class Relation : std::uint8_t { Geq, Eq };

class ChainExpression {
public:
    // Throws DomainError unless sigma is a permutation of {1..p} and there are
    // exactly p - 1 relations.
    ChainExpression(std::vector<int> sigma, std::vector<Relation> relations);

    int dimension() const noexcept { return static_cast<int>(sigma_.size()); }
    int codimension() const noexcept;
    const std::vector<int>& sigma() const noexcept { return sigma_; }
    const std::vector<Relation>& relations() const noexcept { return relations_; }

    // "x2=x1>=x3"
    std::string str() const;

    friend auto operator<=>(const ChainExpression&, const ChainExpression&) = default;

private:
    std::vector<int> sigma_;
    std::vector<Relation> relations_;
};

// An ordered sequence of disjoint nonempty blocks covering {1..p}. Blocks keep
// chain order (the first block carries the largest coordinate value); indices
// within a block are sorted on construction.
class OrderedSetPartition {
public:
    explicit OrderedSetPartition(std::vector<std::vector<int>> blocks);

    // Parses the text form produced by str(). Throws DomainError.
    static OrderedSetPartition parse(std::string_view text);

    int dimension() const noexcept { return dimension_; }
    int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
    int codimension() const noexcept { return dimension_ - block_count(); }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

    // "{1,2}>={3}"
    std::string str() const;

    friend bool operator==(const OrderedSetPartition& a, const OrderedSetPartition& b) {
        return a.blocks_ == b.blocks_;
    }
    friend auto operator<=>(const OrderedSetPartition& a, const OrderedSetPartition& b) {
        return a.blocks_ <=> b.blocks_;
    }

private:
    std::vector<std::vector<int>> blocks_;
    int dimension_ = 0;
};

// A map {1..p} -> {1..k} attaining every value. values()[i] is the image of
// index i + 1.
class Surjection {
public:
    // Throws DomainError if some value in {1..k} is missed or out of range.
    Surjection(std::vector<int> values, int codomain);

    int domain_size() const noexcept { return static_cast<int>(values_.size()); }
    int codomain_size() const noexcept { return codomain_; }
    const std::vector<int>& values() const noexcept { return values_; }
    int operator()(int index) const { return values_.at(static_cast<std::size_t>(index - 1)); }

    // "[1,1,2]"
    std::string str() const;

    friend auto operator<=>(const Surjection&, const Surjection&) = default;

private:
    std::vector<int> values_;
    int codomain_;
};

// Lazily yields every chain expression of dimension p with exactly l
// equalities, ordered lexicographically by (sigma, relations) with Geq < Eq.
class ChainExpressionStream {
public:
    // Throws DomainError for p < 1 or l outside [0, p-1], and ResourceError
    // when p! * 2^(p-1) exceeds budget.max_expressions.
    ChainExpressionStream(int p, int l, const Budget& budget = {});

    std::optional<ChainExpression> next();

private:
    bool advance_relations();

    std::vector<int> sigma_;
    std::vector<Relation> relations_;
    bool done_ = false;
    bool started_ = false;
};

std::vector<ChainExpression> enumerate_chain_expressions(int p, int l, const Budget& budget = {});

// Merges maximal runs joined by "=" into blocks.
OrderedSetPartition canonicalize(const ChainExpression& e);

struct FacetPreimage {
    OrderedSetPartition facet;
    std::uint64_t expressions;  // chain expressions that canonicalize to facet
};

// Canonical images of all chain expressions of codimension l, deduplicated,
// in lexicographic order of block sequences.
std::vector<OrderedSetPartition> enumerate_facets(int p, int l, const Budget& budget = {});

// As enumerate_facets, also reporting how many expressions map to each facet.
std::vector<FacetPreimage> enumerate_facets_with_preimages(int p, int l, const Budget& budget = {});

// Every facet of the p-cube decomposition, indexed by codimension.
class FacetCatalog {
public:
    FacetCatalog(int p, const Budget& budget = {});

    int dimension() const noexcept { return dimension_; }
    const std::vector<OrderedSetPartition>& codimension(int l) const { return by_codim_.at(static_cast<std::size_t>(l)); }

private:
    int dimension_;
    std::vector<std::vector<OrderedSetPartition>> by_codim_;
};

// Block i maps to value i.
Surjection facet_to_surjection(const OrderedSetPartition& f);
// Block i is the preimage of value i.
OrderedSetPartition surjection_to_facet(const Surjection& s);

}  // namespace figulat
