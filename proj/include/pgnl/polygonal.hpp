#ifndef PGNL_POLYGONAL_HPP
#define PGNL_POLYGONAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "pgnl/numeric.hpp"

namespace pgnl {

// One term a * P_m of a sum of generalized polygonal numbers, where
// P_m(x) = ((m-2)x^2 - (m-4)x) / 2 ranges over all integer x.
struct Term {
    Int a = 1;
    Int m = 3;

    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term& lhs, const Term& rhs) {
        if (auto c = lhs.a <=> rhs.a; c != 0) return c;
        return lhs.m <=> rhs.m;
    }
};

// A sum a_1 P_{m_1} + ... + a_r P_{m_r}, kept in canonical order: terms
// sorted by (a, m). Representation counts are invariant under term order,
// so canonicalization is safe and makes sums comparable.
class PolygonalSum {
public:
    PolygonalSum() = default;
    explicit PolygonalSum(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t rank() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    PolygonalSum with_term(Term t) const;
    // Same sum with terms[i].m replaced (0-based index).
    PolygonalSum with_polygon(std::size_t i, Int m) const;

    friend bool operator==(const PolygonalSum&, const PolygonalSum&) = default;
    friend auto operator<=>(const PolygonalSum& lhs, const PolygonalSum& rhs) {
        return lhs.terms_ <=> rhs.terms_;
    }

private:
    std::vector<Term> terms_;
};

// Outcome of a bounded truant search: either the least non-represented
// positive integer, or the evidence that none exists up to the cap.
// Universality is never decided, only CandidateUniversal(cap).
struct TruantResult {
    std::optional<Int> truant;
    Int checked_up_to = 0;

    bool is_truant() const { return truant.has_value(); }
    bool is_candidate_universal() const { return !truant.has_value(); }

    friend bool operator==(const TruantResult&, const TruantResult&) = default;
};

// P_m(x), exact for arbitrary x. Requires m >= 3; always non-negative.
BigInt polygonal_number(Int m, const BigInt& x);
// Machine-word fast path. Callers must have certified no overflow
// (used internally, where values are bounded by a sieve bound).
Int polygonal_number_i64(Int m, Int x);

// #{x : P_m(x) = v} for v >= 0, by solving the quadratic exactly.
Int polygonal_preimage_count(Int m, Int v);

// { P_m(x) : x in Z } intersected with [0, bound], sorted ascending.
std::vector<Int> values_up_to(Int m, Int bound);

// r_F(n): number of tuples (x_1, ..., x_r) with sum a_i P_{m_i}(x_i) = n.
// Bounded enumeration with early pruning on the remaining budget.
BigInt representation_count(const PolygonalSum& F, const BigInt& n);

// r_F(n) for all 0 <= n <= bound in one enumeration pass.
std::vector<Int> representation_counts_up_to(const PolygonalSum& F, Int bound);

// Least 1 <= k <= bound with r_F(k) = 0, or nullopt if F represents all of
// [1, bound]. Sieve-based: combines precomputed value sets term by term.
std::optional<Int> represents_all_up_to(const PolygonalSum& F, Int bound);

TruantResult truant(const PolygonalSum& F, Int cap);

// Sum expression grammar: term := [int "*"] "P" int, terms joined by "+",
// whitespace insensitive (e.g. "P3+2*P5"). format() emits canonical form.
PolygonalSum parse_sum(const std::string& text);
std::string format_sum(const PolygonalSum& F);

} // namespace pgnl

#endif
