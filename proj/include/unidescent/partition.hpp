#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "unidescent/numeric.hpp"

namespace unidescent {

/*
 * Integer partition with weakly decreasing positive parts, realized as a
 * Young diagram with left-justified rows. The empty partition (n = 0) is a
 * first-class value: it is the base case of every recursion here, labels the
 * trivial group S_0, and is a legal descent target (U_0).
 *
 * Canonical text form: comma-separated decreasing parts, "[]" for empty.
 * Canonical enumeration order for partitions of fixed n: reverse
 * lexicographic, i.e. [n] first, [1,...,1] last.
 */
class Partition {
public:
    Partition() = default;
    // Requires weakly decreasing positive parts; throws constraint_error.
    explicit Partition(std::vector<int> parts);

    // Sorts descending and drops zeros; accepts any nonnegative multiset.
    static Partition from_unsorted(std::vector<int> values);
    // Parses the canonical text form; throws parse_error.
    static Partition parse(std::string_view text);

    int size() const { return size_; }                            // n
    int rows() const { return static_cast<int>(parts_.size()); }  // k
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    // Zero-padded row access: part(i) == 0 for i >= rows().
    int part(int i) const {
        return (i >= 0 && i < rows()) ? parts_[static_cast<size_t>(i)] : 0;
    }
    int multiplicity(int value) const;

    std::string str() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    // Plain lexicographic compare on parts; the canonical order of
    // partitions_of() is the descending direction of this.
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// Conjugate diagram (columns become rows); an involution.
Partition transpose(const Partition& p);

// [p_1 - 1, ..., p_k - 1] with zeros dropped; size n - k.
Partition remove_first_column(const Partition& p);

// [p_2, ..., p_k]; size n - p_1.
Partition remove_first_row(const Partition& p);

// Multiset union of the parts, re-sorted decreasing.
Partition union_parts(const Partition& a, const Partition& b);

// Multiset containment: every part value of sub occurs in sup at least as often.
bool is_submultiset(const Partition& sub, const Partition& sup);

// Every distinct sub-multiset exactly once (including [] and p itself),
// graded by size then lexicographically descending within a grade.
std::vector<Partition> sub_multisets(const Partition& p);

// C_{lam,sub} = prod over part values of binom(mult in lam, mult in sub).
// Requires is_submultiset(sub, lam); throws constraint_error.
Int binom_embeddings(const Partition& lam, const Partition& sub);

// z_mu = prod over part values j of j^{m_j} * m_j!, the order of the S_n
// centralizer of a permutation of cycle type mu.
Int centralizer_order(const Partition& mu);

// n! / z_mu.
Int conjugacy_class_size(const Partition& mu);

// Sign of a permutation of cycle type mu: (-1)^(n - k).
int perm_sign(const Partition& mu);

// The predicates below compare part-wise after sorting decreasing and
// zero-padding the shorter sequence.
bool is_close(const Partition& a, const Partition& b);   // |a_i - b_i| <= 1 for all i
bool is_even(const Partition& p);                        // every part value has even multiplicity
Partition meet(const Partition& a, const Partition& b);  // index-wise equal parts, zeros excluded
bool is_2transverse(const Partition& a, const Partition& b);  // close and meet even
bool is_transverse(const Partition& a, const Partition& b);   // close and meet empty

// All partitions of n in canonical (reverse-lexicographic) order.
std::vector<Partition> partitions_of(int n);
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

}  // namespace unidescent
