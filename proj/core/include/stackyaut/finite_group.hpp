#ifndef STACKYAUT_FINITE_GROUP_HPP
#define STACKYAUT_FINITE_GROUP_HPP

#include <cstdint>
#include <vector>

#include "stackyaut/int_matrix.hpp"

namespace stackyaut {

using Elt = std::uint8_t;

struct GroupQuotient;

/// Finite group of order <= 255 given by its multiplication table.
/// Group axioms are verified exhaustively at construction.
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::vector<Elt>> table);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    std::size_t order() const { return order_; }
    Elt op(Elt a, Elt b) const { return table_[a][b]; }
    Elt identity() const { return identity_; }
    Elt inverse(Elt a) const { return inverse_[a]; }

    bool is_abelian() const;
    std::size_t element_order(Elt a) const;

    /// Closure of a generating subset, sorted.
    std::vector<Elt> generated_subgroup(const std::vector<Elt>& gens) const;
    bool is_normal(const std::vector<Elt>& subgroup) const;

    /// The subgroup on the given (closed) element set, as its own group;
    /// element i of the result is elements[i] here.
    FiniteGroup subgroup(const std::vector<Elt>& elements) const;

    /// Quotient by a normal subgroup: the coset group plus the projection
    /// table (element -> coset index).
    GroupQuotient quotient(const std::vector<Elt>& normal_subgroup) const;

    /// Invariant factors t1 | t2 | ... for abelian groups (empty if trivial).
    IntVector abelian_invariants() const;

    bool operator==(const FiniteGroup& other) const { return table_ == other.table_; }

private:
    std::size_t order_;
    std::vector<std::vector<Elt>> table_;
    Elt identity_;
    std::vector<Elt> inverse_;
};

struct GroupQuotient {
    FiniteGroup group;
    std::vector<Elt> projection;
};

/// True iff phi (given on every element) is a homomorphism.
bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                     const std::vector<Elt>& phi);

}  // namespace stackyaut

#endif
