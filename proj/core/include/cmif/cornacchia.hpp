#pragma once

// Splitting of rational primes in the CM field and elements of prime norm.

#include <cstdint>
#include <optional>

#include "cmif/quadorder.hpp"

namespace cmif {

enum class SplittingType { Split, Inert, Ramified };

const char* to_string(SplittingType t);

/// Splitting of p in the field of `order`, read off the Kronecker symbol.
SplittingType splitting_type(std::uint64_t p, const OrderDesc& order);

/// Tonelli-Shanks. Returns the smaller of the two roots, or nullopt when a is
/// a nonresidue mod the odd prime p.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);

/// Element of norm p in the maximal order of `order`'s field, for p split or
/// ramified; nullopt for inert p. Not canonicalized.
std::optional<QuadInt> find_norm_element(std::uint64_t p, const OrderDesc& order);

/// For split p, an element of `order` with norm p. Among its associates and
/// conjugates the representative with a > 0, b > 0 is preferred (smallest b,
/// then largest a); when no such representative exists the one with b > 0
/// and largest a is returned. nullopt when p does not split.
std::optional<QuadInt> solve_norm(std::uint64_t p, const OrderDesc& order);

}  // namespace cmif
