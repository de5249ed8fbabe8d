#pragma once

// Exhaustive backtracking over maps of finite 2-categories. Variables are
// the non-identity 1-cells then the non-identity 2-cells of the domain, in
// id order; each table entry is checked as soon as its last cell is fixed.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "grayfac/kernel.hpp"

namespace grayfac {

/// Throws SizeLimit if c is larger than the per-operand bounds.
void check_operand_size(const Fin2Category& c, const Limits& limits);

/// All 2-functors a -> b in canonical order (object maps lexicographic, then
/// 1-cell images, then 2-cell images, each in codomain id order).
std::vector<TwoFunctor> enumerate_2functors(const Fin2CategoryPtr& a, const Fin2CategoryPtr& b,
                                            const Limits& limits = {}, bool parallel = true);

/// Number of 2-functors a -> b, without storing them.
std::size_t count_2functors(const Fin2CategoryPtr& a, const Fin2CategoryPtr& b, const Limits& limits = {},
                            bool parallel = true);

/// Calls visit on each 2-functor in canonical order; stops when visit returns false.
void for_each_2functor(const Fin2CategoryPtr& a, const Fin2CategoryPtr& b,
                       const std::function<bool(const TwoFunctor&)>& visit, const Limits& limits = {});

/// First isomorphism a -> b in canonical order, if any.
std::optional<TwoFunctor> find_isomorphism(const Fin2CategoryPtr& a, const Fin2CategoryPtr& b,
                                           const Limits& limits = {});

/// True when f is bijective on objects, 1-cells and 2-cells and its domain and
/// codomain tables have the same sizes (so its inverse is again a 2-functor).
bool is_isomorphism(const TwoFunctor& f);

/// Inverse of an isomorphism.
TwoFunctor inverse(const TwoFunctor& f);

}  // namespace grayfac
