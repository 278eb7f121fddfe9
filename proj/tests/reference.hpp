#pragma once

#include <functional>
#include <vector>

#include "modrad/module.hpp"

// Definitional recomputations used as oracles. Everything here follows the
// textbook definition with no shortcuts or caching, so any disagreement
// with the library points at the library.
namespace ref {

modrad::DenseSet units(const modrad::Ring& R);
modrad::DenseSet jacobson(const modrad::Ring& R);
modrad::DenseSet nilradical(const modrad::Ring& R);
modrad::DenseSet zero_divisors(const modrad::Ring& R);

std::vector<long> divisors(long n);

// every submodule as an element set, found by closing generator sets
std::vector<modrad::DenseSet> submodule_sets(const modrad::Module& M);
modrad::DenseSet residual_scalars(const modrad::Module& M, const modrad::DenseSet& N);
bool prime_submodule_set(const modrad::Module& M, const modrad::DenseSet& N);
modrad::DenseSet m_rad_set(const modrad::Module& M, const modrad::DenseSet& N);

long find_first_serial(long n, const std::function<bool(long)>& pred);

}  // namespace ref
