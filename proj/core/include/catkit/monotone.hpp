#pragma once

#include <string>
#include <vector>

namespace catkit {

/// Nondecreasing maps [k] -> [m] as value lists, in lexicographic order.
std::vector<std::vector<int>> monotone_maps(int k, int m);
/// Strictly increasing maps [k] -> [m] (face operators), lexicographic.
std::vector<std::vector<int>> injective_monotone_maps(int k, int m);
/// "(0,1,1)".
std::string format_values(const std::vector<int>& values);
/// Composite a∘b of maps given as value lists.
std::vector<int> compose_values(const std::vector<int>& a, const std::vector<int>& b);
/// The value list of the identity of [k].
std::vector<int> identity_values(int k);
/// d^i : [k-1] -> [k] skipping i.
std::vector<int> coface(int k, int i);
/// s^j : [k+1] -> [k] repeating j.
std::vector<int> codegeneracy(int k, int j);
/// Binomial coefficient.
long long binomial(int n, int r);

}  // namespace catkit
