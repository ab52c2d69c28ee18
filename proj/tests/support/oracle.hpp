#pragma once

#include <cstddef>
#include <vector>

namespace algres::oracle {

/// dim of the space of algebraic restrictions of quasi-homogeneous 2-forms of
/// quasi-degree d to t -> (t^l1, ..., t^ls) in R^s, by brute force: enumerate
/// every monomial 2-form of degree d, every generator (x^a - x^b) dx_i^dx_j and
/// d((x^a - x^b) dx_i) with wdeg(x^a) = wdeg(x^b), and take one rank of the
/// stacked matrix. Uses only GMP rationals; none of the library's linear algebra.
std::size_t dim_A2(const std::vector<int>& lambda, int d);

/// Number of monomial 2-forms of quasi-degree d.
std::size_t dim_V2(const std::vector<int>& lambda, int d);

}  // namespace algres::oracle
