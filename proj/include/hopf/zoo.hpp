#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/hopf.hpp"

namespace hopf {

/// Group algebra from a Cayley table (table[a][b] = index of ab, identity 0).
HopfData group_algebra(std::string name, const std::vector<std::vector<int>>& table,
                       std::vector<std::string> labels, Field f);
/// Named groups: C2, C3, C4, S3.
HopfData group_algebra(std::string_view group, Field f = Field::rationals());
/// Functions on a named group, delta basis.
HopfData dual_group_algebra(std::string_view group, Field f = Field::rationals());
/// Basis 1, g, x, gx; g^2 = 1, x^2 = 0, xg = -gx, Delta x = x (x) 1 + g (x) x.
HopfData sweedler_h4(Field f = Field::rationals());
/// Taft algebra of order n^2: g^n = 1, x^n = 0, xg = q gx with q of order exactly n.
/// Basis g^a x^b at index a + n b.
HopfData taft(int n, Field f, const Scalar& q);
/// Over F_p with the given primitive n-th root of unity.
HopfData taft(int n, std::int64_t p, std::int64_t root);

/// Cayley table and element labels of a named group.
std::pair<std::vector<std::vector<int>>, std::vector<std::string>> named_group(std::string_view g);

/// Resolves a builtin spec: kC2 kC3 kC4 kS3, k^C2 .. k^S3, sweedler_h4,
/// taft:<n>:<p>:<root>, group_algebra:<G>, dual_group_algebra:<G>, and the
/// doubles D(<spec>), Dtilde(<spec>), L(<spec>). When `field` is given the
/// result is moved to that field.
HopfData builtin(std::string_view spec, std::optional<Field> field = std::nullopt);
std::vector<std::string> builtin_names();

}  // namespace hopf
