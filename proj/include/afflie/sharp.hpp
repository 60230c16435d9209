#pragma once

#include <map>
#include <vector>

#include "afflie/paths.hpp"

namespace afflie {

// A path of P(L',L'') is passed as its Lambda''-part q together with L'.
// The result is the sharp(L')-part of the image, an element of
// P(sharp L'', sharp L').
Path sharp_path(const Path& q, const AffineWeight& lambda1);

Multipartition sharp_multipartition(const Multipartition& mp, const AffineWeight& lambda1);

// row length -> sorted colours at the left / right end of the rows of that length
std::map<int, std::vector<int>> left_end_colours(const Multipartition& mp);
std::map<int, std::vector<int>> right_end_colours(const Multipartition& mp);

// single partition made of all rows, for a fundamental lambda1 = L_u
Multipartition collect_rows(const Multipartition& mp, int u);

// membership in Y(L_u, Lambda) read off the row data only
bool js_membership_fundamental(const Multipartition& mp, int u);

} // namespace afflie
