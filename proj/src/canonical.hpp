#pragma once

#include <string>
#include <vector>

#include "multigraph.hpp"

namespace hc {

// Byte string equal for two multigraphs iff they are isomorphic; totally
// ordered, so it doubles as a dedup key.  Layout: [n][upper-triangle
// multiplicities in column order, 2 bits each, 4 pairs per byte].
using CanonicalForm = std::string;

CanonicalForm canonical_form(const MultiGraph& g);

// Minimization over all n! labelings; the independent oracle the refinement
// search is tested against.  Factorial, keep n small.
CanonicalForm canonical_form_exhaustive(const MultiGraph& g);

bool isomorphic(const MultiGraph& a, const MultiGraph& b);

// All automorphisms of g as permutation vectors (v -> sigma[v]).
// Intended for desk-scale n; the identity is always included.
std::vector<std::vector<int>> automorphisms(const MultiGraph& g);

// Encoding of g under the identity labeling (same layout as CanonicalForm,
// without the minimization).  canonical_form(g) == min over relabelings.
CanonicalForm encode_labeled(const MultiGraph& g);

}  // namespace hc
