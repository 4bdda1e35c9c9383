#pragma once

#include "hfill/flag_complex.hpp"
#include "hfill/two_complex.hpp"

namespace hfill {

// Barycentric subdivision of a combinatorial 2-complex: every edge is halved
// through a midpoint, every k-gon face is coned from its barycenter into 2k
// triangles (spokes are per walk position, so repeated boundary vertices get
// distinct spokes). Preserves the Euler characteristic and homology. After
// two iterations the result of any combinatorial 2-complex is simplicial.
TwoComplex barycentric_subdivision(const TwoComplex& X, int iterations);

// Converts a simplicial 2-complex in TwoComplex form (triangle faces, no
// loops, no parallel edges, no repeated triangles) into a FlagComplex input.
// Rejects non-simplicial complexes.
FlagComplex to_simplicial(const TwoComplex& X);

} // namespace hfill
