#ifndef HFG_INSTANCES_HPP
#define HFG_INSTANCES_HPP

#include <cstddef>

#include "hfg/chain_complex.hpp"

namespace hfg {

/// Square-lattice cellulation of the 2-torus: Lx*Ly vertices, 2*Lx*Ly edges
/// (x-edges then y-edges), Lx*Ly faces.
ChainComplex torus_2d(std::size_t lx, std::size_t ly);

/// Cubic cellulation of the 3-torus: grades vertices/edges/faces/cubes.
ChainComplex torus_3d(std::size_t l);

/// Path of n edges on n+1 vertices (contractible test complex).
ChainComplex interval_complex(std::size_t n);

}  // namespace hfg

#endif
