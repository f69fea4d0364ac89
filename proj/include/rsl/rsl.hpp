#ifndef RSL_RSL_HPP
#define RSL_RSL_HPP

#include "rsl/approx.hpp"
#include "rsl/bitset.hpp"
#include "rsl/complement.hpp"
#include "rsl/irreducible.hpp"
#include "rsl/relation.hpp"
#include "rsl/rough_lattice.hpp"
#include "rsl/structure.hpp"
#include "rsl/topology.hpp"

#endif
