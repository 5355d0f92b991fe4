// lifshitz.hpp -- umbrella header.
#ifndef LIFSHITZ_LIFSHITZ_HPP
#define LIFSHITZ_LIFSHITZ_HPP

#include "boundary_qm.hpp"
#include "bulk_geometry.hpp"
#include "duality_matcher.hpp"
#include "errors.hpp"
#include "quadrature.hpp"
#include "volume_engine.hpp"

#endif  // LIFSHITZ_LIFSHITZ_HPP
