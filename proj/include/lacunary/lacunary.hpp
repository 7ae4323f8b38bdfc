#ifndef LACUNARY_LACUNARY_HPP
#define LACUNARY_LACUNARY_HPP

#include "lacunary/bv_function.hpp"
#include "lacunary/diophantine.hpp"
#include "lacunary/discrepancy.hpp"
#include "lacunary/lil_lab.hpp"
#include "lacunary/parallel.hpp"
#include "lacunary/rational.hpp"
#include "lacunary/rng.hpp"
#include "lacunary/sequence.hpp"
#include "lacunary/sigma.hpp"

#endif  // LACUNARY_LACUNARY_HPP
