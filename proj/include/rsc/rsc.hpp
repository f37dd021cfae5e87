#pragma once

// Random simplicial complexes: sampling, threshold exponents, 2-core
// peeling, exact-geometry embedding certificates, Radon-match refutation,
// and Monte Carlo sweeps.

#include "alpha.hpp"
#include "binom.hpp"
#include "complex.hpp"
#include "embedding.hpp"
#include "errors.hpp"
#include "exponents.hpp"
#include "geometry.hpp"
#include "peel.hpp"
#include "radon.hpp"
#include "rng.hpp"
#include "sweep.hpp"
