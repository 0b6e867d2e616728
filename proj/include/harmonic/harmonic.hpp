#pragma once

// Umbrella header: exact arithmetic, classification, search and bounded
// verification for harmonic-type numbers (ordinary, unitary, bi-unitary).

#include "harmonic/int128.hpp"
#include "harmonic/primes.hpp"
#include "harmonic/factorization.hpp"
#include "harmonic/multiplicative.hpp"
#include "harmonic/divisors.hpp"
#include "harmonic/ratio.hpp"
#include "harmonic/shape.hpp"
#include "harmonic/classify.hpp"
#include "harmonic/scan.hpp"
#include "harmonic/search.hpp"
#include "harmonic/census.hpp"
#include "harmonic/theorems.hpp"
#include "harmonic/format.hpp"
