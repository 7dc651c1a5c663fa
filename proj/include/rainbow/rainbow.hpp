#pragma once

// umbrella header: the whole library in one include

#include "rainbow/binomial.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/hypergraph.hpp"
#include "rainbow/io.hpp"
#include "rainbow/prng.hpp"
#include "rainbow/proof_engine.hpp"
#include "rainbow/solver.hpp"
