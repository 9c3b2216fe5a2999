// seqwit.hpp
// Umbrella header.

#pragma once

#include "seqwit/cascade.hpp"
#include "seqwit/correlations.hpp"
#include "seqwit/errors.hpp"
#include "seqwit/measurement.hpp"
#include "seqwit/qmath.hpp"
#include "seqwit/random.hpp"
#include "seqwit/verify.hpp"
#include "seqwit/witness.hpp"
