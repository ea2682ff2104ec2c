#pragma once

#include "hardylab/core.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/multipliers.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/parallel.hpp"
#include "hardylab/random.hpp"
#include "hardylab/toeplitz.hpp"
#include "hardylab/version.hpp"
