// ness.hpp - Umbrella header

#pragma once

#include "ness/analysis.hpp"
#include "ness/correlations.hpp"
#include "ness/dynamics.hpp"
#include "ness/entropy.hpp"
#include "ness/optomech.hpp"
#include "ness/parallel.hpp"
#include "ness/sampler.hpp"
#include "ness/types.hpp"
