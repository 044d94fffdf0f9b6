#pragma once

#include "cpdist/alaw.hpp"
#include "cpdist/bench.hpp"
#include "cpdist/density.hpp"
#include "cpdist/divisors.hpp"
#include "cpdist/errors.hpp"
#include "cpdist/estimate.hpp"
#include "cpdist/export.hpp"
#include "cpdist/ingest.hpp"
#include "cpdist/moments.hpp"
#include "cpdist/sampler.hpp"
