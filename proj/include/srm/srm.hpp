#pragma once

#include "srm/enumeration.hpp"
#include "srm/graph.hpp"
#include "srm/graph6.hpp"
#include "srm/isomorphism.hpp"
#include "srm/matching.hpp"
#include "srm/rng.hpp"
#include "srm/shifting.hpp"
#include "srm/spectral.hpp"
#include "srm/verify.hpp"
