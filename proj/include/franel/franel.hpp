#pragma once

#include "franel/bernoulli.hpp"
#include "franel/certificates.hpp"
#include "franel/integrator.hpp"
#include "franel/lattice.hpp"
#include "franel/polynomial.hpp"
#include "franel/rational.hpp"
