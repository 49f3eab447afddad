#pragma once

#include "zetalab/bernoulli.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/identities.hpp"
#include "zetalab/numcore/error_bound.hpp"
#include "zetalab/numcore/errors.hpp"
#include "zetalab/numcore/pi_power.hpp"
#include "zetalab/numcore/primes.hpp"
#include "zetalab/numcore/rational.hpp"
#include "zetalab/numcore/real.hpp"
#include "zetalab/report_io.hpp"
#include "zetalab/zeta.hpp"
