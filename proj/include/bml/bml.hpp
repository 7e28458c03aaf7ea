#ifndef BML_BML_HPP
#define BML_BML_HPP

// Umbrella header for the Bonus-Malus pricing library.

#include "bml/base_premium.hpp"
#include "bml/bayes_relativity.hpp"
#include "bml/bms.hpp"
#include "bml/claim_count.hpp"
#include "bml/config.hpp"
#include "bml/derivative.hpp"
#include "bml/efficiency.hpp"
#include "bml/errors.hpp"
#include "bml/gamma_prior.hpp"
#include "bml/level_distribution.hpp"
#include "bml/linear_relativity.hpp"
#include "bml/log_value.hpp"
#include "bml/matrix.hpp"
#include "bml/mixture_family.hpp"
#include "bml/mixture_model.hpp"
#include "bml/partition.hpp"
#include "bml/presets.hpp"
#include "bml/quadrature.hpp"
#include "bml/report.hpp"
#include "bml/run.hpp"
#include "bml/stationary.hpp"
#include "bml/mixture_bounds.hpp"

#endif  // BML_BML_HPP
