#pragma once

#include "qphase/exact_states.hpp"
#include "qphase/husimi.hpp"
#include "qphase/interference.hpp"
#include "qphase/numerics.hpp"
#include "qphase/phase_geometry.hpp"
#include "qphase/states.hpp"
#include "qphase/version.hpp"
