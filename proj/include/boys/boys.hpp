#pragma once

// Umbrella header for the Boys function library.

#include "boys/batch.hpp"
#include "boys/constants.hpp"
#include "boys/f0.hpp"
#include "boys/fn_top.hpp"
#include "boys/gauss_legendre.hpp"
#include "boys/oracle.hpp"
#include "boys/real_path.hpp"
#include "boys/recursion.hpp"
#include "boys/selftest.hpp"
#include "boys/tables.hpp"
#include "boys/types.hpp"
