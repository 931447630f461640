// Convenience umbrella for the whole library.

#pragma once

#include "gf2mul/bitpoly.hpp"
#include "gf2mul/cost.hpp"
#include "gf2mul/errors.hpp"
#include "gf2mul/field.hpp"
#include "gf2mul/multipliers.hpp"
#include "gf2mul/naive.hpp"
#include "gf2mul/netlist.hpp"
#include "gf2mul/reduction.hpp"
#include "gf2mul/split.hpp"
