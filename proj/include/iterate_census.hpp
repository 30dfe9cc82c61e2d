#pragma once

#include "iterate_census/asymptotics.hpp"
#include "iterate_census/bignum.hpp"
#include "iterate_census/census.hpp"
#include "iterate_census/errors.hpp"
#include "iterate_census/exact_arith.hpp"
#include "iterate_census/index_set.hpp"
#include "iterate_census/iterate_tree.hpp"
#include "iterate_census/serialize.hpp"
#include "iterate_census/tableau.hpp"
#include "iterate_census/verify.hpp"
