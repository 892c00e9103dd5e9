#pragma once

#include "cacti/arith.hpp"
#include "cacti/error.hpp"
#include "cacti/formulas.hpp"
#include "cacti/oracle.hpp"
#include "cacti/series.hpp"
#include "cacti/statistics.hpp"
#include "cacti/tables.hpp"
