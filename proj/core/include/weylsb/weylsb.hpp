#pragma once

#include "weylsb/action.hpp"
#include "weylsb/division.hpp"
#include "weylsb/extended_int.hpp"
#include "weylsb/format.hpp"
#include "weylsb/fuzz.hpp"
#include "weylsb/homogenize.hpp"
#include "weylsb/multi_index.hpp"
#include "weylsb/operator.hpp"
#include "weylsb/oracle.hpp"
#include "weylsb/order.hpp"
#include "weylsb/random.hpp"
#include "weylsb/scalar.hpp"
#include "weylsb/standard_basis.hpp"
