#pragma once

#include "nsg/conditions.hpp"
#include "nsg/coverage.hpp"
#include "nsg/enumeration.hpp"
#include "nsg/error.hpp"
#include "nsg/intervals.hpp"
#include "nsg/parallel.hpp"
#include "nsg/record.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/verify.hpp"
