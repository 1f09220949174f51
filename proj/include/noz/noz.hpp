#pragma once

#include "noz/context.hpp"
#include "noz/decimal.hpp"
#include "noz/error.hpp"
#include "noz/functions.hpp"
