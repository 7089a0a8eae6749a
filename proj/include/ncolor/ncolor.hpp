#pragma once

#include "arith.hpp"
#include "counting.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "identities.hpp"
#include "io.hpp"
#include "series.hpp"
