#pragma once

#include "board.hpp"
#include "counting.hpp"
#include "exact.hpp"
#include "kernel.hpp"
#include "quasipoly.hpp"
#include "table.hpp"
#include "verify.hpp"
