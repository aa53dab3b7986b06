#pragma once

#include "ring.hpp"
#include "weights.hpp"
#include "codes.hpp"
#include "graymaps.hpp"
#include "io.hpp"
#include "catalog.hpp"
