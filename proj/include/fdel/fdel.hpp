#pragma once

// Convenience include for the whole library.

#include "fdel/geometry.hpp"
#include "fdel/hybrid.hpp"
#include "fdel/io.hpp"
#include "fdel/oracle.hpp"
#include "fdel/simulator.hpp"
#include "fdel/strategies.hpp"
