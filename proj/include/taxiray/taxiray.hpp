#pragma once

// Umbrella header for the taxiray library.

#include "taxiray/bisect.hpp"
#include "taxiray/discrete.hpp"
#include "taxiray/distmean.hpp"
#include "taxiray/flow.hpp"
#include "taxiray/geometry.hpp"
#include "taxiray/gridrecon.hpp"
#include "taxiray/io.hpp"
#include "taxiray/reconstruct.hpp"
#include "taxiray/svg.hpp"
#include "taxiray/switching.hpp"
#include "taxiray/version.hpp"
