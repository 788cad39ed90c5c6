#pragma once

#include "gsp/dspcompat.hpp"
#include "gsp/error.hpp"
#include "gsp/filters.hpp"
#include "gsp/graphs.hpp"
#include "gsp/impulses.hpp"
#include "gsp/io.hpp"
#include "gsp/numkit.hpp"
#include "gsp/sampling.hpp"
#include "gsp/spectral.hpp"
#include "gsp/worked_examples.hpp"
