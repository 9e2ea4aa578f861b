#pragma once

// Everything except the command line.

#include "bounds.hpp"
#include "certificate_io.hpp"
#include "coloring_io.hpp"
#include "dilworth.hpp"
#include "errors.hpp"
#include "extract.hpp"
#include "lattice.hpp"
#include "poset.hpp"
#include "poset_copy.hpp"
#include "poset_io.hpp"
#include "search.hpp"
