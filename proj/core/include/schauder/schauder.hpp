#pragma once

#include "schauder/algebra.hpp"
#include "schauder/analysis.hpp"
#include "schauder/basis.hpp"
#include "schauder/bridge.hpp"
#include "schauder/grid.hpp"
#include "schauder/io.hpp"
#include "schauder/levelset.hpp"
#include "schauder/modulus.hpp"
#include "schauder/percolation.hpp"
#include "schauder/perturbation.hpp"
#include "schauder/regularity.hpp"
#include "schauder/rng.hpp"
#include "schauder/scan.hpp"
#include "schauder/schedule.hpp"
#include "schauder/series.hpp"
