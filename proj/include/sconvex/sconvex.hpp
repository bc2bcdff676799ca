#pragma once

#include "sconvex/core.hpp"
#include "sconvex/quadrature.hpp"
#include "sconvex/identities.hpp"
#include "sconvex/sconvexity.hpp"
#include "sconvex/bounds.hpp"
#include "sconvex/means.hpp"
#include "sconvex/builtins.hpp"
#include "sconvex/explorer.hpp"
#include "sconvex/report_io.hpp"
