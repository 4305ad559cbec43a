#pragma once

// Umbrella header.

#include "numeric.hpp"
#include "laurent.hpp"
#include "genfun.hpp"
#include "expand.hpp"
#include "thom.hpp"
#include "schur.hpp"
#include "assoc.hpp"
#include "exprparse.hpp"
#include "catalog.hpp"
