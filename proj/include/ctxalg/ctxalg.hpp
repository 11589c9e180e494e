#pragma once

// Umbrella header for the whole library.

#include "ctxalg/algebra.hpp"
#include "ctxalg/basis.hpp"
#include "ctxalg/context_function.hpp"
#include "ctxalg/degree.hpp"
#include "ctxalg/diag_operator.hpp"
#include "ctxalg/error.hpp"
#include "ctxalg/formula.hpp"
#include "ctxalg/io.hpp"
#include "ctxalg/language.hpp"
#include "ctxalg/parse.hpp"
#include "ctxalg/rng.hpp"
#include "ctxalg/semantics.hpp"
#include "ctxalg/strings.hpp"
#include "ctxalg/tolerances.hpp"
#include "ctxalg/truth_table.hpp"
#include "ctxalg/universe.hpp"
