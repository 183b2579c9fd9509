#pragma once

#include "constructions.hpp"
#include "error.hpp"
#include "formulas.hpp"
#include "group.hpp"
#include "lemmas.hpp"
#include "number_theory.hpp"
#include "report.hpp"
#include "search.hpp"
#include "setops.hpp"
#include "subset.hpp"
#include "verify.hpp"
#include "witness_io.hpp"
