#pragma once

#include "ufc/error.hpp"
#include "ufc/alphabet.hpp"
#include "ufc/state_set.hpp"
#include "ufc/dfa.hpp"
#include "ufc/nfa.hpp"
#include "ufc/minimize.hpp"
#include "ufc/language.hpp"
#include "ufc/serialize.hpp"
#include "ufc/transformation.hpp"
#include "ufc/semigroup.hpp"
#include "ufc/formulas.hpp"
#include "ufc/lang_ops.hpp"
#include "ufc/atoms.hpp"
#include "ufc/witness.hpp"
#include "ufc/regex.hpp"
#include "ufc/report.hpp"
