#pragma once

#include "fgen/compiler.hpp"
#include "fgen/factbase.hpp"
#include "fgen/fg_ast.hpp"
#include "fgen/fg_lex.hpp"
#include "fgen/fg_parse.hpp"
#include "fgen/lexicon.hpp"
#include "fgen/mapping.hpp"
#include "fgen/morphology.hpp"
#include "fgen/realizer.hpp"
#include "fgen/rl_ast.hpp"
#include "fgen/rl_format.hpp"
#include "fgen/rl_parse.hpp"
#include "fgen/rl_validate.hpp"
#include "fgen/source_span.hpp"
