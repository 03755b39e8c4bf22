#pragma once

#include "arguendo/af/dot.hpp"
#include "arguendo/af/framework.hpp"
#include "arguendo/af/semantics.hpp"
#include "arguendo/builder/builder.hpp"
#include "arguendo/dialogue/game.hpp"
#include "arguendo/dialogue/rules.hpp"
#include "arguendo/dialogue/strategy.hpp"
#include "arguendo/dialogue/transcript.hpp"
#include "arguendo/dkq/axioms.hpp"
#include "arguendo/dkq/derivation.hpp"
#include "arguendo/dkq/formula.hpp"
#include "arguendo/dkq/parse.hpp"
#include "arguendo/errors.hpp"
#include "arguendo/io/af_format.hpp"
#include "arguendo/io/kb_format.hpp"
#include "arguendo/io/script_format.hpp"
#include "arguendo/io/vaf_format.hpp"
#include "arguendo/logic/formula.hpp"
#include "arguendo/logic/knowledge_base.hpp"
#include "arguendo/logic/parse.hpp"
#include "arguendo/logic/semantics.hpp"
#include "arguendo/vaf/practice.hpp"
#include "arguendo/vaf/semantics.hpp"
#include "arguendo/vaf/value_framework.hpp"
