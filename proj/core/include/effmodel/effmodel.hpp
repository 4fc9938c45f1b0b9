#pragma once

#include "effmodel/error.hpp"
#include "effmodel/hopf/classify.hpp"
#include "effmodel/hopf/presentation.hpp"
#include "effmodel/model/coaction.hpp"
#include "effmodel/model/conductor.hpp"
#include "effmodel/model/cover.hpp"
#include "effmodel/model/diagnostics.hpp"
#include "effmodel/model/effective.hpp"
#include "effmodel/model/report.hpp"
#include "effmodel/ring/base_element.hpp"
#include "effmodel/ring/lattice.hpp"
#include "effmodel/ring/mpoly.hpp"
#include "effmodel/ring/parse.hpp"
#include "effmodel/witt/identities.hpp"
#include "effmodel/witt/witt2.hpp"
