#pragma once

// Umbrella header for the whole library.

#include "piref/core/closure_laws.hpp"
#include "piref/core/institution.hpp"
#include "piref/core/morphism.hpp"
#include "piref/core/oracle.hpp"
#include "piref/core/report.hpp"
#include "piref/core/sentence.hpp"
#include "piref/core/signature.hpp"
#include "piref/core/term.hpp"
#include "piref/core/verdict.hpp"
#include "piref/corpus/check_corpus.hpp"
#include "piref/corpus/generators.hpp"
#include "piref/corpus/rng.hpp"
#include "piref/logics/boolean_algebra.hpp"
#include "piref/logics/boolean_eval.hpp"
#include "piref/logics/cpc.hpp"
#include "piref/logics/deductive_system.hpp"
#include "piref/logics/kripke.hpp"
#include "piref/logics/modal.hpp"
#include "piref/logics/sub_institution.hpp"
#include "piref/refinement/by_interpretation.hpp"
#include "piref/refinement/deductive_bridge.hpp"
#include "piref/refinement/syntactic.hpp"
#include "piref/specs/conservative.hpp"
#include "piref/specs/local.hpp"
#include "piref/specs/specification.hpp"
#include "piref/specs/structural.hpp"
#include "piref/translation/interpretation.hpp"
#include "piref/translation/multifunction.hpp"
#include "piref/translation/naturality.hpp"
#include "piref/translation/translation.hpp"
