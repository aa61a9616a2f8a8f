#pragma once

#include "fraudlex/default_lexicons.hpp"
#include "fraudlex/error.hpp"
#include "fraudlex/evaluation.hpp"
#include "fraudlex/features.hpp"
#include "fraudlex/marker_lexicon.hpp"
#include "fraudlex/model.hpp"
#include "fraudlex/sentiment.hpp"
#include "fraudlex/synth.hpp"
#include "fraudlex/tokenizer.hpp"
#include "fraudlex/transcript.hpp"
