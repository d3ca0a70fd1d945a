#pragma once

#include "misinfo/checkpoint.hpp"
#include "misinfo/claimgate.hpp"
#include "misinfo/config.hpp"
#include "misinfo/corpus.hpp"
#include "misinfo/embedding.hpp"
#include "misinfo/errors.hpp"
#include "misinfo/features.hpp"
#include "misinfo/hash.hpp"
#include "misinfo/io.hpp"
#include "misinfo/legitimacy.hpp"
#include "misinfo/metrics.hpp"
#include "misinfo/neural.hpp"
#include "misinfo/pipeline.hpp"
#include "misinfo/rng.hpp"
#include "misinfo/textprep.hpp"
#include "misinfo/theme_map.hpp"
#include "misinfo/timeutil.hpp"
#include "misinfo/tweet.hpp"
#include "misinfo/virality.hpp"
