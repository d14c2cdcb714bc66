#pragma once

// Umbrella header: activity-log ingestion, TF-IDF vectorization, the
// bipartite actor-object graph, its statistics, and the exporters.

#include "activityvec/corpus.hpp"
#include "activityvec/errors.hpp"
#include "activityvec/export.hpp"
#include "activityvec/graph.hpp"
#include "activityvec/tfidf.hpp"
