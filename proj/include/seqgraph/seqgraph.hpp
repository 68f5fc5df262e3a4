#pragma once

#include "seqgraph/bigfloat.hpp"
#include "seqgraph/bits.hpp"
#include "seqgraph/dyadic.hpp"
#include "seqgraph/embedding.hpp"
#include "seqgraph/errors.hpp"
#include "seqgraph/gaps.hpp"
#include "seqgraph/graph.hpp"
#include "seqgraph/iet.hpp"
#include "seqgraph/json_io.hpp"
#include "seqgraph/rotation.hpp"
#include "seqgraph/sequence.hpp"
#include "seqgraph/svg.hpp"
