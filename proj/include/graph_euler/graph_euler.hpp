#ifndef GRAPH_EULER_GRAPH_EULER_HPP
#define GRAPH_EULER_GRAPH_EULER_HPP

#include "graph_euler/asymptotics.hpp"
#include "graph_euler/euler.hpp"
#include "graph_euler/forest_engine.hpp"
#include "graph_euler/graph_oracle.hpp"
#include "graph_euler/partition.hpp"
#include "graph_euler/partitions.hpp"
#include "graph_euler/rational.hpp"
#include "graph_euler/reference_table.hpp"
#include "graph_euler/series.hpp"
#include "graph_euler/series_json.hpp"
#include "graph_euler/treegen.hpp"

#endif
