#pragma once

#include "coreclust/baselines.hpp"
#include "coreclust/datatools.hpp"
#include "coreclust/errors.hpp"
#include "coreclust/gmm.hpp"
#include "coreclust/io.hpp"
#include "coreclust/mapreduce.hpp"
#include "coreclust/metric.hpp"
#include "coreclust/oracle.hpp"
#include "coreclust/outliers_cluster.hpp"
#include "coreclust/rng.hpp"
#include "coreclust/solution.hpp"
#include "coreclust/streaming.hpp"
