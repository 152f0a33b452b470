// Umbrella header.

#ifndef HODGEFLOW_HODGEFLOW_HPP
#define HODGEFLOW_HODGEFLOW_HPP

#include "hodgeflow/cochain.hpp"
#include "hodgeflow/complex.hpp"
#include "hodgeflow/hodge.hpp"
#include "hodgeflow/io.hpp"
#include "hodgeflow/metric_learning.hpp"
#include "hodgeflow/report.hpp"
#include "hodgeflow/version.hpp"
#include "hodgeflow/workload.hpp"

#endif  // HODGEFLOW_HODGEFLOW_HPP
