#pragma once

// fdrqq: Benjamini-Hochberg FDR analysis and annotated Q-Q plots for
// p-value datasets. Everything lives in headers; include this one to get
// the full library.

#include "fdrqq/error.hpp"
#include "fdrqq/fdr.hpp"
#include "fdrqq/geometry.hpp"
#include "fdrqq/ingest.hpp"
#include "fdrqq/render.hpp"
#include "fdrqq/report.hpp"
#include "fdrqq/simulate.hpp"
#include "fdrqq/types.hpp"
