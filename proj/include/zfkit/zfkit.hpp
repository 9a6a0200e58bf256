#pragma once

#include "zfkit/vertex_set.hpp"
#include "zfkit/graph.hpp"
#include "zfkit/canonical.hpp"
#include "zfkit/graph_io.hpp"
#include "zfkit/catalog.hpp"
#include "zfkit/forcing.hpp"
#include "zfkit/structure.hpp"
#include "zfkit/enumerate.hpp"
#include "zfkit/report.hpp"
#include "zfkit/verify.hpp"
