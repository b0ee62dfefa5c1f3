#pragma once

#include "blocks.hpp"
#include "builders.hpp"
#include "catalog.hpp"
#include "chordal.hpp"
#include "classify.hpp"
#include "cwexpr.hpp"
#include "errors.hpp"
#include "exact_cw.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "iso.hpp"
#include "modular.hpp"
#include "recognize.hpp"
#include "structure_cert.hpp"
#include "vertex_set.hpp"
