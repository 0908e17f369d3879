#pragma once

#include "stereograph/chromatic.hpp"
#include "stereograph/errors.hpp"
#include "stereograph/generators.hpp"
#include "stereograph/graph.hpp"
#include "stereograph/isomorphism.hpp"
#include "stereograph/matrix.hpp"
#include "stereograph/merge.hpp"
#include "stereograph/polynomial.hpp"
#include "stereograph/serialization.hpp"
#include "stereograph/spectral.hpp"
#include "stereograph/stereotype_graph.hpp"
