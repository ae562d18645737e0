#pragma once

#include "finba/core/elementary_product.hpp"
#include "finba/core/errors.hpp"
#include "finba/core/field_algebra.hpp"
#include "finba/core/generated_algebra.hpp"
#include "finba/core/homomorphism.hpp"
#include "finba/core/products.hpp"
#include "finba/core/sikorski.hpp"
#include "finba/hypergraph/anticlique_algebra.hpp"
#include "finba/hypergraph/hypergraph.hpp"
#include "finba/hypergraph/poset.hpp"
#include "finba/independence/density.hpp"
#include "finba/independence/independence.hpp"
#include "finba/independence/maximal.hpp"
#include "finba/space/subbase.hpp"
