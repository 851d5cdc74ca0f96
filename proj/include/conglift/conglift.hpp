#pragma once

#include "conglift/error.hpp"
#include "conglift/sampling.hpp"

#include "conglift/exactring/concepts.hpp"
#include "conglift/exactring/euclid.hpp"
#include "conglift/exactring/integer_ring.hpp"
#include "conglift/exactring/poly_ring.hpp"
#include "conglift/exactring/product_ring.hpp"
#include "conglift/exactring/quotient_ring.hpp"
#include "conglift/exactring/ring_elem.hpp"

#include "conglift/matgroup/closure.hpp"
#include "conglift/matgroup/decompose.hpp"
#include "conglift/matgroup/elementary.hpp"
#include "conglift/matgroup/enumerate.hpp"
#include "conglift/matgroup/matrix.hpp"
#include "conglift/matgroup/symplectic.hpp"

#include "conglift/projspace/projspace.hpp"

#include "conglift/lifting/certificate.hpp"
#include "conglift/lifting/completion.hpp"
#include "conglift/lifting/residue_lift.hpp"
#include "conglift/lifting/sap_lift.hpp"
#include "conglift/lifting/surjectivity.hpp"

#include "conglift/conditions/ge.hpp"
#include "conglift/conditions/lemma41.hpp"
#include "conglift/conditions/sap.hpp"
#include "conglift/conditions/usc.hpp"
