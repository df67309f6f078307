#pragma once

// Umbrella header: exact construction and certification of parameter
// families of irreducible three-strand braid group representations.

#include "braidforge/braid.hpp"
#include "braidforge/cyclotomic.hpp"
#include "braidforge/errors.hpp"
#include "braidforge/family.hpp"
#include "braidforge/gamma0.hpp"
#include "braidforge/matrix.hpp"
#include "braidforge/quiver.hpp"
#include "braidforge/rational.hpp"
#include "braidforge/serialize.hpp"
