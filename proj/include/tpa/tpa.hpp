#ifndef tpa_tpa_hpp
#define tpa_tpa_hpp

#include "tpa/components.hpp"
#include "tpa/dim_vector.hpp"
#include "tpa/errors.hpp"
#include "tpa/layers.hpp"
#include "tpa/prime_field.hpp"
#include "tpa/quiver.hpp"
#include "tpa/representation.hpp"
#include "tpa/skeleton.hpp"
#include "tpa/socle.hpp"

#endif /* tpa_tpa_hpp */
