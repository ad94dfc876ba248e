#ifndef WIRETAP_WIRETAP_HPP
#define WIRETAP_WIRETAP_HPP

#include "wiretap/errors.hpp"
#include "wiretap/ldm.hpp"
#include "wiretap/scheme.hpp"
#include "wiretap/bounds.hpp"
#include "wiretap/verify.hpp"
#include "wiretap/gaussian.hpp"
#include "wiretap/sweep.hpp"
#include "wiretap/audit.hpp"

#endif
