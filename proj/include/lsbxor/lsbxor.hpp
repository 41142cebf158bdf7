#pragma once

#include "lsbxor/analysis.hpp"
#include "lsbxor/bitcodec.hpp"
#include "lsbxor/error.hpp"
#include "lsbxor/image.hpp"
#include "lsbxor/payload.hpp"
#include "lsbxor/pgm.hpp"
#include "lsbxor/sharing.hpp"
#include "lsbxor/stego.hpp"
