#pragma once

#include "zerr/certificate.hpp"
#include "zerr/channel.hpp"
#include "zerr/constructions.hpp"
#include "zerr/errors.hpp"
#include "zerr/graph.hpp"
#include "zerr/independence.hpp"
#include "zerr/io.hpp"
#include "zerr/perfect.hpp"
#include "zerr/protocol.hpp"
#include "zerr/quantum.hpp"
