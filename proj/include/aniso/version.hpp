#pragma once

#define ANISO_VERSION "0.1.0"
