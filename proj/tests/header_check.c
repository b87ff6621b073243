/* Compiled as C to keep the public header C-clean. */
#include <e2zeros/e2zeros.h>

const char* e2z_header_check_version(void) { return e2z_version(); }
