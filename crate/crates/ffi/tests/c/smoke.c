#include <math.h>
#include <stdio.h>
#include <string.h>

#include "indel_bounds.h"

static int check_value(uint32_t q, uint32_t n, uint32_t d, const char *method, const char *want) {
    IbParams *params = NULL;
    IbBound *bound = NULL;
    char *value = NULL;
    int ok = ib_params_new(q, n, d, &params) == IB_STATUS_OK
          && ib_bound_evaluate(params, method, 0, &bound) == IB_STATUS_OK
          && ib_bound_value(bound, &value) == IB_STATUS_OK
          && strcmp(value, want) == 0;
    if (!ok) {
        fprintf(stderr, "%s(%u,%u,%u): got %s want %s\n", method, q, n, d, value ? value : "(none)", want);
    }
    ib_string_free(value);
    ib_bound_free(bound);
    ib_params_free(params);
    return ok;
}

int main(void) {
    int ok = 1;
    ok &= check_value(2, 20, 10, "thm1", "1295");
    ok &= check_value(2, 20, 10, "thm2", "2452");
    ok &= check_value(4, 40, 10, "cor3", "5251878194182");
    ok &= check_value(2, 6, 4, "exact", "10");

    IbParams *params = NULL;
    if (ib_params_new(2, 4, 3, &params) != IB_STATUS_INVALID_PARAMS || params != NULL) {
        fprintf(stderr, "odd d accepted\n");
        ok = 0;
    }
    char msg[256];
    ib_last_error_message(msg, sizeof msg);
    if (strstr(msg, "even") == NULL) {
        fprintf(stderr, "unexpected message: %s\n", msg);
        ok = 0;
    }

    double rate = 0.0;
    if (ib_rate(2, "cor2", 0.2, &rate) != IB_STATUS_OK || fabs(rate - 0.347590) > 1e-5) {
        fprintf(stderr, "cor2 rate %f\n", rate);
        ok = 0;
    }
    if (fabs(ib_bgh_threshold(2) - 0.414214) > 1e-6) {
        ok = 0;
    }
    printf("%s\n", ok ? "ok" : "FAILED");
    return ok ? 0 : 1;
}
