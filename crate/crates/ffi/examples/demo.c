/* Build: cc demo.c -I../include ../../../target/debug/libchipfire_ffi.a -lpthread -ldl -lm */
#include <stdio.h>
#include <stdlib.h>

#include "chipfire.h"

static int fail(const char *what, ChipfireStatus s) {
    const char *msg = chipfire_last_error();
    fprintf(stderr, "%s failed (%d): %s\n", what, (int)s, msg ? msg : "");
    return 1;
}

int main(void) {
    const int64_t re[5] = {3, 4, 7, -8, 3};
    const int64_t im[5] = {1, -6, 1, -8, 0};
    ChipfireConfig *c = NULL;
    ChipfireStatus s = chipfire_config_new(re, im, &c);
    if (s != CHIPFIRE_STATUS_OK) return fail("config_new", s);

    int64_t canon[5], xr[5], xi[5];
    s = chipfire_canonicalize(c, canon, xr, xi);
    if (s != CHIPFIRE_STATUS_OK) return fail("canonicalize", s);
    printf("canonical:");
    for (int k = 0; k < 5; k++) printf(" %lld", (long long)canon[k]);
    printf("\ncertificate:");
    for (int k = 0; k < 5; k++) printf(" (%lld,%lld)", (long long)xr[k], (long long)xi[k]);
    printf("\n");

    ChipfireMatroid *m = NULL;
    s = chipfire_matroid_new_r10(&m);
    if (s != CHIPFIRE_STATUS_OK) return fail("matroid_new_r10", s);
    int64_t factors[10], order = 0;
    size_t len = 0;
    s = chipfire_sandpile_group(m, factors, 10, &len, &order);
    if (s != CHIPFIRE_STATUS_OK) return fail("sandpile_group", s);
    uint64_t bases = 0;
    s = chipfire_count_bases(m, &bases);
    if (s != CHIPFIRE_STATUS_OK) return fail("count_bases", s);
    printf("group:");
    for (size_t k = 0; k < len; k++) printf(" %lld", (long long)factors[k]);
    printf(" order %lld bases %llu\n", (long long)order, (unsigned long long)bases);

    char *resp = chipfire_engine_request("{\"op\":\"group\",\"params\":{\"preset\":\"r10\"},\"id\":1}");
    printf("%s\n", resp);
    chipfire_string_free(resp);

    chipfire_matroid_free(m);
    chipfire_config_free(c);
    return 0;
}
