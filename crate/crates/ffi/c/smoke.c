/* Builds the smallest Pell-family solution through the C API, verifies it,
 * and runs a small search. Exits 0 on success. */
#include <stdio.h>
#include <string.h>

#include "taxicab5.h"

#define CHECK(call)                                                          \
    do {                                                                     \
        T5Status s_ = (call);                                                \
        if (s_ != T5_STATUS_OK) {                                            \
            fprintf(stderr, "%s failed (%d): %s\n", #call, (int)s_,          \
                    t5_last_error() ? t5_last_error() : "?");                \
            return 1;                                                        \
        }                                                                    \
    } while (0)

int main(void) {
    T5GaussInt *w, *x, *y, *z;
    CHECK(t5_gaussint_parse("3", &w));
    CHECK(t5_gaussint_parse("1", &x));
    CHECK(t5_gaussint_parse("2+3i", &y));
    CHECK(t5_gaussint_conj(y, &z));

    T5Quadruple *q;
    CHECK(t5_quadruple_new(w, x, y, z, 5, &q));
    bool ok = false;
    CHECK(t5_quadruple_verify(q, &ok));
    if (!ok) {
        fprintf(stderr, "3^5 + 1^5 = (2+3i)^5 + (2-3i)^5 did not verify\n");
        return 1;
    }

    T5GaussInt *sum;
    char *text;
    CHECK(t5_quadruple_left_sum(q, &sum));
    CHECK(t5_gaussint_to_string(sum, &text));
    if (strcmp(text, "244") != 0) {
        fprintf(stderr, "unexpected sum %s\n", text);
        return 1;
    }
    t5_string_free(text);

    T5GaussInt *bad = NULL;
    if (t5_gaussint_parse("2+3j", &bad) != T5_STATUS_PARSE_ERROR || bad != NULL) {
        fprintf(stderr, "parse error not reported\n");
        return 1;
    }

    T5SearchResult *r;
    size_t n = 0;
    CHECK(t5_search_run(3, 5, 2, false, &r));
    CHECK(t5_search_result_len(r, &n));
    printf("sum=244 classes(B=3)=%zu\n", n);

    t5_search_result_free(r);
    t5_gaussint_free(sum);
    t5_quadruple_free(q);
    t5_gaussint_free(w);
    t5_gaussint_free(x);
    t5_gaussint_free(y);
    t5_gaussint_free(z);
    return 0;
}
