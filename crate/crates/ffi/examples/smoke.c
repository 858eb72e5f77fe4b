#include <stdio.h>
#include <string.h>

#include "resyn.h"

int main(void) {
    const char *pos[] = {"ab-12", "xy-345"};
    const char *neg[] = {"ab12"};
    ResynRegex *re = NULL;
    if (resyn_synthesize(pos, 2, neg, 1, NULL, &re) != RESYN_STATUS_OK) {
        fprintf(stderr, "synthesis failed: %s\n", resyn_last_error_message());
        return 1;
    }
    char *s = resyn_regex_to_string(re);
    bool hit = false;
    resyn_regex_matches(re, "qq-7", &hit);
    printf("%s %d\n", s, hit);
    resyn_string_free(s);
    resyn_regex_free(re);

    ResynRegex *bad = NULL;
    if (resyn_regex_parse("(a", &bad) != RESYN_STATUS_PARSE_ERROR || bad != NULL) {
        return 1;
    }
    return resyn_last_error_message() == NULL;
}
