#include <stdio.h>
#include "redei.h"

int main(void) {
    RedeiPair *pair = NULL;
    if (redei_pair_new(13, 17, &pair) != REDEI_STATUS_OK) return 1;
    RedeiSolution sol;
    if (redei_pair_solution(pair, &sol) != REDEI_STATUS_OK) return 2;
    if (sol.x != -15 || sol.y != 4 || sol.z != 1) return 3;
    redei_pair_free(pair);

    if (redei_pair_new(5, 13, &pair) != REDEI_STATUS_INADMISSIBLE) return 4;
    if (redei_last_error() == NULL) return 5;

    RedeiPairCounts counts;
    if (redei_count_pairs(50, &counts) != REDEI_STATUS_OK) return 6;
    if (counts.ordered_linked != 10) return 7;

    int32_t s = 0;
    if (redei_legendre(2, 7, &s) != REDEI_STATUS_OK || s != 1) return 8;
    printf("ok\n");
    return 0;
}
