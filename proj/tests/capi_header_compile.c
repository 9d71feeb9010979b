/* Compiles as plain C and drives the shared library through the public
 * header only. */
#include <lietheory.h>
#include <stdio.h>
#include <string.h>

static int check(int ok, const char* what) {
  if (!ok) {
    fprintf(stderr, "FAIL: %s (%s)\n", what, lt_last_error());
    return 1;
  }
  return 0;
}

int main(void) {
  int failures = 0;

  lt_algebra* algebra = NULL;
  failures += check(lt_algebra_create("su2", &algebra) == LT_OK, "create su2");
  if (algebra == NULL) return failures;

  size_t dim = 0;
  failures += check(lt_algebra_dim(algebra, &dim) == LT_OK && dim == 3,
                    "su2 has dimension 3");

  lt_root_system* roots = NULL;
  failures += check(lt_root_system_create(algebra, 1, 0.0, &roots) == LT_OK,
                    "root system of su2");
  lt_weyl_group* weyl = NULL;
  failures += check(lt_weyl_create(roots, &weyl) == LT_OK, "Weyl group");
  size_t order = 0;
  failures += check(lt_weyl_order(weyl, &order) == LT_OK && order == 2,
                    "Weyl order of su2 is 2");

  char* ascii = NULL;
  failures += check(lt_dynkin_ascii(roots, &ascii) == LT_OK &&
                        strcmp(ascii, "o") == 0,
                    "Dynkin diagram of su2 is a single node");
  lt_string_free(ascii);

  lt_algebra* bad = NULL;
  failures += check(lt_algebra_create("nope", &bad) == LT_ERROR_ARGUMENT,
                    "bad spec is rejected");

  lt_weyl_destroy(weyl);
  lt_root_system_destroy(roots);
  lt_algebra_destroy(algebra);
  return failures;
}
