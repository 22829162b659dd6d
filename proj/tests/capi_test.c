/* Exercises the shared library through its C header only. */

#include <treefree/treefree.h>

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                      \
    do {                                                                  \
        if (!(cond)) {                                                    \
            fprintf(stderr, "%s:%d: expected %s (%s)\n", __FILE__, __LINE__, #cond, \
                    tf_last_error());                                     \
            ++failures;                                                   \
        }                                                                 \
    } while (0)

static int contains(const char* haystack, const char* needle)
{
    return haystack && strstr(haystack, needle) != NULL;
}

int main(void)
{
    tf_graph* g = NULL;
    tf_graph* bad = NULL;
    tf_tree* p4 = NULL;
    tf_tree* claw = NULL;
    char* out = NULL;
    int found = -1;
    int valid = 0;
    const int tri[] = {0, 1, 1, 2, 2, 0};
    const int loop[] = {0, 0};

    EXPECT(strcmp(tf_version(), "1.0.0") == 0);

    EXPECT(tf_graph_create(3, tri, 3, &g) == TF_OK);
    EXPECT(tf_graph_order(g) == 3);
    EXPECT(tf_graph_edge_count(g) == 3);
    tf_graph_free(g);
    g = NULL;

    EXPECT(tf_graph_create(2, loop, 1, &bad) == TF_ERR_INPUT);
    EXPECT(bad == NULL);
    EXPECT(strlen(tf_last_error()) > 0);
    EXPECT(tf_graph_create(3, tri, 3, NULL) == TF_ERR_NULL);

    EXPECT(tf_graph_generate("cycle:5", &g) == TF_OK);
    EXPECT(tf_tree_parse("path:4", &p4) == TF_OK);
    EXPECT(tf_tree_order(p4) == 4);
    EXPECT(tf_tree_radius(p4) == 2);
    EXPECT(tf_tree_parse("cycle:4", &claw) == TF_ERR_INPUT);
    EXPECT(tf_tree_parse("multibroom:(1,2)", &claw) == TF_OK);

    EXPECT(tf_find_induced_tree(g, p4, &found, &out) == TF_OK);
    EXPECT(found == 1);
    EXPECT(contains(out, "embedding"));
    tf_string_free(out);
    EXPECT(tf_find_induced_tree(g, claw, &found, &out) == TF_OK);
    EXPECT(found == 0);
    tf_string_free(out);

    EXPECT(tf_oracle_alpha_omega(g, &out) == TF_OK);
    EXPECT(contains(out, "\"alpha\":2"));
    tf_string_free(out);
    EXPECT(tf_oracle_frac_chromatic(g, &out) == TF_OK);
    EXPECT(contains(out, "5/2"));
    tf_string_free(out);

    EXPECT(tf_stable_sparse(g, p4, 2, 0, &out) == TF_OK);
    EXPECT(contains(out, "\"valid\":true"));
    tf_string_free(out);
    EXPECT(tf_stable_sparse(g, p4, 2, 1, &out) == TF_OK);
    EXPECT(contains(out, "\"valid\":true"));
    tf_string_free(out);
    EXPECT(tf_stable_multibroom(g, claw, 2, "random@3", &out) == TF_OK);
    EXPECT(contains(out, "\"valid\":true"));
    tf_string_free(out);
    EXPECT(tf_stable_multibroom(g, claw, 2, "gaussian", &out) == TF_ERR_INPUT);

    EXPECT(tf_frac_colouring(g, claw, 2, 16, &out) == TF_OK);
    EXPECT(contains(out, "\"valid\":true"));
    tf_string_free(out);

    EXPECT(tf_sparse_guarantee(1000, 50, p4, 2, &out) == TF_OK);
    EXPECT(contains(out, "\"c\":\"2560\""));
    tf_string_free(out);

    EXPECT(tf_graph_write(g, "dimacs", &out) == TF_OK);
    EXPECT(contains(out, "p edge 5 5"));
    tf_graph_free(g);
    g = NULL;
    EXPECT(tf_graph_read(out, "dimacs", &g) == TF_OK);
    EXPECT(tf_graph_edge_count(g) == 5);
    tf_string_free(out);
    EXPECT(tf_graph_read("p edge 2", "dimacs", &bad) == TF_ERR_INPUT);
    EXPECT(tf_graph_read("{}", "yaml", &bad) == TF_ERR_INPUT);

    EXPECT(tf_run_batch("{\"runs\":[{\"instance\":\"cycle:7\",\"tree\":\"path:4\",\"k\":2}]}", 0, &out, &valid) ==
           TF_OK);
    EXPECT(valid == 1);
    EXPECT(contains(out, "\"summary\":true"));
    tf_string_free(out);
    EXPECT(tf_run_batch("not json", 0, &out, &valid) == TF_ERR_INPUT);

    tf_graph_free(g);
    tf_tree_free(p4);
    tf_tree_free(claw);
    tf_graph_free(NULL);
    tf_string_free(NULL);

    if (failures)
        fprintf(stderr, "%d C API checks failed\n", failures);
    else
        printf("C API checks passed\n");
    return failures ? 1 : 0;
}
