int acceptance_placeholder_test_linear_quotients;
