int acceptance_placeholder_test_json_io;
