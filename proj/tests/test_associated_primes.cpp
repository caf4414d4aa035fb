int acceptance_placeholder_test_associated_primes;
